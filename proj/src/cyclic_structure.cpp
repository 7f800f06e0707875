#include "powaut/cyclic_structure.hpp"

#include <algorithm>
#include <map>

namespace powaut {

CyclicSubgroupTable enumerate_cyclic_subgroups(const FiniteGroup& g) {
  const int n = g.size();
  std::map<std::vector<int>, std::vector<int>> by_set;  // element set -> generators
  std::vector<std::vector<int>> sub_of(n);
  for (int x = 0; x < n; ++x) {
    std::vector<int> s = g.cyclic_subgroup(x);
    by_set[std::move(s)].push_back(x);
  }

  CyclicSubgroupTable t;
  t.subgroups.reserve(by_set.size());
  std::vector<std::pair<int, std::vector<int>>> order_and_set;
  for (auto& [set, gens] : by_set) {
    CyclicSubgroup c;
    c.order = static_cast<int>(set.size());
    c.elements = set;
    std::sort(gens.begin(), gens.end());
    c.generators = std::move(gens);
    t.subgroups.push_back(std::move(c));
  }
  std::sort(t.subgroups.begin(), t.subgroups.end(),
            [](const CyclicSubgroup& a, const CyclicSubgroup& b) {
              if (a.order != b.order) return a.order < b.order;
              return a.elements < b.elements;
            });
  const int k = t.count();
  for (int i = 0; i < k; ++i) t.subgroups[i].id = i;

  t.elem_to_subgroup.assign(n, {-1, -1});
  for (int i = 0; i < k; ++i) {
    const auto& gens = t.subgroups[i].generators;
    for (int j = 0; j < static_cast<int>(gens.size()); ++j)
      t.elem_to_subgroup[gens[j]] = {i, j};
  }

  t.inclusion.assign(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const auto& a = t.subgroups[i].elements;
      const auto& b = t.subgroups[j].elements;
      t.inclusion[i][j] =
          a.size() <= b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
    }
  }

  // Covering relation: i < j with nothing strictly between.
  t.hasse.assign(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j || !t.inclusion[i][j]) continue;
      bool covered = true;
      for (int m = 0; m < k && covered; ++m)
        if (m != i && m != j && t.inclusion[i][m] && t.inclusion[m][j]) covered = false;
      t.hasse[i][j] = covered;
    }
  }
  return t;
}

const std::vector<int>& generator_class(const CyclicSubgroupTable& t, int x) {
  return t.subgroups[t.elem_to_subgroup[x].first].generators;
}

SubgroupInvariant invariant_vector(const CyclicSubgroupTable& t, int i) {
  SubgroupInvariant v;
  v.order = t.subgroups[i].order;
  const int k = t.count();
  for (int j = 0; j < k; ++j) {
    if (j == i) continue;
    if (t.inclusion[j][i]) v.below_orders.push_back(t.subgroups[j].order);
    if (t.inclusion[i][j]) v.above_orders.push_back(t.subgroups[j].order);
  }
  std::sort(v.below_orders.begin(), v.below_orders.end());
  std::sort(v.above_orders.begin(), v.above_orders.end());
  return v;
}

nlohmann::ordered_json to_json(const CyclicSubgroupTable& t) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["subgroups"] = nlohmann::ordered_json::array();
  for (const auto& c : t.subgroups) {
    nlohmann::ordered_json s;
    s["id"] = c.id;
    s["order"] = c.order;
    s["elements"] = c.elements;
    s["generators"] = c.generators;
    j["subgroups"].push_back(std::move(s));
  }
  j["inclusion_pairs"] = nlohmann::ordered_json::array();
  const int k = t.count();
  for (int i = 0; i < k; ++i)
    for (int m = 0; m < k; ++m)
      if (i != m && t.inclusion[i][m]) j["inclusion_pairs"].push_back({i, m});
  return j;
}

}  // namespace powaut
