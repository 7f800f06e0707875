#include "powaut/equivalence.hpp"

#include <algorithm>
#include <map>

namespace powaut {

std::vector<std::vector<int>> equivalence_partition(const PowerGraph& p) {
  std::map<std::vector<int>, std::vector<int>> by_nbhd;
  for (int x = 0; x < p.n; ++x) by_nbhd[closed_neighborhood(p, x)].push_back(x);
  std::vector<std::vector<int>> classes;
  classes.reserve(by_nbhd.size());
  for (auto& [nb, members] : by_nbhd) classes.push_back(std::move(members));
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  return classes;
}

namespace {

int smallest_prime_factor(int n) {
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

// n == p^m with m >= 1? returns m, or 0 if not.
int prime_power_exponent(int n, int p) {
  int m = 0;
  while (n % p == 0) {
    n /= p;
    ++m;
  }
  return n == 1 ? m : 0;
}

}  // namespace

EquivalenceClass classify_class(const std::vector<int>& cls, const CyclicSubgroupTable& t,
                                const FiniteGroup& g, int id) {
  EquivalenceClass c;
  c.id = id;
  c.elements = cls;
  std::sort(c.elements.begin(), c.elements.end());

  // The constituent generator classes, and the coverage check: the class must
  // be exactly a union of whole generator classes.
  std::vector<int> ids;
  std::size_t covered = 0;
  for (int x : c.elements) {
    int i = t.elem_to_subgroup[x].first;
    if (std::find(ids.begin(), ids.end(), i) == ids.end()) {
      ids.push_back(i);
      const auto& gens = t.subgroups[i].generators;
      if (!std::includes(c.elements.begin(), c.elements.end(), gens.begin(), gens.end()))
        throw ClassificationViolation("class splits the generator class of subgroup " +
                                      std::to_string(i));
      covered += gens.size();
    }
  }
  if (covered != c.elements.size())
    throw ClassificationViolation("class is not a union of generator classes");
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    return t.subgroups[a].order < t.subgroups[b].order;
  });
  c.constituent_generator_classes = ids;

  if (std::binary_search(c.elements.begin(), c.elements.end(), g.identity())) {
    c.kind = ClassKind::TypeI;
    return c;
  }
  if (ids.size() == 1) {
    c.kind = ClassKind::TypeII;
    return c;
  }

  // TypeIII: a chain of r >= 2 subgroups with orders p^{s+1},...,p^{s+r}.
  c.kind = ClassKind::TypeIII;
  c.r = static_cast<int>(ids.size());
  const int p = smallest_prime_factor(t.subgroups[ids[0]].order);
  int first_exp = prime_power_exponent(t.subgroups[ids[0]].order, p);
  if (first_exp == 0)
    throw ClassificationViolation("smallest constituent order is not a prime power");
  c.p = p;
  c.s = first_exp - 1;
  for (int q = 0; q < c.r; ++q) {
    int exp = prime_power_exponent(t.subgroups[ids[q]].order, p);
    if (exp != first_exp + q)
      throw ClassificationViolation("constituent orders are not consecutive powers of " +
                                    std::to_string(p));
    if (q + 1 < c.r && !t.included(ids[q], ids[q + 1]))
      throw ClassificationViolation("constituent subgroups do not form a chain");
  }
  return c;
}

std::vector<EquivalenceClass> equivalence_classes(const PowerGraph& p,
                                                  const CyclicSubgroupTable& t,
                                                  const FiniteGroup& g) {
  std::vector<EquivalenceClass> out;
  int id = 0;
  for (const auto& cls : equivalence_partition(p)) out.push_back(classify_class(cls, t, g, id++));
  return out;
}

bool check_type3_size(const EquivalenceClass& c) {
  if (c.kind != ClassKind::TypeIII)
    throw std::invalid_argument("check_type3_size: class is not of type III");
  long long expect = 1;
  for (int i = 0; i < c.s; ++i) expect *= c.p;
  long long pr = 1;
  for (int i = 0; i < c.r; ++i) pr *= c.p;
  expect *= pr - 1;
  return expect == static_cast<long long>(c.elements.size());
}

nlohmann::ordered_json to_json(const std::vector<EquivalenceClass>& classes) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["classes"] = nlohmann::ordered_json::array();
  for (const auto& c : classes) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    switch (c.kind) {
      case ClassKind::TypeI: e["type"] = "I"; break;
      case ClassKind::TypeII: e["type"] = "II"; break;
      case ClassKind::TypeIII:
        e["type"] = "III";
        e["p"] = c.p;
        e["r"] = c.r;
        e["s"] = c.s;
        break;
    }
    e["elements"] = c.elements;
    j["classes"].push_back(std::move(e));
  }
  return j;
}

}  // namespace powaut
