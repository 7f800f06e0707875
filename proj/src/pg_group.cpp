#include "powaut/pg_group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace powaut {

namespace {

// Backtracking over subgroup ids: images are assigned largest subgroup first,
// candidates come from the invariant-vector grouping, and every partial
// assignment is kept consistent with inclusion and noninclusion in both
// directions.
class PgSearch {
 public:
  explicit PgSearch(const CyclicSubgroupTable& t) : t_(t), k_(t.count()) {
    assign_order_.resize(k_);
    for (int i = 0; i < k_; ++i) assign_order_[i] = i;
    std::sort(assign_order_.begin(), assign_order_.end(), [&](int a, int b) {
      if (t_.subgroups[a].order != t_.subgroups[b].order)
        return t_.subgroups[a].order > t_.subgroups[b].order;
      return a < b;
    });
    std::map<SubgroupInvariant, std::vector<int>> groups;
    for (int i = 0; i < k_; ++i) groups[invariant_vector(t_, i)].push_back(i);
    candidates_.resize(k_);
    for (int pos = 0; pos < k_; ++pos)
      candidates_[pos] = groups.at(invariant_vector(t_, assign_order_[pos]));
    img_.assign(k_, -1);
    used_.assign(k_, 0);
  }

  int size() const { return k_; }
  int point_at(int pos) const { return assign_order_[pos]; }
  const std::vector<int>& candidates_at(int pos) const { return candidates_[pos]; }

  // Both inclusion and noninclusion must be preserved against everything
  // already assigned; checking inclusion alone is not enough.
  bool consistent(int pos, int cand) const {
    int id = assign_order_[pos];
    for (int q = 0; q < pos; ++q) {
      int a = assign_order_[q], b = img_[a];
      if (t_.inclusion[a][id] != t_.inclusion[b][cand]) return false;
      if (t_.inclusion[id][a] != t_.inclusion[cand][b]) return false;
    }
    return true;
  }

  void assign(int pos, int cand) {
    img_[assign_order_[pos]] = cand;
    used_[cand] = 1;
  }
  void unassign(int pos) {
    int& slot = img_[assign_order_[pos]];
    used_[slot] = 0;
    slot = -1;
  }
  bool is_used(int cand) const { return used_[cand] != 0; }
  const Perm& image() const { return img_; }

  // Depth-first from position pos; cb(img) on every full assignment, return
  // true from cb to stop the whole search. Returns true iff stopped.
  template <class CB>
  bool dfs(int pos, CB&& cb) {
    if (pos == k_) return cb(img_);
    for (int cand : candidates_[pos]) {
      if (is_used(cand) || !consistent(pos, cand)) continue;
      assign(pos, cand);
      bool stop = dfs(pos + 1, cb);
      unassign(pos);
      if (stop) return true;
    }
    return false;
  }

  void reset() {
    std::fill(img_.begin(), img_.end(), -1);
    std::fill(used_.begin(), used_.end(), 0);
  }

 private:
  const CyclicSubgroupTable& t_;
  int k_;
  std::vector<int> assign_order_;
  std::vector<std::vector<int>> candidates_;
  Perm img_;
  std::vector<char> used_;
};

}  // namespace

std::vector<Perm> compute_pg(const CyclicSubgroupTable& t, std::uint64_t cap) {
  PgSearch search(t);
  std::vector<Perm> out;
  search.dfs(0, [&](const Perm& img) {
    if (out.size() >= cap)
      throw CapExceeded("P(G) enumeration exceeds cap", static_cast<std::uint64_t>(out.size()));
    out.push_back(img);
    return false;
  });
  std::sort(out.begin(), out.end());
  assert(std::adjacent_find(out.begin(), out.end()) == out.end());
  return out;
}

PgResult pg_group(const CyclicSubgroupTable& t) {
  PgSearch search(t);
  const int k = search.size();
  PgResult res;
  res.order = 1;
  for (int lvl = 0; lvl < k; ++lvl) {
    search.reset();
    for (int q = 0; q < lvl; ++q) search.assign(q, search.point_at(q));
    const int point = search.point_at(lvl);
    int orbit = 0;
    // Orbit of this point under the stabilizer of the previous points:
    // candidates with at least one completion to a full poset automorphism.
    for (int cand : search.candidates_at(lvl)) {
      if (search.is_used(cand) || !search.consistent(lvl, cand)) continue;
      if (cand == point) {
        ++orbit;  // the identity always completes
        continue;
      }
      search.assign(lvl, cand);
      Perm witness;
      bool found = search.dfs(lvl + 1, [&](const Perm& img) {
        witness = img;
        return true;
      });
      search.unassign(lvl);
      if (found) {
        ++orbit;
        res.generators.push_back(std::move(witness));
      }
    }
    res.order *= orbit;
  }
  std::sort(res.generators.begin(), res.generators.end());
  return res;
}

BigInt pg_order(const CyclicSubgroupTable& t) { return pg_group(t).order; }

Perm lift(const Perm& sigma, const CyclicSubgroupTable& t) {
  const int k = t.count();
  if (static_cast<int>(sigma.size()) != k)
    throw std::invalid_argument("lift: permutation degree does not match subgroup count");
  Perm out(t.elem_to_subgroup.size());
  for (int i = 0; i < k; ++i) {
    const auto& from = t.subgroups[i].generators;
    const auto& to = t.subgroups[sigma[i]].generators;
    if (from.size() != to.size())
      throw std::logic_error("lift: generator class sizes differ; input not order-preserving");
    for (std::size_t j = 0; j < from.size(); ++j) out[from[j]] = to[j];
  }
  return out;
}

}  // namespace powaut
