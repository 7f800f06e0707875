#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace powaut {

// A permutation of {0,...,n-1}, stored as its image table: p[i] is where i goes.
// Used both for permutations of group elements and for permutations of
// cyclic-subgroup ids; the degree tells them apart.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline bool is_identity(const Perm& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i) return false;
  return true;
}

bool is_permutation(const Perm& p);

// Apply f first, then g: compose(f,g)[x] == g[f[x]].
inline Perm compose(const Perm& f, const Perm& g) {
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = g[f[i]];
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

// Disjoint cycle form, fixed points omitted: "(1 4 5)(3 6 7)"; "()" for the identity.
std::string cycle_string(const Perm& p);

// Signals that a configured enumeration or closure limit was hit.
// partial_count holds how far the computation got before giving up.
struct CapExceeded : std::runtime_error {
  CapExceeded(const std::string& what, std::uint64_t partial)
      : std::runtime_error(what), partial_count(partial) {}
  std::uint64_t partial_count;
};

}  // namespace powaut
