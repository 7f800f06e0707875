#pragma once

#include <cstdint>
#include <vector>

#include "powaut/bigint.hpp"
#include "powaut/cyclic_structure.hpp"
#include "powaut/perm.hpp"

namespace powaut {

/// Every permutation of the cyclic subgroups preserving order, inclusion and
/// noninclusion, found by backtracking over subgroup ids (largest subgroups
/// assigned first, candidates restricted to matching invariant vectors).
/// Output is sorted lexicographically and duplicate-free. Throws CapExceeded
/// once more than cap permutations materialize.
std::vector<Perm> compute_pg(const CyclicSubgroupTable& t, std::uint64_t cap = 1'000'000);

/// Order and a generating set of the same permutation group, computed from an
/// orbit-stabilizer chain over the backtracking tree instead of materializing
/// every member. generators are coset representatives of the chain; they are
/// sorted and never include the identity.
struct PgResult {
  BigInt order;
  std::vector<Perm> generators;  // permutations of subgroup ids
};

PgResult pg_group(const CyclicSubgroupTable& t);

BigInt pg_order(const CyclicSubgroupTable& t);

/// The induced permutation of the group's elements: the j-th generator of
/// C_i goes to the j-th generator of C_sigma(i), with the table's fixed
/// ascending generator labeling. Lifting is a faithful homomorphism:
/// lift(compose(a,b)) == compose(lift(a), lift(b)).
Perm lift(const Perm& sigma, const CyclicSubgroupTable& t);

}  // namespace powaut
