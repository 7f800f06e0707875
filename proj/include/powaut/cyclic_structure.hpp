#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "powaut/group.hpp"

#include "json.hpp"

namespace powaut {

struct CyclicSubgroup {
  int id = 0;
  int order = 0;
  std::vector<int> elements;    // sorted
  std::vector<int> generators;  // ascending element index; generators[j] is the j-th label
};

/// All cyclic subgroups of a group, the partition of the elements into
/// generator classes, and the inclusion poset. Subgroups are sorted by
/// (order, lexicographic element set) so ids are reproducible.
struct CyclicSubgroupTable {
  std::vector<CyclicSubgroup> subgroups;
  // element -> (subgroup id whose generator class contains it, position within that class)
  std::vector<std::pair<int, int>> elem_to_subgroup;
  std::vector<std::vector<char>> inclusion;  // inclusion[i][j]: C_i subseteq C_j (reflexive)
  std::vector<std::vector<char>> hasse;      // covering relation of the poset

  int count() const { return static_cast<int>(subgroups.size()); }
  bool included(int i, int j) const { return inclusion[i][j] != 0; }
};

CyclicSubgroupTable enumerate_cyclic_subgroups(const FiniteGroup& g);

/// The generator class containing x: the full list of generators of <x>.
const std::vector<int>& generator_class(const CyclicSubgroupTable& t, int x);

/// A cheap necessary condition for one subgroup to map to another under an
/// order/inclusion-preserving permutation of the poset. Only prunes the
/// search; correctness never depends on it.
struct SubgroupInvariant {
  int order = 0;
  std::vector<int> below_orders;  // orders of subgroups strictly below, sorted
  std::vector<int> above_orders;  // orders of subgroups strictly above, sorted

  auto operator<=>(const SubgroupInvariant&) const = default;
};

SubgroupInvariant invariant_vector(const CyclicSubgroupTable& t, int i);

nlohmann::ordered_json to_json(const CyclicSubgroupTable& t);

}  // namespace powaut
