#pragma once

#include <stdexcept>
#include <vector>

#include "powaut/cyclic_structure.hpp"
#include "powaut/power_graph.hpp"

#include "json.hpp"

namespace powaut {

/// Thrown when a closed-neighborhood class does not have the structure a
/// class must have (not a union of generator classes, non-chain, orders not
/// consecutive powers of one prime). Always indicates an upstream bug or a
/// malformed input, never a legitimate runtime state.
struct ClassificationViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ClassKind { TypeI, TypeII, TypeIII };

/// One class of the relation x == y iff N[x] = N[y] on the power graph.
/// TypeI: contains the identity. TypeII: a single generator class. TypeIII:
/// a union of r >= 2 generator classes whose subgroups form a chain with
/// orders p^{s+1},...,p^{s+r}.
struct EquivalenceClass {
  int id = 0;
  std::vector<int> elements;  // sorted
  ClassKind kind = ClassKind::TypeI;
  int p = 0, r = 0, s = 0;    // parameters, TypeIII only
  std::vector<int> constituent_generator_classes;  // subgroup ids, ascending order
};

/// Partition of the vertices by equal closed neighborhood, classes sorted by
/// their minimum element. Classification deferred.
std::vector<std::vector<int>> equivalence_partition(const PowerGraph& p);

/// Classifies one class of the partition; throws ClassificationViolation if
/// the class does not decompose as required.
EquivalenceClass classify_class(const std::vector<int>& cls, const CyclicSubgroupTable& t,
                                const FiniteGroup& g, int id);

/// Partition and classify in one go.
std::vector<EquivalenceClass> equivalence_classes(const PowerGraph& p,
                                                  const CyclicSubgroupTable& t,
                                                  const FiniteGroup& g);

/// |class| == p^s (p^r - 1); defined for TypeIII classes only.
bool check_type3_size(const EquivalenceClass& c);

nlohmann::ordered_json to_json(const std::vector<EquivalenceClass>& classes);

}  // namespace powaut
