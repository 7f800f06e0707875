#pragma once

#include <string>
#include <vector>

#include "powaut/perm.hpp"

namespace powaut {

struct GroupValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite group given by an explicit multiplication table over element
/// indices 0..n-1. The identity is always index 0; constructors relabel if
/// necessary. Immutable after construction, so concurrent reads are safe.
class FiniteGroup {
 public:
  /// Builds a group from an untrusted table. Relabels so the identity lands
  /// at index 0, then checks the Latin-square, identity, inverse and
  /// associativity axioms (exhaustively for n <= 64, by 10,000 seeded random
  /// triples above). Throws GroupValidationError on any failure.
  static FiniteGroup from_table(std::vector<std::vector<int>> table, std::string name,
                                std::vector<std::string> element_names = {});

  int size() const { return n_; }
  int identity() const { return 0; }
  int mul(int x, int y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }
  int inv(int x) const { return inv_[x]; }
  /// Least m >= 1 with x^m = e.
  int order_of(int x) const { return elem_order_[x]; }

  const std::string& name() const { return name_; }
  const std::string& element_name(int x) const { return elem_names_[x]; }
  /// True when the group got element names from a family constructor
  /// (used for display labels; raw indices otherwise).
  bool has_family_names() const { return family_names_; }

  /// <x> = {x^0, x^1, ...} as a sorted element set.
  std::vector<int> cyclic_subgroup(int x) const;

  int max_element_order() const;
  bool is_cyclic() const { return max_element_order() == n_; }

  /// Re-runs the full axiom check; used by tests and debug builds.
  void validate() const;

 private:
  FiniteGroup() = default;
  static FiniteGroup from_trusted_table(std::vector<int> flat, int n, std::string name,
                                        std::vector<std::string> element_names,
                                        bool family_names);
  void finish_derived();

  friend FiniteGroup make_cyclic(int n);
  friend FiniteGroup make_dihedral(int n);
  friend FiniteGroup make_quaternion(int n);
  friend FiniteGroup make_elementary_abelian(int p, int k);
  friend FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  friend FiniteGroup from_permutation_generators(int degree, const std::vector<Perm>& gens,
                                                 std::uint64_t cap);

  int n_ = 0;
  std::vector<int> table_;  // n*n, row-major
  std::vector<int> inv_;
  std::vector<int> elem_order_;
  std::string name_;
  std::vector<std::string> elem_names_;
  bool family_names_ = false;
};

/// Z_n, addition mod n. Element k is the residue k.
FiniteGroup make_cyclic(int n);

/// D_2n (n >= 3): rotations a^0..a^{n-1} at indices 0..n-1, reflections
/// a^i b at indices n..2n-1, with b a b = a^{-1}.
FiniteGroup make_dihedral(int n);

/// Generalized quaternion Q_4n (n >= 2): x^i at indices 0..2n-1, x^i y at
/// indices 2n..4n-1, with x^{2n} = e, y^2 = x^n, y^{-1} x y = x^{-1}.
/// x^n is the unique involution.
FiniteGroup make_quaternion(int n);

/// Z_p^k: componentwise addition mod p; p must be prime.
FiniteGroup make_elementary_abelian(int p, int k);

/// A x B with componentwise multiplication; (a,b) at index a*|B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Closure of the given permutations of 0..degree-1 under composition.
/// Elements are indexed by lexicographic order of their image tables, which
/// puts the identity at index 0. Throws CapExceeded ("group too large") if
/// the closure grows past cap.
FiniteGroup from_permutation_generators(int degree, const std::vector<Perm>& gens,
                                        std::uint64_t cap = 5000);

/// Reads a table file: first line n, then n*n whitespace-separated 0-based
/// indices. Validates like from_table.
FiniteGroup load_table_file(const std::string& path);

bool is_prime(int p);

}  // namespace powaut
