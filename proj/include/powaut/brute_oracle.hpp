#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powaut/aut_assembly.hpp"
#include "powaut/bigint.hpp"
#include "powaut/perm.hpp"
#include "powaut/power_graph.hpp"

namespace powaut {

// Ground truth by plain graph search. Nothing in here knows about groups,
// subgroup posets or neighborhood classes: pruning uses degree pairs and
// partial-image adjacency consistency only.

struct AutomorphismSet {
  std::vector<Perm> perms;  // sorted lexicographically
  BigInt count;             // == perms.size()
};

/// All vertex bijections preserving the arc relation both ways, by
/// backtracking in ascending vertex order. Throws CapExceeded with the
/// partial count once more than cap automorphisms are found.
AutomorphismSet digraph_automorphisms(const PowerDigraph& d, std::uint64_t cap = 1'000'000);
AutomorphismSet graph_automorphisms(const PowerGraph& p, std::uint64_t cap = 1'000'000);

/// Exact automorphism count without materializing the set: the product of
/// orbit sizes along the stabilizer chain with base 0,1,...,n-1, each orbit
/// membership decided by a completion search. witnesses holds one coset
/// representative per non-trivial orbit point; together they generate the
/// full automorphism group.
struct AutCount {
  BigInt count;
  std::vector<Perm> witnesses;
};

AutCount count_digraph_automorphisms(const PowerDigraph& d);
AutCount count_graph_automorphisms(const PowerGraph& p);

/// Breadth-first closure of the generated permutation group, sorted.
std::vector<Perm> closure(const std::vector<Perm>& gens, std::uint64_t cap = 10'000'000);
BigInt closure_order(const std::vector<Perm>& gens, std::uint64_t cap = 10'000'000);

/// Order of the generated permutation group by Schreier-Sims; no cap needed,
/// works for orders far beyond anything enumerable.
BigInt permutation_group_order(const std::vector<Perm>& gens, int degree);

struct VerifyCheck {
  bool pass = false;
  std::string detail;  // failure witness, or a note on how the check ran
};

/// Outcome of checking the assembled automorphism groups of one finite group
/// against the oracle. When the brute set fits under cap the set-level checks
/// run over every automorphism; otherwise counts stay exact (chain count,
/// Schreier-Sims order) and the per-element checks run over the chain's
/// witness generators and their products.
struct VerifyReport {
  std::string group_name;
  BigInt directed_order, undirected_order;        // assembled
  BigInt brute_digraph_count, brute_graph_count;  // oracle
  bool digraph_enumerated = false;  // full set materialized (vs counted)
  bool graph_enumerated = false;
  VerifyCheck order_directed;
  VerifyCheck order_undirected;
  VerifyCheck generator_closure;
  VerifyCheck decomposition;
  VerifyCheck class_preservation;

  bool all_passed() const {
    return order_directed.pass && order_undirected.pass && generator_closure.pass &&
           decomposition.pass && class_preservation.pass;
  }
  bool fully_enumerated() const { return digraph_enumerated && graph_enumerated; }
};

VerifyReport verify_group(const FiniteGroup& g, std::uint64_t cap = 1'000'000);

std::string format_report(const VerifyReport& r);

}  // namespace powaut
