#pragma once

#include <string>
#include <vector>

#include "powaut/group.hpp"

namespace powaut {

/// Directed graph on the group's elements with an arc x -> y whenever
/// x != y and y is a power of x. Adjacency lists are sorted element sets.
struct PowerDigraph {
  int n = 0;
  std::vector<std::vector<int>> out_adj;
  std::vector<std::vector<int>> in_adj;

  bool has_arc(int x, int y) const;
  std::size_t arc_count() const;
};

/// The underlying undirected graph of the power digraph.
struct PowerGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  bool has_edge(int x, int y) const;
  std::size_t edge_count() const;
};

PowerDigraph power_digraph(const FiniteGroup& g);
PowerGraph underlying_graph(const PowerDigraph& d);

/// N[x]: x together with its neighbors, sorted.
std::vector<int> closed_neighborhood(const PowerGraph& p, int x);

// DOT export with vertices labeled by element names. Line order is
// deterministic: all vertices by index, then arcs/edges sorted by
// (source, target).
std::string to_dot(const PowerDigraph& d, const FiniteGroup& g);
std::string to_dot(const PowerGraph& p, const FiniteGroup& g);

}  // namespace powaut
