#include "powaut/power_graph.hpp"

#include <algorithm>
#include <sstream>

namespace powaut {

namespace {

bool sorted_contains(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

bool PowerDigraph::has_arc(int x, int y) const { return sorted_contains(out_adj[x], y); }

std::size_t PowerDigraph::arc_count() const {
  std::size_t c = 0;
  for (const auto& a : out_adj) c += a.size();
  return c;
}

bool PowerGraph::has_edge(int x, int y) const { return sorted_contains(adj[x], y); }

std::size_t PowerGraph::edge_count() const {
  std::size_t c = 0;
  for (const auto& a : adj) c += a.size();
  return c / 2;
}

PowerDigraph power_digraph(const FiniteGroup& g) {
  PowerDigraph d;
  d.n = g.size();
  d.out_adj.resize(d.n);
  d.in_adj.resize(d.n);
  for (int x = 0; x < d.n; ++x) {
    std::vector<int> targets = g.cyclic_subgroup(x);
    targets.erase(std::remove(targets.begin(), targets.end(), x), targets.end());
    for (int y : targets) d.in_adj[y].push_back(x);
    d.out_adj[x] = std::move(targets);
  }
  for (auto& a : d.in_adj) std::sort(a.begin(), a.end());
  return d;
}

PowerGraph underlying_graph(const PowerDigraph& d) {
  PowerGraph p;
  p.n = d.n;
  p.adj.resize(p.n);
  for (int x = 0; x < d.n; ++x) {
    std::vector<int> nb;
    std::set_union(d.out_adj[x].begin(), d.out_adj[x].end(), d.in_adj[x].begin(),
                   d.in_adj[x].end(), std::back_inserter(nb));
    p.adj[x] = std::move(nb);
  }
  return p;
}

std::vector<int> closed_neighborhood(const PowerGraph& p, int x) {
  std::vector<int> nb = p.adj[x];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), x), x);
  return nb;
}

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string to_dot(const PowerDigraph& d, const FiniteGroup& g) {
  std::ostringstream os;
  os << "digraph {\n";
  for (int x = 0; x < d.n; ++x) os << "  " << quoted(g.element_name(x)) << ";\n";
  for (int x = 0; x < d.n; ++x)
    for (int y : d.out_adj[x])
      os << "  " << quoted(g.element_name(x)) << " -> " << quoted(g.element_name(y)) << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const PowerGraph& p, const FiniteGroup& g) {
  std::ostringstream os;
  os << "graph {\n";
  for (int x = 0; x < p.n; ++x) os << "  " << quoted(g.element_name(x)) << ";\n";
  for (int x = 0; x < p.n; ++x)
    for (int y : p.adj[x])
      if (x < y)
        os << "  " << quoted(g.element_name(x)) << " -- " << quoted(g.element_name(y)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace powaut
