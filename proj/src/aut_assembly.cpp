#include "powaut/aut_assembly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace powaut {

namespace {

std::string factored(const BigInt& pg, const std::vector<int>& blocks) {
  std::ostringstream os;
  os << pg.str() << " * ";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << "*";
    os << blocks[i] << "!";
  }
  return os.str();
}

// Adjacent transpositions inside each block, identity elsewhere; together
// with the lifted poset generators these generate the whole semidirect
// product while keeping the generator count linear.
void add_block_transpositions(std::vector<Perm>& gens, int n,
                              const std::vector<std::vector<int>>& blocks) {
  for (const auto& b : blocks) {
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      Perm t = identity_perm(n);
      std::swap(t[b[j]], t[b[j + 1]]);
      gens.push_back(std::move(t));
    }
  }
}

AutDescription assemble(const FiniteGroup& g, const CyclicSubgroupTable& t, const PgResult& pg,
                        const std::vector<std::vector<int>>& blocks, std::string variant) {
  AutDescription a;
  a.variant = std::move(variant);
  a.pg_order = pg.order;
  a.order = pg.order;
  for (const auto& b : blocks) {
    a.block_sizes.push_back(static_cast<int>(b.size()));
    a.order *= factorial(static_cast<int>(b.size()));
  }
  add_block_transpositions(a.generators, g.size(), blocks);
  for (const Perm& sigma : pg.generators) a.generators.push_back(lift(sigma, t));
  a.factored_shape = factored(pg.order, a.block_sizes);
  return a;
}

}  // namespace

AutDescription aut_directed(const FiniteGroup& g, const CyclicSubgroupTable& t,
                            const PgResult& pg) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(t.subgroups.size());
  for (const auto& c : t.subgroups) blocks.push_back(c.generators);
  return assemble(g, t, pg, blocks, "directed");
}

AutDescription aut_undirected(const FiniteGroup& g, const CyclicSubgroupTable& t,
                              const PgResult& pg, const std::vector<EquivalenceClass>& classes) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(classes.size());
  for (const auto& c : classes) blocks.push_back(c.elements);
  return assemble(g, t, pg, blocks, "undirected");
}

AutDescription aut_directed(const FiniteGroup& g) {
  CyclicSubgroupTable t = enumerate_cyclic_subgroups(g);
  return aut_directed(g, t, pg_group(t));
}

AutDescription aut_undirected(const FiniteGroup& g) {
  CyclicSubgroupTable t = enumerate_cyclic_subgroups(g);
  PowerGraph p = underlying_graph(power_digraph(g));
  return aut_undirected(g, t, pg_group(t), equivalence_classes(p, t, g));
}

namespace {

void require_digraph_automorphism(const Perm& pi, const PowerDigraph& d) {
  if (static_cast<int>(pi.size()) != d.n || !is_permutation(pi))
    throw NotAutomorphism("not a permutation of the vertex set", -1, -1);
  // A bijection mapping arcs into arcs maps the finite arc set onto itself,
  // so the forward check is enough.
  for (int x = 0; x < d.n; ++x)
    for (int y : d.out_adj[x])
      if (!d.has_arc(pi[x], pi[y]))
        throw NotAutomorphism("arc (" + std::to_string(x) + "," + std::to_string(y) +
                                  ") is not preserved",
                              x, y);
}

void require_graph_automorphism(const Perm& pi, const PowerGraph& p) {
  if (static_cast<int>(pi.size()) != p.n || !is_permutation(pi))
    throw NotAutomorphism("not a permutation of the vertex set", -1, -1);
  for (int x = 0; x < p.n; ++x)
    for (int y : p.adj[x])
      if (!p.has_edge(pi[x], pi[y]))
        throw NotAutomorphism("edge {" + std::to_string(x) + "," + std::to_string(y) +
                                  "} is not preserved",
                              x, y);
}

}  // namespace

DirectedDecomposition decompose_directed(const Perm& pi, const FiniteGroup& g,
                                         const CyclicSubgroupTable& t, const PowerDigraph& d) {
  require_digraph_automorphism(pi, d);
  const int k = t.count();

  // The induced map on the subgroup poset: <x> goes to <pi(x)>. A digraph
  // automorphism sends generators to generators, so the head generator is
  // enough to name the image subgroup; the full image set is verified.
  Perm sigma(k);
  for (int i = 0; i < k; ++i) {
    int image_id = t.elem_to_subgroup[pi[t.subgroups[i].generators[0]]].first;
    std::vector<int> img;
    img.reserve(t.subgroups[i].elements.size());
    for (int x : t.subgroups[i].elements) img.push_back(pi[x]);
    std::sort(img.begin(), img.end());
    if (img != t.subgroups[image_id].elements)
      throw std::logic_error("image of a cyclic subgroup is not a cyclic subgroup");
    sigma[i] = image_id;
  }

  DirectedDecomposition dec;
  dec.sigma = std::move(sigma);
  dec.xi = compose(pi, inverse(lift(dec.sigma, t)));
  for (int x = 0; x < g.size(); ++x)
    if (t.elem_to_subgroup[dec.xi[x]].first != t.elem_to_subgroup[x].first)
      throw std::logic_error("residual permutation does not fix generator classes");
  return dec;
}

Perm reglue_directed(const DirectedDecomposition& dec, const CyclicSubgroupTable& t) {
  return compose(dec.xi, lift(dec.sigma, t));
}

UndirectedDecomposition decompose_undirected(const Perm& pi, const FiniteGroup& g,
                                             const CyclicSubgroupTable& t, const PowerDigraph& d,
                                             const PowerGraph& p,
                                             const std::vector<EquivalenceClass>& classes) {
  require_graph_automorphism(pi, p);
  const Perm pi_inv = inverse(pi);

  Perm tau = identity_perm(g.size());
  for (const auto& c : classes) {
    switch (c.kind) {
      case ClassKind::TypeI: {
        // pi fixes the identity class setwise; invert it there.
        for (int x : c.elements) {
          int y = pi_inv[x];
          if (!std::binary_search(c.elements.begin(), c.elements.end(), y))
            throw std::logic_error("identity class is not fixed setwise");
          tau[x] = y;
        }
        break;
      }
      case ClassKind::TypeII:
        break;  // identity on single generator classes
      case ClassKind::TypeIII: {
        // Match elements of equal order between the class and its image,
        // ascending element index on both sides.
        std::vector<int> image;
        image.reserve(c.elements.size());
        for (int x : c.elements) image.push_back(pi[x]);
        std::sort(image.begin(), image.end());
        std::map<int, std::vector<int>> from_by_order, to_by_order;
        for (int x : c.elements) from_by_order[g.order_of(x)].push_back(x);
        for (int y : image) to_by_order[g.order_of(y)].push_back(y);
        if (from_by_order.size() != to_by_order.size())
          throw std::logic_error("class image has a different order profile");
        for (auto& [ord, xs] : from_by_order) {
          auto it = to_by_order.find(ord);
          if (it == to_by_order.end() || it->second.size() != xs.size())
            throw std::logic_error("class image has a different order profile");
          for (std::size_t m = 0; m < xs.size(); ++m) tau[xs[m]] = pi_inv[it->second[m]];
        }
        break;
      }
    }
  }

  Perm delta = compose(tau, pi);  // a digraph automorphism by construction
  DirectedDecomposition dd = decompose_directed(delta, g, t, d);
  UndirectedDecomposition dec;
  dec.tau = std::move(tau);
  dec.xi = std::move(dd.xi);
  dec.sigma = std::move(dd.sigma);
  return dec;
}

Perm reglue_undirected(const UndirectedDecomposition& dec, const CyclicSubgroupTable& t) {
  return compose(inverse(dec.tau), compose(dec.xi, lift(dec.sigma, t)));
}

bool directed_equals_undirected(const FiniteGroup& g) {
  CyclicSubgroupTable t = enumerate_cyclic_subgroups(g);
  PowerGraph p = underlying_graph(power_digraph(g));
  for (const auto& c : equivalence_classes(p, t, g))
    if (c.constituent_generator_classes.size() != 1) return false;
  return true;
}

namespace {

int euler_phi(int n) {
  int result = n;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

ConjectureReport conjecture_zn(int n, bool brute_cross_check) {
  if (n < 2) throw std::invalid_argument("conjecture_zn: n must be at least 2");
  ConjectureReport r;
  r.n = n;

  // Closed form: (phi(n)+1)! times phi(d)! over the divisors 1 < d < n.
  r.conjectured_order = factorial(euler_phi(n) + 1);
  for (int d = 2; d < n; ++d)
    if (n % d == 0) r.conjectured_order *= factorial(euler_phi(d));

  r.computed_order = aut_undirected(make_cyclic(n)).order;
  r.holds = r.conjectured_order == r.computed_order;

  int m = n;
  for (int q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      int e = 0;
      while (m % q == 0) {
        m /= q;
        ++e;
      }
      if (m == 1) {
        r.prime_power = true;
        r.prime_power_exponent = e;
      }
      break;
    }
  }
  if (m == n) {  // no divisor up to sqrt: n is prime
    r.prime_power = true;
    r.prime_power_exponent = 1;
  }
  return r;
}

nlohmann::ordered_json to_json(const AutDescription& a) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["variant"] = a.variant;
  j["order"] = a.order.str();
  j["pg_order"] = a.pg_order.str();
  j["block_sizes"] = a.block_sizes;
  j["factored"] = a.factored_shape;
  j["generators"] = nlohmann::ordered_json::array();
  for (const Perm& g : a.generators) j["generators"].push_back(g);
  return j;
}

}  // namespace powaut
