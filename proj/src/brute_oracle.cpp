#include "powaut/brute_oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "powaut/group_spec.hpp"

namespace powaut {

namespace {

// Dense 0/1 relation with per-vertex degree invariants; the only structure
// the search is allowed to see.
struct DenseRel {
  int n = 0;
  std::vector<char> m;  // n*n
  std::vector<std::pair<int, int>> degs;  // (out, in); (deg, deg) for graphs

  char at(int x, int y) const { return m[static_cast<std::size_t>(x) * n + y]; }
};

DenseRel densify(const PowerDigraph& d) {
  DenseRel r;
  r.n = d.n;
  r.m.assign(static_cast<std::size_t>(d.n) * d.n, 0);
  r.degs.resize(d.n);
  for (int x = 0; x < d.n; ++x) {
    for (int y : d.out_adj[x]) r.m[static_cast<std::size_t>(x) * d.n + y] = 1;
    r.degs[x] = {static_cast<int>(d.out_adj[x].size()), static_cast<int>(d.in_adj[x].size())};
  }
  return r;
}

DenseRel densify(const PowerGraph& p) {
  DenseRel r;
  r.n = p.n;
  r.m.assign(static_cast<std::size_t>(p.n) * p.n, 0);
  r.degs.resize(p.n);
  for (int x = 0; x < p.n; ++x) {
    for (int y : p.adj[x]) r.m[static_cast<std::size_t>(x) * p.n + y] = 1;
    r.degs[x] = {static_cast<int>(p.adj[x].size()), static_cast<int>(p.adj[x].size())};
  }
  return r;
}

// Backtracker assigning vertex images in ascending vertex order; prunes by
// degree pairs and adjacency consistency with everything already assigned.
class AutSearch {
 public:
  explicit AutSearch(const DenseRel& rel) : rel_(rel), img_(rel.n, -1), used_(rel.n, 0) {}

  bool consistent(int v, int w) const {
    if (rel_.degs[v] != rel_.degs[w]) return false;
    for (int u = 0; u < v; ++u) {
      if (rel_.at(u, v) != rel_.at(img_[u], w)) return false;
      if (rel_.at(v, u) != rel_.at(w, img_[u])) return false;
    }
    return true;
  }

  template <class CB>
  bool dfs(int v, CB&& cb) {
    if (v == rel_.n) return cb(img_);
    for (int w = 0; w < rel_.n; ++w) {
      if (used_[w] || !consistent(v, w)) continue;
      img_[v] = w;
      used_[w] = 1;
      bool stop = dfs(v + 1, cb);
      used_[w] = 0;
      img_[v] = -1;
      if (stop) return true;
    }
    return false;
  }

  void reset() {
    std::fill(img_.begin(), img_.end(), -1);
    std::fill(used_.begin(), used_.end(), 0);
  }
  void pin(int v, int w) {
    img_[v] = w;
    used_[w] = 1;
  }
  void unpin(int v) {
    used_[img_[v]] = 0;
    img_[v] = -1;
  }
  bool is_used(int w) const { return used_[w] != 0; }

 private:
  const DenseRel& rel_;
  Perm img_;
  std::vector<char> used_;
};

AutomorphismSet enumerate_all(const DenseRel& rel, std::uint64_t cap) {
  AutSearch search(rel);
  AutomorphismSet out;
  search.dfs(0, [&](const Perm& img) {
    if (out.perms.size() >= cap)
      throw CapExceeded("automorphism enumeration exceeds cap",
                        static_cast<std::uint64_t>(out.perms.size()));
    out.perms.push_back(img);
    return false;
  });
  // Ascending candidate order makes the DFS emit in lexicographic order already.
  out.count = out.perms.size();
  return out;
}

AutCount count_all(const DenseRel& rel) {
  AutSearch search(rel);
  AutCount res;
  res.count = 1;
  for (int lvl = 0; lvl < rel.n; ++lvl) {
    search.reset();
    for (int v = 0; v < lvl; ++v) search.pin(v, v);
    int orbit = 0;
    for (int w = 0; w < rel.n; ++w) {
      if (search.is_used(w) || !search.consistent(lvl, w)) continue;
      if (w == lvl) {
        ++orbit;
        continue;
      }
      search.pin(lvl, w);
      Perm witness;
      bool found = search.dfs(lvl + 1, [&](const Perm& img) {
        witness = img;
        return true;
      });
      search.unpin(lvl);
      if (found) {
        ++orbit;
        res.witnesses.push_back(std::move(witness));
      }
    }
    res.count *= orbit;
  }
  std::sort(res.witnesses.begin(), res.witnesses.end());
  return res;
}

}  // namespace

AutomorphismSet digraph_automorphisms(const PowerDigraph& d, std::uint64_t cap) {
  return enumerate_all(densify(d), cap);
}

AutomorphismSet graph_automorphisms(const PowerGraph& p, std::uint64_t cap) {
  return enumerate_all(densify(p), cap);
}

AutCount count_digraph_automorphisms(const PowerDigraph& d) { return count_all(densify(d)); }

AutCount count_graph_automorphisms(const PowerGraph& p) { return count_all(densify(p)); }

std::vector<Perm> closure(const std::vector<Perm>& gens, std::uint64_t cap) {
  if (gens.empty()) return {};
  const int n = static_cast<int>(gens[0].size());
  std::set<Perm> seen;
  std::vector<Perm> todo{identity_perm(n)};
  seen.insert(todo[0]);
  for (std::size_t head = 0; head < todo.size(); ++head) {
    Perm cur = todo[head];
    for (const Perm& g : gens) {
      Perm nxt = compose(cur, g);
      if (seen.insert(nxt).second) {
        if (seen.size() > cap)
          throw CapExceeded("closure exceeds cap", static_cast<std::uint64_t>(seen.size()));
        todo.push_back(std::move(nxt));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

BigInt closure_order(const std::vector<Perm>& gens, std::uint64_t cap) {
  if (gens.empty()) return 1;
  return static_cast<std::uint64_t>(closure(gens, cap).size());
}

namespace {

// Deterministic Schreier-Sims. Levels hold a base point, the generators of
// the stabilizer of all earlier base points, and the orbit transversal of the
// base point under them.
class SchreierSims {
 public:
  explicit SchreierSims(int degree) : degree_(degree) {}

  void add_generator(const Perm& g) { add_at_level(0, g); }

  BigInt order() const {
    BigInt o = 1;
    for (const auto& lvl : levels_) o *= static_cast<std::uint64_t>(lvl.transversal.size());
    return o;
  }

  bool contains(const Perm& g) const {
    Perm r;
    return strip(g, 0, &r) == -1;
  }

 private:
  struct Level {
    int base = 0;
    std::vector<Perm> gens;
    std::map<int, Perm> transversal;  // point -> u with u[base] == point
  };

  // Sift g through levels starting at `from`. Returns -1 when g reduces to
  // the identity; otherwise the level where it got stuck (possibly one past
  // the current chain) with the residue in *residue.
  int strip(Perm g, std::size_t from, Perm* residue) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      if (is_identity(g)) return -1;
      int p = g[levels_[i].base];
      auto it = levels_[i].transversal.find(p);
      if (it == levels_[i].transversal.end()) {
        *residue = std::move(g);
        return static_cast<int>(i);
      }
      g = compose(g, inverse(it->second));
    }
    if (is_identity(g)) return -1;
    *residue = std::move(g);
    return static_cast<int>(levels_.size());
  }

  static int first_moved(const Perm& g) {
    for (int i = 0; i < static_cast<int>(g.size()); ++i)
      if (g[i] != i) return i;
    return -1;
  }

  void add_at_level(std::size_t lvl, const Perm& g) {
    Perm residue;
    int stuck = strip(g, lvl, &residue);
    if (stuck < 0) return;
    auto at = static_cast<std::size_t>(stuck);
    if (at == levels_.size()) levels_.push_back(Level{first_moved(residue), {}, {}});
    levels_[at].gens.push_back(residue);
    complete_level(at);
    // New points in deeper orbits create new Schreier generators upstream.
    for (std::size_t i = at; i-- > lvl;) complete_level(i);
  }

  // Grows the orbit transversal in place. Existing coset representatives are
  // never replaced; strips that reduced to the identity before keep doing so,
  // which is what makes the completion loop monotone.
  void extend_transversal(Level& L) const {
    if (L.transversal.empty()) L.transversal.emplace(L.base, identity_perm(degree_));
    std::vector<int> queue;
    queue.reserve(L.transversal.size());
    for (const auto& [p, u] : L.transversal) queue.push_back(p);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int p = queue[head];
      const Perm up = L.transversal.at(p);
      for (const Perm& s : L.gens) {
        int q = s[p];
        if (L.transversal.emplace(q, compose(up, s)).second) queue.push_back(q);
      }
    }
  }

  // Re-establish the defining property at this level: every Schreier
  // generator of the transversal sifts to the identity through the deeper
  // levels. Each failed sift strictly grows a deeper orbit, and orbit sizes
  // are bounded, so the loop terminates.
  void complete_level(std::size_t lvl) {
    for (;;) {
      extend_transversal(levels_[lvl]);
      bool clean = true;
      for (const auto& [p, up] : levels_[lvl].transversal) {
        for (const Perm& s : levels_[lvl].gens) {
          Perm sg = compose(compose(up, s), inverse(levels_[lvl].transversal.at(s[p])));
          if (is_identity(sg)) continue;
          Perm residue;
          int stuck = strip(sg, lvl + 1, &residue);
          if (stuck < 0) continue;
          add_at_level(lvl + 1, residue);
          clean = false;
          break;
        }
        if (!clean) break;
      }
      if (clean) return;
    }
  }

  int degree_;
  std::vector<Level> levels_;
};

}  // namespace

BigInt permutation_group_order(const std::vector<Perm>& gens, int degree) {
  SchreierSims ss(degree);
  for (const Perm& g : gens) {
    if (static_cast<int>(g.size()) != degree)
      throw std::invalid_argument("permutation_group_order: degree mismatch");
    ss.add_generator(g);
  }
  return ss.order();
}

namespace {

std::string perm_str(const Perm& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

bool preserves(const DenseRel& rel, const Perm& g) {
  for (int x = 0; x < rel.n; ++x)
    for (int y = 0; y < rel.n; ++y)
      if (rel.at(x, y) != rel.at(g[x], g[y])) return false;
  return true;
}

// Deterministic sample used when the full set is too large to materialize:
// the chain witnesses plus a bounded set of their pairwise products.
std::vector<Perm> witness_sample(const std::vector<Perm>& witnesses, int n) {
  std::set<Perm> s(witnesses.begin(), witnesses.end());
  s.insert(identity_perm(n));
  std::size_t budget = 512;
  for (const Perm& a : witnesses) {
    for (const Perm& b : witnesses) {
      if (s.size() >= budget) break;
      s.insert(compose(a, b));
    }
    if (s.size() >= budget) break;
  }
  return {s.begin(), s.end()};
}

}  // namespace

VerifyReport verify_group(const FiniteGroup& g, std::uint64_t cap) {
  VerifyReport rep;
  rep.group_name = g.name();

  const PowerDigraph d = power_digraph(g);
  const PowerGraph p = underlying_graph(d);
  const CyclicSubgroupTable t = enumerate_cyclic_subgroups(g);
  const PgResult pg = pg_group(t);
  const std::vector<EquivalenceClass> classes = equivalence_classes(p, t, g);
  const AutDescription ad = aut_directed(g, t, pg);
  const AutDescription au = aut_undirected(g, t, pg, classes);
  rep.directed_order = ad.order;
  rep.undirected_order = au.order;

  const DenseRel rel_d = densify(d);
  const DenseRel rel_p = densify(p);
  const AutCount cnt_d = count_all(rel_d);
  const AutCount cnt_p = count_all(rel_p);
  rep.brute_digraph_count = cnt_d.count;
  rep.brute_graph_count = cnt_p.count;

  rep.digraph_enumerated = cnt_d.count <= cap;
  rep.graph_enumerated = cnt_p.count <= cap;
  std::vector<Perm> all_d, all_p;
  if (rep.digraph_enumerated) all_d = enumerate_all(rel_d, cap).perms;
  if (rep.graph_enumerated) all_p = enumerate_all(rel_p, cap).perms;

  // (a)/(b) exact order agreement.
  rep.order_directed.pass = cnt_d.count == ad.order;
  if (!rep.order_directed.pass)
    rep.order_directed.detail = "brute " + cnt_d.count.str() + " != assembled " + ad.order.str();
  if (rep.digraph_enumerated && all_d.size() != cnt_d.count) {
    rep.order_directed.pass = false;
    rep.order_directed.detail = "enumeration/count mismatch";
  }
  rep.order_undirected.pass = cnt_p.count == au.order;
  if (!rep.order_undirected.pass)
    rep.order_undirected.detail = "brute " + cnt_p.count.str() + " != assembled " + au.order.str();
  if (rep.graph_enumerated && all_p.size() != cnt_p.count) {
    rep.order_undirected.pass = false;
    rep.order_undirected.detail = "enumeration/count mismatch";
  }

  // (c) the emitted generators generate exactly the brute automorphism set.
  rep.generator_closure.pass = true;
  {
    auto check_side = [&](const std::vector<Perm>& gens, const DenseRel& rel, bool enumerated,
                          const std::vector<Perm>& all, const BigInt& count,
                          const std::string& side) {
      if (!rep.generator_closure.pass) return;
      for (const Perm& gen : gens) {
        if (!preserves(rel, gen)) {
          rep.generator_closure.pass = false;
          rep.generator_closure.detail = side + " generator " + perm_str(gen) + " breaks an arc";
          return;
        }
      }
      if (enumerated) {
        std::vector<Perm> closed = closure(gens.empty() ? std::vector<Perm>{identity_perm(rel.n)}
                                                        : gens,
                                           cap + 1);
        if (closed != all) {
          rep.generator_closure.pass = false;
          rep.generator_closure.detail = side + " closure has " + std::to_string(closed.size()) +
                                         " elements, brute set " + std::to_string(all.size());
        }
      } else {
        BigInt generated = permutation_group_order(gens, rel.n);
        if (generated != count) {
          rep.generator_closure.pass = false;
          rep.generator_closure.detail = side + " generated order " + generated.str() +
                                         " != brute count " + count.str();
        }
      }
    };
    check_side(ad.generators, rel_d, rep.digraph_enumerated, all_d, cnt_d.count, "directed");
    check_side(au.generators, rel_p, rep.graph_enumerated, all_p, cnt_p.count, "undirected");
    if (rep.generator_closure.pass && !(rep.digraph_enumerated && rep.graph_enumerated))
      rep.generator_closure.detail = "order-based (sets beyond cap)";
  }

  // (d) decompose/reglue round-trip over every brute automorphism (or the
  // witness sample when the set is not materialized).
  rep.decomposition.pass = true;
  {
    const std::vector<Perm>& dig_set = rep.digraph_enumerated ? all_d : cnt_d.witnesses;
    for (const Perm& pi : dig_set) {
      DirectedDecomposition dec = decompose_directed(pi, g, t, d);
      if (reglue_directed(dec, t) != pi) {
        rep.decomposition.pass = false;
        rep.decomposition.detail = "directed round-trip fails for " + perm_str(pi);
        break;
      }
    }
    std::vector<Perm> graph_set =
        rep.graph_enumerated ? all_p : witness_sample(cnt_p.witnesses, p.n);
    for (const Perm& pi : graph_set) {
      if (!rep.decomposition.pass) break;
      UndirectedDecomposition dec = decompose_undirected(pi, g, t, d, p, classes);
      if (reglue_undirected(dec, t) != pi) {
        rep.decomposition.pass = false;
        rep.decomposition.detail = "undirected round-trip fails for " + perm_str(pi);
      }
    }
    if (rep.decomposition.pass && !(rep.digraph_enumerated && rep.graph_enumerated))
      rep.decomposition.detail = "ran over chain witnesses (sets beyond cap)";
  }

  // (e) neighborhood classes map to classes of the same kind and parameters.
  rep.class_preservation.pass = true;
  {
    std::map<std::vector<int>, const EquivalenceClass*> by_elements;
    for (const auto& c : classes) by_elements.emplace(c.elements, &c);
    std::vector<Perm> graph_set =
        rep.graph_enumerated ? all_p : witness_sample(cnt_p.witnesses, p.n);
    for (const Perm& pi : graph_set) {
      for (const auto& c : classes) {
        std::vector<int> img;
        img.reserve(c.elements.size());
        for (int x : c.elements) img.push_back(pi[x]);
        std::sort(img.begin(), img.end());
        auto it = by_elements.find(img);
        if (it == by_elements.end()) {
          rep.class_preservation.pass = false;
          rep.class_preservation.detail =
              "image of class " + std::to_string(c.id) + " under " + perm_str(pi) +
              " is not a class";
          break;
        }
        const EquivalenceClass& ic = *it->second;
        if (ic.kind != c.kind || ic.p != c.p || ic.r != c.r || ic.s != c.s) {
          rep.class_preservation.pass = false;
          rep.class_preservation.detail =
              "class " + std::to_string(c.id) + " changes type under " + perm_str(pi);
          break;
        }
      }
      if (!rep.class_preservation.pass) break;
    }
    if (rep.class_preservation.pass && !rep.graph_enumerated)
      rep.class_preservation.detail = "ran over chain witnesses (set beyond cap)";
  }

  return rep;
}

std::string format_report(const VerifyReport& r) {
  std::ostringstream os;
  os << "group " << r.group_name << "\n";
  os << "  directed:   assembled " << r.directed_order.str() << ", brute "
     << r.brute_digraph_count.str() << (r.digraph_enumerated ? " (enumerated)" : " (counted)")
     << "\n";
  os << "  undirected: assembled " << r.undirected_order.str() << ", brute "
     << r.brute_graph_count.str() << (r.graph_enumerated ? " (enumerated)" : " (counted)")
     << "\n";
  auto line = [&](const char* name, const VerifyCheck& c) {
    os << "  " << name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.detail.empty()) os << " [" << c.detail << "]";
    os << "\n";
  };
  line("order (directed)    ", r.order_directed);
  line("order (undirected)  ", r.order_undirected);
  line("generator closure   ", r.generator_closure);
  line("decomposition       ", r.decomposition);
  line("class preservation  ", r.class_preservation);
  os << "  result: " << (r.all_passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace powaut
