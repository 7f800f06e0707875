#include "powaut/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace powaut {

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void FiniteGroup::validate() const {
  const int n = n_;
  // Latin square: rows and columns are permutations.
  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int v = mul(r, c);
      if (v < 0 || v >= n || seen[v])
        throw GroupValidationError("row " + std::to_string(r) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int v = mul(r, c);
      if (seen[v])
        throw GroupValidationError("column " + std::to_string(c) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (int x = 0; x < n; ++x)
    if (mul(0, x) != x || mul(x, 0) != x)
      throw GroupValidationError("index 0 is not an identity");
  for (int x = 0; x < n; ++x)
    if (mul(x, inv_[x]) != 0 || mul(inv_[x], x) != 0)
      throw GroupValidationError("broken inverse for element " + std::to_string(x));

  auto assoc = [&](int a, int b, int c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(a, b, c))
            throw GroupValidationError("associativity fails at (" + std::to_string(a) + "," +
                                       std::to_string(b) + "," + std::to_string(c) + ")");
  } else {
    std::mt19937 rng(0x9e3779b9u);  // fixed seed, deterministic sampling
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 10000; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (!assoc(a, b, c))
        throw GroupValidationError("associativity fails at (" + std::to_string(a) + "," +
                                   std::to_string(b) + "," + std::to_string(c) + ")");
    }
  }
}

void FiniteGroup::finish_derived() {
  const int n = n_;
  inv_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (mul(x, y) == 0) {
        inv_[x] = y;
        break;
      }
    }
    if (inv_[x] < 0) throw GroupValidationError("element " + std::to_string(x) + " has no inverse");
  }
  elem_order_.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    int y = x, m = 1;
    while (y != 0) {
      y = mul(y, x);
      ++m;
      if (m > n) throw GroupValidationError("order of element " + std::to_string(x) + " exceeds n");
    }
    elem_order_[x] = m;
  }
  if (elem_names_.empty()) {
    elem_names_.reserve(n);
    for (int x = 0; x < n; ++x) elem_names_.push_back(std::to_string(x));
  }
}

FiniteGroup FiniteGroup::from_trusted_table(std::vector<int> flat, int n, std::string name,
                                            std::vector<std::string> element_names,
                                            bool family_names) {
  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(flat);
  g.name_ = std::move(name);
  g.elem_names_ = std::move(element_names);
  g.family_names_ = family_names;
  g.finish_derived();
#ifndef NDEBUG
  g.validate();
#endif
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name,
                                    std::vector<std::string> element_names) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw GroupValidationError("empty table");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n) throw GroupValidationError("table is not square");
  for (const auto& row : table)
    for (int v : row)
      if (v < 0 || v >= n) throw GroupValidationError("table entry out of range");

  // Locate the two-sided identity, then relabel it to index 0.
  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[cand][x] == x && table[x][cand] == x;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e < 0) throw GroupValidationError("table has no identity element");

  std::vector<int> relabel(n);
  for (int i = 0; i < n; ++i) relabel[i] = i;
  std::swap(relabel[0], relabel[e]);  // relabel is its own inverse

  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<std::size_t>(relabel[a]) * n + relabel[b]] = relabel[table[a][b]];
  if (!element_names.empty()) {
    if (static_cast<int>(element_names.size()) != n)
      throw GroupValidationError("element name count does not match table size");
    std::vector<std::string> renamed(n);
    for (int i = 0; i < n; ++i) renamed[relabel[i]] = element_names[i];
    element_names = std::move(renamed);
  }

  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(flat);
  g.name_ = std::move(name);
  g.elem_names_ = std::move(element_names);
  g.finish_derived();
  g.validate();
  return g;
}

std::vector<int> FiniteGroup::cyclic_subgroup(int x) const {
  std::vector<int> s{0};
  int y = x;
  while (y != 0) {
    s.push_back(y);
    y = mul(y, x);
  }
  std::sort(s.begin(), s.end());
  return s;
}

int FiniteGroup::max_element_order() const {
  return *std::max_element(elem_order_.begin(), elem_order_.end());
}

FiniteGroup make_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("make_cyclic: n must be positive");
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return FiniteGroup::from_trusted_table(std::move(flat), n, "Z_" + std::to_string(n),
                                         std::move(names), true);
}

namespace {

std::string power_name(const std::string& base, int i) {
  if (i == 0) return "e";
  if (i == 1) return base;
  return base + "^" + std::to_string(i);
}

}  // namespace

FiniteGroup make_dihedral(int n) {
  if (n < 3) throw std::invalid_argument("make_dihedral: n must be at least 3");
  const int N = 2 * n;
  // a^i at index i, a^i b at index n+i; b a = a^{-1} b.
  auto mul = [n](int u, int v) {
    int ui = u % n, ur = u / n;
    int vi = v % n, vr = v / n;
    if (ur == 0 && vr == 0) return (ui + vi) % n;
    if (ur == 0 && vr == 1) return n + (ui + vi) % n;
    if (ur == 1 && vr == 0) return n + ((ui - vi) % n + n) % n;
    return ((ui - vi) % n + n) % n;
  };
  std::vector<int> flat(static_cast<std::size_t>(N) * N);
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) flat[static_cast<std::size_t>(u) * N + v] = mul(u, v);
  std::vector<std::string> names(N);
  for (int i = 0; i < n; ++i) names[i] = power_name("a", i);
  for (int i = 0; i < n; ++i) names[n + i] = i == 0 ? "b" : power_name("a", i) + " b";
  return FiniteGroup::from_trusted_table(std::move(flat), N, "D_" + std::to_string(2 * n),
                                         std::move(names), true);
}

FiniteGroup make_quaternion(int n) {
  if (n < 2) throw std::invalid_argument("make_quaternion: n must be at least 2");
  const int N = 4 * n, m = 2 * n;
  // x^i at index i, x^i y at index 2n+i; y x = x^{-1} y and y^2 = x^n,
  // which forces (x^i y)(x^j y) = x^{i-j+n} and (x^i y)^{-1} = x^{n+i} y.
  auto mul = [n, m](int u, int v) {
    int ui = u % m, ur = u / m;
    int vi = v % m, vr = v / m;
    if (ur == 0 && vr == 0) return (ui + vi) % m;
    if (ur == 0 && vr == 1) return m + (ui + vi) % m;
    if (ur == 1 && vr == 0) return m + ((ui - vi) % m + m) % m;
    return ((ui - vi + n) % m + m) % m;
  };
  std::vector<int> flat(static_cast<std::size_t>(N) * N);
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) flat[static_cast<std::size_t>(u) * N + v] = mul(u, v);
  std::vector<std::string> names(N);
  for (int i = 0; i < m; ++i) names[i] = power_name("x", i);
  for (int i = 0; i < m; ++i) names[m + i] = i == 0 ? "y" : power_name("x", i) + " y";
  return FiniteGroup::from_trusted_table(std::move(flat), N, "Q_" + std::to_string(4 * n),
                                         std::move(names), true);
}

FiniteGroup make_elementary_abelian(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("make_elementary_abelian: p must be prime");
  if (k < 1) throw std::invalid_argument("make_elementary_abelian: k must be positive");
  int n = 1;
  for (int i = 0; i < k; ++i) {
    if (n > 5000 / p) throw std::invalid_argument("make_elementary_abelian: group too large");
    n *= p;
  }
  // Index encodes the coordinate vector base p, least significant first.
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int c = 0, pw = 1, ra = a, rb = b;
      for (int i = 0; i < k; ++i) {
        c += ((ra + rb) % p) * pw;
        ra /= p;
        rb /= p;
        pw *= p;
      }
      flat[static_cast<std::size_t>(a) * n + b] = c;
    }
  }
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    std::string s = "(";
    int ra = a;
    for (int i = 0; i < k; ++i) {
      if (i) s += ",";
      s += std::to_string(ra % p);
      ra /= p;
    }
    s += ")";
    names[a] = s;
  }
  return FiniteGroup::from_trusted_table(
      std::move(flat), n, "Z_" + std::to_string(p) + "^" + std::to_string(k), std::move(names),
      true);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.size(), nb = b.size();
  const int n = na * nb;
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          flat[static_cast<std::size_t>(a1 * nb + b1) * n + (a2 * nb + b2)] =
              a.mul(a1, a2) * nb + b.mul(b1, b2);
  std::vector<std::string> names(n);
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      names[a1 * nb + b1] = "(" + a.element_name(a1) + "," + b.element_name(b1) + ")";
  bool family = a.has_family_names() && b.has_family_names();
  return FiniteGroup::from_trusted_table(std::move(flat), n, a.name() + " x " + b.name(),
                                         std::move(names), family);
}

FiniteGroup from_permutation_generators(int degree, const std::vector<Perm>& gens,
                                        std::uint64_t cap) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  for (const Perm& g : gens)
    if (static_cast<int>(g.size()) != degree || !is_permutation(g))
      throw std::invalid_argument("generator is not a permutation of 0.." +
                                  std::to_string(degree - 1));
  std::map<Perm, int> seen;
  std::vector<Perm> todo{identity_perm(degree)};
  seen.emplace(todo[0], 0);
  for (std::size_t head = 0; head < todo.size(); ++head) {
    Perm cur = todo[head];
    for (const Perm& g : gens) {
      Perm nxt = compose(cur, g);
      if (seen.emplace(nxt, 0).second) {
        if (seen.size() > cap) throw CapExceeded("group too large: closure exceeds cap", cap);
        todo.push_back(std::move(nxt));
      }
    }
  }
  // std::map iterates lexicographically, so the identity gets index 0.
  const int n = static_cast<int>(seen.size());
  std::vector<Perm> elems;
  elems.reserve(n);
  int idx = 0;
  for (auto& [p, id] : seen) {
    id = idx++;
    elems.push_back(p);
  }
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      flat[static_cast<std::size_t>(i) * n + j] = seen.at(compose(elems[i], elems[j]));
  return FiniteGroup::from_trusted_table(std::move(flat), n,
                                         "perm<" + std::to_string(degree) + ">", {}, false);
}

FiniteGroup load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupValidationError("cannot open table file: " + path);
  int n = 0;
  if (!(in >> n) || n < 1) throw GroupValidationError("table file must start with n >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!(in >> table[r][c]))
        throw GroupValidationError("table file ended early (need " + std::to_string(n * n) +
                                   " entries)");
  return FiniteGroup::from_table(std::move(table), "table:" + path);
}

}  // namespace powaut
