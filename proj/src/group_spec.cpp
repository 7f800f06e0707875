#include "powaut/group_spec.hpp"

#include <cctype>

namespace powaut {

namespace {

class SpecParser {
 public:
  explicit SpecParser(const std::string& s) : s_(s) {}

  FiniteGroup parse() {
    skip_ws();
    FiniteGroup g = parse_spec();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return g;
  }

 private:
  FiniteGroup parse_spec() {
    skip_ws();
    if (try_consume("Z:")) return make_builtin([](int n) { return make_cyclic(n); }, 1, "Z");
    if (try_consume("D:")) return make_builtin([](int n) { return make_dihedral(n); }, 3, "D");
    if (try_consume("Q:")) return make_builtin([](int n) { return make_quaternion(n); }, 2, "Q");
    if (try_consume("E:")) return parse_elementary();
    if (try_consume("prod(")) return parse_product();
    if (try_consume("perm:")) return parse_perm();
    if (try_consume("table:")) return parse_table();
    throw ParseError("expected one of Z: D: Q: E: prod( perm: table:", pos_);
  }

  template <class F>
  FiniteGroup make_builtin(F&& make, int min_value, const char* family) {
    std::size_t at = pos_;
    int n = parse_int();
    if (n < min_value)
      throw ParseError(std::string(family) + ":<n> requires n >= " + std::to_string(min_value),
                       at);
    return make(n);
  }

  FiniteGroup parse_elementary() {
    std::size_t at = pos_;
    int p = parse_int();
    if (!is_prime(p)) throw ParseError("E:<p>^<k> requires a prime p", at);
    if (!try_consume("^")) throw ParseError("expected '^' in E:<p>^<k>", pos_);
    at = pos_;
    int k = parse_int();
    if (k < 1) throw ParseError("E:<p>^<k> requires k >= 1", at);
    return make_elementary_abelian(p, k);
  }

  FiniteGroup parse_product() {
    FiniteGroup a = parse_spec();
    skip_ws();
    if (!try_consume(",")) throw ParseError("expected ',' in prod(,)", pos_);
    FiniteGroup b = parse_spec();
    skip_ws();
    if (!try_consume(")")) throw ParseError("expected ')' closing prod(", pos_);
    return direct_product(a, b);
  }

  FiniteGroup parse_perm() {
    std::size_t at = pos_;
    int degree = parse_int();
    if (degree < 1) throw ParseError("perm:<degree> requires degree >= 1", at);
    if (!try_consume(":")) throw ParseError("expected ':' after perm:<degree>", pos_);
    std::vector<Perm> gens;
    skip_ws();
    // Generators separated by ';', each a product of cycles "(0 1 2)(3 4)".
    // Stops at a top-level ',' or ')' so perm specs nest inside prod(...).
    while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')' && s_[pos_] != ';') {
      gens.push_back(parse_cycles(degree));
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ';') {
        ++pos_;
        skip_ws();
      }
    }
    return from_permutation_generators(degree, gens);
  }

  Perm parse_cycles(int degree) {
    Perm p = identity_perm(degree);
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != '(')
      throw ParseError("expected '(' starting a cycle", pos_);
    while (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      std::vector<int> cycle;
      skip_ws();
      while (pos_ < s_.size() && s_[pos_] != ')') {
        std::size_t at = pos_;
        int v = parse_int();
        if (v >= degree) throw ParseError("cycle entry exceeds degree", at);
        cycle.push_back(v);
        skip_ws();
        if (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == ',')) ++pos_;
        skip_ws();
      }
      if (!try_consume(")")) throw ParseError("unterminated cycle", pos_);
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
        if (p[from] != from) throw ParseError("cycles are not disjoint", pos_);
        p[from] = to;
      }
      skip_ws();
    }
    if (!is_permutation(p)) throw ParseError("cycles do not describe a permutation", pos_);
    return p;
  }

  FiniteGroup parse_table() {
    // Path runs to a top-level ',' or ')' so table specs nest inside prod(...).
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')') ++pos_;
    std::string path = s_.substr(start, pos_ - start);
    while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
    if (path.empty()) throw ParseError("table: requires a file path", start);
    return load_table_file(path);
  }

  int parse_int() {
    skip_ws();
    std::size_t at = pos_;
    long v = 0;
    bool any = false;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000'000) throw ParseError("number too large", at);
      ++pos_;
      any = true;
    }
    if (!any) throw ParseError("expected a number", at);
    return static_cast<int>(v);
  }

  bool try_consume(const char* tok) {
    std::size_t len = std::char_traits<char>::length(tok);
    if (s_.compare(pos_, len, tok) == 0) {
      pos_ += len;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteGroup parse_group_spec(const std::string& spec) { return SpecParser(spec).parse(); }

}  // namespace powaut
