#include "exspec/quotient_cases.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace exspec {

namespace {

int var_index(char c) {
  if (c == 'X') c = 'x';
  const auto pos = ParamPolynomial::kVariables.find(c);
  return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ParamPolynomial run() {
    ParamPolynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ExpressionError("expression '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  ParamPolynomial expr() {
    ParamPolynomial p = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      ParamPolynomial t = term();
      p = c == '+' ? p + t : p + (-t);
    }
    return p;
  }

  bool starts_factor(char c) const { return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == '*' || var_index(c) >= 0; }

  ParamPolynomial term() {
    ParamPolynomial p = unary();
    while (starts_factor(peek())) {
      if (peek() == '*') ++pos_;
      p = p * unary();
    }
    return p;
  }

  ParamPolynomial unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  ParamPolynomial power() {
    ParamPolynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a non-negative integer");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  ParamPolynomial primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      ParamPolynomial p = expr();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ParamPolynomial::constant(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (var_index(c) >= 0) {
      ++pos_;
      return ParamPolynomial::variable(c);
    }
    fail(c == '\0' ? "unexpected end" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// Determinant of a small integer matrix by cofactor expansion.
__int128 det_small(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m(0, 0);
  if (n == 2) return static_cast<__int128>(m(0, 0)) * m(1, 1) - static_cast<__int128>(m(0, 1)) * m(1, 0);
  __int128 total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const __int128 sub = det_small(minor) * m(0, j);
    total += (j % 2 ? -sub : sub);
  }
  return total;
}

// det(t I - Q)
__int128 char_value(const IntMatrix& q, long t) {
  IntMatrix m(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) m(i, j) = (i == j ? t : 0) - q(i, j);
  return det_small(m);
}

long upper_of(const QuotientCase& c, char p) {
  auto it = c.upper.find(p);
  return it == c.upper.end() ? 200 : it->second;
}

long lower_of(const QuotientCase& c, char p) {
  auto it = c.lower.find(p);
  return it == c.lower.end() ? 1 : it->second;
}

// Visit every assignment in the box lo[p]..hi[p].
template <class F>
void for_each_point(const std::vector<char>& params, const std::map<char, long>& lo, const std::map<char, long>& hi, F&& f) {
  std::map<char, long> v = lo;
  while (true) {
    f(v);
    std::size_t i = 0;
    for (; i < params.size(); ++i) {
      const char p = params[i];
      if (++v[p] <= hi.at(p)) break;
      v[p] = lo.at(p);
    }
    if (i == params.size()) return;
  }
}

std::map<char, long> project(const std::map<char, long>& v, const std::vector<char>& drop) {
  std::map<char, long> out;
  for (auto [k, val] : v)
    if (std::find(drop.begin(), drop.end(), k) == drop.end()) out[k] = val;
  return out;
}

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

std::vector<QuotientCase> make_cases() {
  using P = std::map<char, long>;
  auto a_ge_b = [](const P& v) { return v.at('a') >= v.at('b'); };
  std::vector<QuotientCase> cs;

  {
    QuotientCase c;
    c.name = "clique-pair-with-vertex";
    c.leads_to = "VI";
    c.params = {'a', 'b'};
    c.matrix = [](const P& v) {
      const long a = v.at('a'), b = v.at('b');
      return mat({{a - 1, b, 1}, {a, b - 1, 0}, {a, 0, 0}});
    };
    c.claimed = "a-ab-x+2ax+bx-2x^2+ax^2+bx^2-x^3";
    c.expected_two = {{{'a', 7}, {'b', 45}}, {{'a', 8}, {'b', 27}}, {{'a', 9}, {'b', 21}},
                      {{'a', 10}, {'b', 18}}, {{'a', 12}, {'b', 15}}, {{'a', 15}, {'b', 13}},
                      {{'a', 18}, {'b', 12}}, {{'a', 24}, {'b', 11}}, {{'a', 42}, {'b', 10}}};
    cs.push_back(std::move(c));
  }
  {
    QuotientCase c;
    c.name = "clique-pair-with-edge";
    c.leads_to = "V";
    c.params = {'a', 'b'};
    c.matrix = [](const P& v) {
      const long a = v.at('a'), b = v.at('b');
      return mat({{a - 1, b, 2}, {a, b - 1, 0}, {a, 0, 1}});
    };
    c.claimed = "1+a-b-2ab+x+2ax-x^2+ax^2+bx^2-x^3";
    c.expected_two = {{{'a', 2}, {'b', 9}}, {{'a', 3}, {'b', 6}}, {{'a', 6}, {'b', 5}}};
    cs.push_back(std::move(c));
  }
  {
    QuotientCase c;
    c.name = "two-edge-neighbourhoods";
    c.params = {'a', 'b'};
    c.matrix = [](const P& v) {
      const long a = v.at('a'), b = v.at('b');
      return mat({{a - 1, b, 2, 0}, {a, b - 1, 0, 2}, {a, 0, 1, 2}, {0, b, 2, 1}});
    };
    c.claimed = "-3+5a+5b-8ab-8x+5ax+5bx+4abx-6x^2-ax^2-bx^2-ax^3-bx^3+x^4";
    c.lower = {{'a', 4}, {'b', 4}};
    c.domain = a_ge_b;
    c.expected_two = {{{'a', 5}, {'b', 4}}};
    c.two_simple = true;
    cs.push_back(std::move(c));
  }
  {
    QuotientCase c;
    c.name = "edge-and-vertex-neighbourhoods";
    c.params = {'a', 'b'};
    c.matrix = [](const P& v) {
      const long a = v.at('a'), b = v.at('b');
      return mat({{a - 1, b, 2, 0}, {a, b - 1, 0, 1}, {a, 0, 1, 1}, {0, b, 2, 0}});
    };
    c.claimed = "-2+2a+3b-3ab-5x+ax+3bx+3abx-3x^2-2ax^2-bx^2+x^3-ax^3-bx^3+x^4";
    c.lower = {{'a', 4}, {'b', 4}};
    c.domain = a_ge_b;
    c.expected_two = {{{'a', 5}, {'b', 5}}};
    c.two_simple = true;
    cs.push_back(std::move(c));
  }
  {
    QuotientCase c;
    c.name = "two-vertex-neighbourhoods";
    c.params = {'a', 'b'};
    c.matrix = [](const P& v) {
      const long a = v.at('a'), b = v.at('b');
      return mat({{a - 1, b, 1, 0}, {a, b - 1, 0, 1}, {a, 0, 0, 1}, {0, b, 1, 0}});
    };
    c.claimed = "-1+a+b-ab-2x+2abx-2ax^2-2bx^2+2x^3-ax^3-bx^3+x^4";
    c.lower = {{'a', 4}, {'b', 4}};
    c.domain = a_ge_b;
    c.expected_two = {{{'a', 9}, {'b', 9}}, {{'a', 13}, {'b', 7}}, {{'a', 21}, {'b', 6}}};
    c.two_simple = true;
    cs.push_back(std::move(c));
  }
  {
    // m counts the triangles; no claimed polynomial, only the root claim
    QuotientCase c;
    c.name = "triangles-with-vertex";
    c.params = {'a', 'm'};
    c.matrix = [](const P& v) {
      const long a = v.at('a'), m = v.at('m');
      return mat({{a - 1, 3 * m, 0}, {a, 2, 1}, {0, 3 * m, 0}});
    };
    c.lower = {{'a', 3}, {'m', 2}};
    c.upper = {{'m', 60}};
    cs.push_back(std::move(c));
  }
  {
    QuotientCase c;
    c.name = "triangles-with-matching";
    c.leads_to = "IV";
    c.params = {'a', 'k', 'm'};
    c.matrix = [](const P& v) {
      const long a = v.at('a'), m = v.at('m'), k = v.at('k');
      return mat({{a - 1, 3 * m, 0}, {a, 2, 2 * k}, {0, 3 * m, 1}});
    };
    c.lower = {{'a', 3}, {'k', 1}, {'m', 2}};
    c.upper = {{'m', 30}};
    c.expected_two = {{{'a', 6}, {'k', 1}}, {{'a', 4}, {'k', 2}}};
    c.free_params = {'m'};
    cs.push_back(std::move(c));
  }
  {
    QuotientCase c;
    c.name = "independent-set-with-matching";
    c.leads_to = "VII";
    c.params = {'a', 'm'};
    c.matrix = [](const P& v) {
      const long a = v.at('a'), m = v.at('m');
      return mat({{a - 1, m, 0}, {a, 0, 2 * m - 2}, {0, m - 1, 1}});
    };
    c.claimed = "2-2a-4m+3am+2m^2-2am^2+3x-ax-4mx+amx+2m^2x+ax^2-x^3";
    c.lower = {{'a', 2}, {'m', 2}};
    c.expected_two = {{{'a', 6}, {'m', 3}}, {{'a', 4}, {'m', 4}}};
    cs.push_back(std::move(c));
  }
  {
    QuotientCase c;
    c.name = "independent-set-with-matching-and-apex";
    c.leads_to = "III";
    c.params = {'a', 'm'};
    c.matrix = [](const P& v) {
      const long a = v.at('a'), m = v.at('m');
      return mat({{a - 1, m, 0, 0}, {a, 0, 2 * m - 2, 0}, {0, m - 1, 1, 1}, {0, 0, 2 * m, 0}});
    };
    c.claimed = "(1+x)(2am^2-2x+2ax+2mx-amx-2m^2x-x^2-ax^2+x^3)";
    c.lower = {{'a', 1}, {'m', 2}};
    c.two_predicate = [](const P& v) { return v.at('a') == 2; };
    c.free_params = {'m'};
    c.expected_two = {{{'a', 2}}};
    c.minus_one_always = true;
    cs.push_back(std::move(c));
  }
  {
    QuotientCase c;
    c.name = "matching-with-independent-set";
    c.leads_to = "VIII";
    c.params = {'a', 'k'};
    c.matrix = [](const P& v) {
      const long a = v.at('a'), k = v.at('k');
      return mat({{a - 1, 2 * k, 0}, {a, 1, k - 1}, {0, 2 * k - 2, 0}});
    };
    c.claimed = "2-2a-4k+4ak+2k^2-2ak^2+3x-ax-4kx+2akx+2k^2x+ax^2-x^3";
    c.lower = {{'a', 1}, {'k', 2}};
    c.expected_two = {{{'a', 4}, {'k', 10}}, {{'a', 5}, {'k', 7}}, {{'a', 6}, {'k', 6}}, {{'a', 9}, {'k', 5}}};
    cs.push_back(std::move(c));
  }
  {
    QuotientCase c;
    c.name = "matching-with-independent-set-and-apex";
    c.leads_to = "IX";
    c.params = {'a', 'k'};
    c.matrix = [](const P& v) {
      const long a = v.at('a'), k = v.at('k');
      return mat({{a - 1, 2 * k, 0, 0}, {a, 1, k - 1, 0}, {0, 2 * k - 2, 0, 1}, {0, 0, k, 0}});
    };
    c.claimed = "(1+x)(k-ak+2ak^2-2x+2ax+3kx-2akx-2k^2x-x^2-ax^2+x^3)";
    c.lower = {{'a', 1}, {'k', 2}};
    c.expected_two = {{{'a', 3}, {'k', 4}}, {{'a', 5}, {'k', 3}}};
    c.minus_one_always = true;
    cs.push_back(std::move(c));
  }
  return cs;
}

}  // namespace

// ParamPolynomial -------------------------------------------------------------

ParamPolynomial ParamPolynomial::constant(const mpz_class& c) {
  ParamPolynomial p;
  if (c != 0) p.terms_[Exponents{}] = c;
  return p;
}

ParamPolynomial ParamPolynomial::variable(char name) {
  const int i = var_index(name);
  if (i < 0) throw ExpressionError(std::string("unknown variable '") + name + "'");
  Exponents e{};
  e[static_cast<std::size_t>(i)] = 1;
  ParamPolynomial p;
  p.terms_[e] = 1;
  return p;
}

ParamPolynomial ParamPolynomial::parse(std::string_view text) { return Parser(text).run(); }

int ParamPolynomial::degree_in(char name) const {
  const int i = var_index(name);
  if (i < 0) throw ExpressionError(std::string("unknown variable '") + name + "'");
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
  return d;
}

IntPolynomial ParamPolynomial::in_x(const std::map<char, long>& values) const {
  std::vector<mpz_class> out;
  for (const auto& [e, c] : terms_) {
    mpz_class t = c;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = values.find(kVariables[i]);
      if (it == values.end()) throw ExpressionError(std::string("no value for '") + kVariables[i] + "'");
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), mpz_class(it->second).get_mpz_t(), static_cast<unsigned long>(e[i]));
      t *= p;
    }
    const auto xd = static_cast<std::size_t>(e[4]);
    if (out.size() <= xd) out.resize(xd + 1);
    out[xd] += t;
  }
  return IntPolynomial(std::move(out));
}

void ParamPolynomial::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

ParamPolynomial ParamPolynomial::operator+(const ParamPolynomial& o) const {
  ParamPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.terms_[e] += c;
  r.prune();
  return r;
}

ParamPolynomial ParamPolynomial::operator-() const {
  ParamPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

ParamPolynomial ParamPolynomial::operator*(const ParamPolynomial& o) const {
  ParamPolynomial r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.terms_[e] += c1 * c2;
    }
  r.prune();
  return r;
}

ParamPolynomial ParamPolynomial::pow(unsigned e) const {
  ParamPolynomial r = constant(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

// Cases ---------------------------------------------------------------------

const std::vector<QuotientCase>& quotient_cases() {
  static const std::vector<QuotientCase> cases = make_cases();
  return cases;
}

std::string format_params(const std::map<char, long>& values) {
  std::string s = "(";
  for (auto [k, v] : values) {
    if (s.size() > 1) s += ',';
    s += k;
    s += '=';
    s += std::to_string(v);
  }
  return s + ")";
}

QuotientCaseReport verify_quotient_case(const QuotientCase& c) {
  QuotientCaseReport rep;
  rep.name = c.name;

  std::map<char, long> probe;
  for (char p : c.params) probe[p] = lower_of(c, p);
  const std::size_t dim = c.matrix(probe).size();

  if (c.claimed) {
    rep.identity_checked = true;
    const ParamPolynomial claimed = ParamPolynomial::parse(*c.claimed);
    // a polynomial of degree <= d in each variable is fixed by a (d+1)^vars grid
    std::map<char, long> lo, hi;
    for (char p : c.params) {
      lo[p] = 1;
      hi[p] = std::max<long>(static_cast<long>(dim), claimed.degree_in(p)) + 1;
    }
    for (char v : ParamPolynomial::kVariables)
      if (v != 'x' && claimed.degree_in(v) > 0 && std::find(c.params.begin(), c.params.end(), v) == c.params.end())
        throw ExpressionError(c.name + ": claimed polynomial uses unknown parameter " + std::string(1, v));
    for_each_point(c.params, lo, hi, [&](const std::map<char, long>& v) {
      ++rep.grid_points;
      const IntPolynomial det = char_poly(c.matrix(v));
      const IntPolynomial got = claimed.in_x(v);
      int sign = 0;
      if (got == det)
        sign = 1;
      else if (got == -det)
        sign = -1;
      if (rep.sign == 0) rep.sign = sign;
      if ((sign == 0 || sign != rep.sign) && rep.identity_holds) {
        rep.identity_holds = false;
        rep.counterexample = format_params(v) + ": claimed " + got.to_string() + ", det(xI-Q) = " + det.to_string();
      }
    });
  }

  std::map<char, long> lo, hi;
  for (char p : c.params) {
    lo[p] = lower_of(c, p);
    hi[p] = upper_of(c, p);
  }
  auto claimed = [&](const std::map<char, long>& v) {
    if (c.two_predicate) return c.two_predicate(v);
    const auto key = project(v, c.free_params);
    return std::find(c.expected_two.begin(), c.expected_two.end(), key) != c.expected_two.end();
  };

  std::set<std::map<char, long>> found;
  std::string two_mismatch, minus_mismatch;
  for_each_point(c.params, lo, hi, [&](const std::map<char, long>& v) {
    if (c.domain && !c.domain(v)) return;
    ++rep.searched;
    const IntMatrix q = c.matrix(v);
    const bool has_two = char_value(q, 2) == 0;
    const bool has_minus_one = char_value(q, -1) == 0;
    if (has_two) found.insert(project(v, c.free_params));
    if (has_two != claimed(v) && two_mismatch.empty())
      two_mismatch = format_params(v) + (has_two ? " has eigenvalue 2 (not claimed)" : " lacks the claimed eigenvalue 2");
    if (has_minus_one != c.minus_one_always && minus_mismatch.empty())
      minus_mismatch = format_params(v) + (has_minus_one ? " has eigenvalue -1" : " lacks eigenvalue -1");
    if (has_two && c.two_simple) {
      const IntPolynomial rest = char_poly(q).deflate(2);
      if (rest.evaluate(mpz_class(2)) == 0 || rest.evaluate(mpz_class(-1)) == 0) {
        rep.multiplicity_matches = false;
        rep.detail += format_params(v) + ": another root at 2 or -1; ";
      }
    }
  });
  rep.found_two.assign(found.begin(), found.end());
  rep.two_matches = two_mismatch.empty();
  rep.minus_one_matches = minus_mismatch.empty();
  if (!two_mismatch.empty()) rep.detail += two_mismatch + "; ";
  if (!minus_mismatch.empty()) rep.detail += minus_mismatch + "; ";
  return rep;
}

bool QuotientCasesReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const QuotientCaseReport& r) { return r.passed(); });
}

QuotientCasesReport verify_quotient_polynomials() {
  QuotientCasesReport rep;
  for (const auto& c : quotient_cases()) rep.cases.push_back(verify_quotient_case(c));
  return rep;
}

}  // namespace exspec
