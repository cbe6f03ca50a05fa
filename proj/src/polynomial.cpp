#include "exspec/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace exspec {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::linear_root(long root) { return IntPolynomial{-root, 1}; }

IntPolynomial IntPolynomial::x_power(std::size_t k) {
  std::vector<mpz_class> c(k + 1);
  c[k] = 1;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int IntPolynomial::sign_at_dyadic(const mpz_class& num, unsigned long shift) const {
  if (coeffs_.empty()) return 0;
  // 2^(shift*deg) * p(num/2^shift) = sum_i c_i num^i 2^(shift*(deg-i)), evaluated homogeneously.
  mpz_class acc = coeffs_.back();
  mpz_class scale = 1;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    scale <<= shift;
    acc *= num;
    acc += coeffs_[coeffs_.size() - 1 - j] * scale;
  }
  return sgn(acc);
}

double IntPolynomial::evaluate(double x) const { return static_cast<double>(evaluate(static_cast<long double>(x))); }

long double IntPolynomial::evaluate(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + static_cast<long double>(it->get_d());
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (coeffs_.empty()) return {};
  mpz_class g = content();
  if (coeffs_.back() < 0) g = -g;
  std::vector<mpz_class> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) { return *this = *this * o; }

IntPolynomial& IntPolynomial::operator*=(const mpz_class& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

IntPolynomial IntPolynomial::pow(unsigned k) const {
  IntPolynomial result{1};
  IntPolynomial base = *this;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod_monic(const IntPolynomial& divisor) const {
  if (!divisor.is_monic()) throw std::invalid_argument("divmod_monic: divisor must be monic");
  if (degree() < divisor.degree()) return {IntPolynomial{}, *this};
  std::vector<mpz_class> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  std::vector<mpz_class> quot(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const mpz_class q = rem[i];
    quot[i - dd] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.coeffs_[j];
  }
  rem.resize(dd);
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial IntPolynomial::pseudo_remainder(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("pseudo_remainder: zero divisor");
  std::vector<mpz_class> r = coeffs_;
  const std::size_t db = divisor.coeffs_.size() - 1;
  const mpz_class& lb = divisor.coeffs_.back();
  auto trim = [&] {
    while (!r.empty() && r.back() == 0) r.pop_back();
  };
  trim();
  if (r.size() <= db) return IntPolynomial(std::move(r));
  int missing = static_cast<int>(r.size() - 1 - db) + 1;
  while (!r.empty() && r.size() - 1 >= db) {
    const mpz_class lr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= lr * divisor.coeffs_[j];
    r.pop_back();
    trim();
    --missing;
  }
  // Keep the classical normalization lc(b)^(deg a - deg b + 1).
  mpz_class extra;
  mpz_pow_ui(extra.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(std::max(missing, 0)));
  for (auto& c : r) c *= extra;
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::deflate(long root) const {
  if (coeffs_.empty()) throw std::invalid_argument("deflate: zero polynomial");
  const std::size_t d = coeffs_.size() - 1;
  std::vector<mpz_class> q(d);
  mpz_class carry = 0;
  for (std::size_t i = d + 1; i-- > 1;) {
    carry = coeffs_[i] + carry * root;
    q[i - 1] = carry;
  }
  if (coeffs_[0] + carry * root != 0) throw std::domain_error("deflate: value is not a root");
  return IntPolynomial(std::move(q));
}

std::string IntPolynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::vector<std::string> IntPolynomial::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.is_zero()) return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  while (!b.is_zero()) {
    IntPolynomial r = a.pseudo_remainder(b);
    a = std::move(b);
    b = r.primitive_part();
  }
  return a.primitive_part();
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("exact_quotient: zero divisor");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("exact_quotient: divisor does not divide");
  std::vector<mpz_class> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<mpz_class> quot(rem.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), bc.back().get_mpz_t()))
      throw std::domain_error("exact_quotient: divisor does not divide");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), rem[i].get_mpz_t(), bc.back().get_mpz_t());
    quot[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * bc[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (rem[i] != 0) throw std::domain_error("exact_quotient: divisor does not divide");
  return IntPolynomial(std::move(quot));
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  const IntPolynomial f = p.primitive_part();
  const IntPolynomial df = f.derivative();
  IntPolynomial a = poly_gcd(f, df);
  IntPolynomial b = exact_quotient(f, a);
  IntPolynomial c = exact_quotient(df, a);
  IntPolynomial d = c - b.derivative();
  std::vector<IntPolynomial> out;
  while (b.degree() >= 1) {
    a = d.is_zero() ? b.primitive_part() : poly_gcd(b, d);
    out.push_back(a);
    IntPolynomial nb = exact_quotient(b, a);
    c = d.is_zero() ? IntPolynomial{} : exact_quotient(d, a);
    b = std::move(nb);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() < 1) out.pop_back();
  return out;
}

}  // namespace exspec
