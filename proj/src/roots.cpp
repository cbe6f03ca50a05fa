// Spectrum factoring and real-root isolation for integer polynomials.

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "exspec/linalg.hpp"

namespace exspec {

namespace {

// Divide by the positive content, keeping the sign of the leading coefficient.
IntPolynomial scale_down(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  const mpz_class g = p.content();
  std::vector<mpz_class> c(p.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) mpz_divexact(c[i].get_mpz_t(), p.coeffs()[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& f) {
    chain_.push_back(scale_down(f));
    if (f.degree() < 1) return;
    chain_.push_back(scale_down(f.derivative()));
    while (chain_.back().degree() > 0) {
      const IntPolynomial& a = chain_[chain_.size() - 2];
      const IntPolynomial& b = chain_.back();
      IntPolynomial r = a.pseudo_remainder(b);
      if (r.is_zero()) break;
      const int delta = a.degree() - b.degree();
      const bool flip = sgn(b.leading()) < 0 && ((delta + 1) % 2 == 1);
      // next = -rem(a, b), and rem = prem / lc(b)^(delta+1)
      r = flip ? r : -r;
      chain_.push_back(scale_down(r));
    }
  }

  // Sign variations at num / 2^shift.
  int variations(const mpz_class& num, unsigned long shift) const {
    int v = 0, last = 0;
    for (const auto& p : chain_) {
      const int s = p.sign_at_dyadic(num, shift);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  int variations_at_infinity(bool negative) const {
    int v = 0, last = 0;
    for (const auto& p : chain_) {
      int s = sgn(p.leading());
      if (negative && (p.degree() % 2 == 1)) s = -s;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

 private:
  std::vector<IntPolynomial> chain_;
};

// Smallest e with 2^e >= 1 + max |c_i / c_d| (Cauchy bound).
unsigned long cauchy_exponent(const IntPolynomial& p) {
  mpz_class lead = abs(p.leading());
  mpz_class mx = 0;
  for (int i = 0; i < p.degree(); ++i) mx = std::max(mx, mpz_class(abs(p.coeffs()[i])));
  mpz_class q = mx / lead + 2;
  return mpz_sizeinbase(q.get_mpz_t(), 2);
}

double dyadic_to_double(const mpz_class& num, unsigned long shift) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, num.get_mpz_t());
  return std::ldexp(mant, static_cast<int>(exp) - static_cast<int>(shift));
}

struct DistinctRoot {
  double value;
  double error_bound;
};

std::vector<DistinctRoot> isolate_squarefree(const IntPolynomial& f, double tol) {
  std::vector<DistinctRoot> out;
  if (f.degree() < 1) return out;
  const SturmChain sturm(f);
  const unsigned long e = cauchy_exponent(f);

  struct Interval {
    mpz_class lo, hi;  // (lo / 2^shift, hi / 2^shift]
    unsigned long shift;
    int count;
  };
  mpz_class bound = 1;
  bound <<= e;
  std::vector<Interval> stack;
  const int total = sturm.variations(-bound, 0) - sturm.variations(bound, 0);
  stack.push_back({-bound, bound, 0, total});

  while (!stack.empty()) {
    Interval iv = std::move(stack.back());
    stack.pop_back();
    if (iv.count == 0) continue;
    if (iv.count == 1) {
      while (true) {
        const double width = dyadic_to_double(iv.hi - iv.lo, iv.shift);
        if (width < tol) break;
        if (f.sign_at_dyadic(iv.hi, iv.shift) == 0) {
          iv.lo = iv.hi;
          break;
        }
        iv.lo *= 2;
        iv.hi *= 2;
        ++iv.shift;
        const mpz_class mid = (iv.lo + iv.hi) / 2;
        const int left = sturm.variations(iv.lo, iv.shift) - sturm.variations(mid, iv.shift);
        if (left == 1)
          iv.hi = mid;
        else
          iv.lo = mid;
      }
      const double lo = dyadic_to_double(iv.lo, iv.shift);
      const double hi = dyadic_to_double(iv.hi, iv.shift);
      out.push_back({0.5 * (lo + hi), 0.5 * (hi - lo)});
      continue;
    }
    Interval left{iv.lo * 2, iv.lo + iv.hi, iv.shift + 1, 0};
    Interval right{iv.lo + iv.hi, iv.hi * 2, iv.shift + 1, 0};
    const int vmid = sturm.variations(left.hi, left.shift);
    left.count = sturm.variations(left.lo, left.shift) - vmid;
    right.count = iv.count - left.count;
    stack.push_back(std::move(right));
    stack.push_back(std::move(left));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

}  // namespace

std::vector<IsolatedRoot> real_roots(const IntPolynomial& p, double tol) {
  std::vector<IsolatedRoot> out;
  const auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& r : isolate_squarefree(factors[i], tol))
      for (std::size_t k = 0; k <= i; ++k) out.push_back({r.value, r.error_bound, static_cast<int>(i + 1)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

std::size_t count_roots_between(const IntPolynomial& p, long lo, long hi, bool lo_infinite, bool hi_infinite) {
  std::size_t total = 0;
  const auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const SturmChain sturm(factors[i]);
    const int vlo = lo_infinite ? sturm.variations_at_infinity(true) : sturm.variations(mpz_class(lo), 0);
    const int vhi = hi_infinite ? sturm.variations_at_infinity(false) : sturm.variations(mpz_class(hi), 0);
    int distinct = vlo - vhi;  // roots in (lo, hi]
    if (!hi_infinite && factors[i].evaluate(mpz_class(hi)) == 0) --distinct;
    total += static_cast<std::size_t>(std::max(distinct, 0)) * (i + 1);
  }
  return total;
}

ExactSpectrum deflate_spectrum(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("deflate_spectrum: zero polynomial");
  ExactSpectrum s;
  IntPolynomial g = p;
  while (g.degree() >= 1 && g.evaluate(mpz_class(2)) == 0) {
    g = g.deflate(2);
    ++s.mult_two;
  }
  while (g.degree() >= 1 && g.evaluate(mpz_class(-1)) == 0) {
    g = g.deflate(-1);
    ++s.mult_minus_one;
  }
  s.residual = std::move(g);
  return s;
}

ExactSpectrum factor_spectrum(const IntPolynomial& p) {
  ExactSpectrum s = deflate_spectrum(p);
  s.residual_roots = real_roots(s.residual);
  return s;
}

IntPolynomial ExactSpectrum::reconstruct() const {
  return IntPolynomial::linear_root(2).pow(static_cast<unsigned>(mult_two)) *
         IntPolynomial::linear_root(-1).pow(static_cast<unsigned>(mult_minus_one)) * residual;
}

std::vector<double> ExactSpectrum::eigenvalues() const {
  std::vector<double> ev;
  ev.insert(ev.end(), mult_two, 2.0);
  ev.insert(ev.end(), mult_minus_one, -1.0);
  for (const auto& r : residual_roots) ev.push_back(r.value);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

}  // namespace exspec
