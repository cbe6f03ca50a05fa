#include "exspec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace exspec {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) : n_(rows.size()), a_() {
  a_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw std::invalid_argument("IntMatrix: rows must form a square matrix");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

std::int64_t IntMatrix::max_abs_row_sum() const {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    std::int64_t s = 0;
    for (auto v : row(i)) s += v < 0 ? -v : v;
    best = std::max(best, s);
  }
  return best;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("IntMatrix: size mismatch");
  const std::size_t n = a.n_;
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("IntMatrix: size mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("IntMatrix: size mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

IntMatrix operator*(std::int64_t s, const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& v : c.a_) v *= s;
  return c;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial: Hessenberg reduction over several word-size
// primes, recombined by CRT. Every eigenvalue has modulus at most R (largest
// absolute row sum), so |c_k| <= C(n,k) R^k and the sum of |c_k| is at most
// (1+R)^n; primes are added until their product exceeds twice that.

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Primes below 2^62, descending; generated once and shared read-only.
const std::vector<u64>& prime_pool() {
  static const std::vector<u64> pool = [] {
    std::vector<u64> out;
    for (u64 c = (1ULL << 62) - 1; out.size() < 512; c -= 2)
      if (is_prime_u64(c)) out.push_back(c);
    return out;
  }();
  return pool;
}

u64 reduce(std::int64_t v, u64 p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return static_cast<u64>(r);
}

// Ascending coefficients of det(xI - M) mod p.
std::vector<u64> char_poly_mod(const IntMatrix& m, u64 p) {
  const std::size_t n = m.size();
  std::vector<u64> h(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i * n + j] = reduce(m(i, j), p);
  auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };

  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = n;
    for (std::size_t i = j + 1; i < n; ++i)
      if (at(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(piv, c), at(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, piv), at(r, j + 1));
    }
    const u64 inv = powmod(at(j + 1, j), p - 2, p);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (at(i, j) == 0) continue;
      const u64 u = mulmod(at(i, j), inv, p);
      // row_i -= u * row_{j+1}
      for (std::size_t c = j; c < n; ++c) {
        const u64 t = mulmod(u, at(j + 1, c), p);
        at(i, c) = at(i, c) >= t ? at(i, c) - t : at(i, c) + p - t;
      }
      // col_{j+1} += u * col_i
      for (std::size_t r = 0; r < n; ++r) {
        const u64 t = mulmod(u, at(r, i), p);
        const u64 s = at(r, j + 1) + t;
        at(r, j + 1) = s >= p ? s - p : s;
      }
    }
  }

  // Recurrence over leading principal blocks of the Hessenberg form.
  std::vector<std::vector<u64>> poly(n + 1);
  poly[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<u64> cur(k + 1, 0);
    const auto& prev = poly[k - 1];
    const u64 diag = at(k - 1, k - 1);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = (cur[i + 1] + prev[i]) % p;
      const u64 t = mulmod(diag, prev[i], p);
      cur[i] = cur[i] >= t ? cur[i] - t : cur[i] + p - t;
    }
    u64 prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod = mulmod(prod, at(k - i, k - i - 1), p);
      if (prod == 0) break;
      const u64 coef = mulmod(prod, at(k - i - 1, k - 1), p);
      if (coef == 0) continue;
      const auto& lower = poly[k - i - 1];
      for (std::size_t t = 0; t < lower.size(); ++t) {
        const u64 v = mulmod(coef, lower[t], p);
        cur[t] = cur[t] >= v ? cur[t] - v : cur[t] + p - v;
      }
    }
    poly[k] = std::move(cur);
  }
  return poly[n];
}

}  // namespace

IntPolynomial char_poly(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial{1};
  mpz_class bound;
  mpz_class base = static_cast<unsigned long>(m.max_abs_row_sum() + 1);
  mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), n);
  bound *= 2;

  const auto& pool = prime_pool();
  std::vector<mpz_class> acc(n + 1, 0);
  mpz_class modulus = 1;
  for (u64 p : pool) {
    if (modulus > bound) break;
    const std::vector<u64> r = char_poly_mod(m, p);
    const mpz_class pz(std::to_string(p));
    if (modulus == 1) {
      for (std::size_t i = 0; i <= n; ++i) acc[i] = mpz_class(std::to_string(r[i]));
    } else {
      // x = acc + modulus * ((r - acc) * modulus^{-1} mod p)
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
      for (std::size_t i = 0; i <= n; ++i) {
        mpz_class t = mpz_class(std::to_string(r[i])) - acc[i];
        t *= inv;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
        acc[i] += modulus * t;
      }
    }
    modulus *= pz;
  }
  if (modulus <= bound) throw std::overflow_error("char_poly: prime pool exhausted");
  const mpz_class half = modulus / 2;
  for (auto& c : acc)
    if (c > half) c -= modulus;
  return IntPolynomial(std::move(acc));
}

// ---------------------------------------------------------------------------
// Fraction-free elimination.

namespace {

using MpzMatrix = std::vector<std::vector<mpz_class>>;

MpzMatrix to_mpz(const IntMatrix& m) {
  const std::size_t n = m.size();
  MpzMatrix a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));
  return a;
}

mpz_class bareiss_det(MpzMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

mpz_class determinant(const IntMatrix& m) { return bareiss_det(to_mpz(m)); }

mpz_class char_poly_at(const IntMatrix& m, const mpz_class& x) {
  MpzMatrix a = to_mpz(m);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (auto& v : a[i]) v = -v;
    a[i][i] += x;
  }
  return bareiss_det(std::move(a));
}

std::size_t exact_rank(const IntMatrix& m) {
  MpzMatrix a = to_mpz(m);
  const std::size_t n = a.size();
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = n, pc = n;
    for (std::size_t i = k; i < n && pr == n; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (a[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == n) break;
    std::swap(a[k], a[pr]);
    for (auto& row : a) std::swap(row[k], row[pc]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
    ++rank;
  }
  return rank;
}

PsdCertificate psd_rank_certificate(const IntMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("psd_rank_certificate: matrix is not symmetric");
  PsdCertificate cert;
  cert.rank = exact_rank(m);

  // Symmetric fraction-free elimination with diagonal pivots. Entries below the
  // processed block are scaled Schur-complement entries; with every pivot
  // positive the scale is positive, so diagonal signs are the Schur signs.
  MpzMatrix a = to_mpz(m);
  const std::size_t n = a.size();
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a[i][i] < 0) return cert;
      if (piv == n && a[i][i] > 0) piv = i;
    }
    if (piv == n) {
      // Zero diagonal: PSD forces the whole remaining block to vanish.
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (a[i][j] != 0) return cert;
      break;
    }
    if (piv != k) {
      std::swap(a[k], a[piv]);
      for (auto& row : a) std::swap(row[k], row[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  cert.is_psd = true;
  return cert;
}

// ---------------------------------------------------------------------------
// Jacobi.

std::vector<double> eigenvalues_symmetric(const IntMatrix& m, double tol) {
  if (!m.is_symmetric()) throw std::invalid_argument("eigenvalues_symmetric: matrix is not symmetric");
  const std::size_t n = m.size();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<double>(m(i, j));
  return eigenvalues_symmetric(std::move(a), n, tol);
}

std::vector<double> eigenvalues_symmetric(std::vector<double> a, std::size_t n, double tol) {
  if (a.size() != n * n) throw std::invalid_argument("eigenvalues_symmetric: size mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a[i * n + j] != a[j * n + i]) throw std::invalid_argument("eigenvalues_symmetric: matrix is not symmetric");

  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  double scale = 0.0;
  for (double v : a) scale += v * v;
  scale = std::sqrt(scale);
  if (scale == 0.0) return std::vector<double>(n, 0.0);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && off_norm() >= tol * scale; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = at(q, p) = 0.0;
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

}  // namespace exspec
