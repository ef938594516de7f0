#pragma once

// Slow, independent reference implementations used only by the tests. They
// share no code with the library beyond the data types.

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cycmds/cycmatrix.hpp"
#include "cycmds/ffield.hpp"

namespace oracle {

using Poly = std::vector<mpz_class>;  // low degree first

inline Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(r);
}

// Long division by a divisor with leading coefficient +-1; throws if the
// remainder is nonzero.
inline Poly exact_div(Poly a, const Poly& b) {
  a = trim(a);
  if (a.size() < b.size()) {
    if (!a.empty()) throw std::logic_error("inexact division");
    return {};
  }
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    const mpz_class c = a[i + b.size() - 1] * b.back();  // b.back() is +-1
    q[i] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  if (!trim(a).empty()) throw std::logic_error("inexact division");
  return trim(q);
}

inline Poly x_pow_minus_one(int d) {
  Poly p(d + 1, 0);
  p[0] = -1;
  p[d] = 1;
  return p;
}

inline int mobius(int n) {
  int mu = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Phi_n = prod_{d | n} (x^d - 1)^mu(n/d).
inline Poly phi(int n) {
  Poly num{1}, den{1};
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int mu = mobius(n / d);
    if (mu == 1) num = mul(num, x_pow_minus_one(d));
    if (mu == -1) den = mul(den, x_pow_minus_one(d));
  }
  return exact_div(num, den);
}

inline int totient(int n) {
  int c = 0;
  for (int i = 1; i <= n; ++i) c += std::gcd(i, n) == 1;
  return c;
}

// Fraction-free Gaussian elimination.
inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// x^e mod Phi_n as a coordinate vector of length phi(n).
inline Poly reduce_mod(Poly a, const Poly& modulus) {
  const std::size_t d = modulus.size() - 1;
  a = trim(a);
  for (std::size_t i = a.size(); i-- > d;) {
    const mpz_class c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) a[i - d + j] -= c * modulus[j];
  }
  a.resize(d, 0);
  return a;
}

// Norm as the determinant of multiplication-by-a on the power basis.
inline mpz_class norm(int n, const Poly& a) {
  const Poly m = phi(n);
  const std::size_t d = m.size() - 1;
  std::vector<std::vector<mpz_class>> mat(d, std::vector<mpz_class>(d, 0));
  for (std::size_t col = 0; col < d; ++col) {
    Poly xcol(col + 1, 0);
    xcol[col] = 1;
    const Poly prod = reduce_mod(mul(a, xcol), m);
    for (std::size_t row = 0; row < d; ++row) mat[row][col] = prod[row];
  }
  return bareiss_det(mat);
}

inline Poly coeffs_of(const cycmds::CycInt& a) {
  Poly p;
  for (const auto& c : a.coeffs()) p.push_back(c);
  return p;
}

inline std::complex<double> eval(const cycmds::CycInt& a) {
  const double t = 2 * std::numbers::pi / a.conductor();
  std::complex<double> s = 0;
  const auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i].get_d() * std::polar(1.0, t * static_cast<double>(i));
  return s;
}

inline bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

inline std::uint64_t order_mod(std::uint64_t p, std::uint64_t n) {
  std::uint64_t x = p % n, f = 1;
  while (x != 1 % n) {
    x = x * (p % n) % n;
    ++f;
  }
  return f;
}

inline bool field_size_at_most(std::uint64_t p, std::uint64_t f, std::uint64_t limit) {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, f);
  return q <= limit;
}

// Schoolbook F_p[x]/(modulus) arithmetic on unpacked digit vectors.
struct Fq {
  std::uint64_t p;
  std::size_t f;
  std::vector<std::uint64_t> modulus;  // monic, low first
  std::uint64_t q;

  explicit Fq(const cycmds::FieldCtx& ctx) : p(ctx.p()), f(ctx.f()), modulus(ctx.modulus()), q(ctx.q()) {}

  std::vector<std::uint64_t> unpack(std::uint64_t e) const {
    std::vector<std::uint64_t> d(f);
    for (std::size_t i = 0; i < f; ++i) {
      d[i] = e % p;
      e /= p;
    }
    return d;
  }
  std::uint64_t pack(const std::vector<std::uint64_t>& d) const {
    std::uint64_t e = 0;
    for (std::size_t i = f; i-- > 0;) e = e * p + d[i];
    return e;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    auto x = unpack(a), y = unpack(b);
    for (std::size_t i = 0; i < f; ++i) x[i] = (x[i] + y[i]) % p;
    return pack(x);
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    auto x = unpack(a), y = unpack(b);
    for (std::size_t i = 0; i < f; ++i) x[i] = (x[i] + p - y[i]) % p;
    return pack(x);
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    const auto x = unpack(a), y = unpack(b);
    std::vector<unsigned __int128> r(2 * f, 0);
    for (std::size_t i = 0; i < f; ++i)
      for (std::size_t j = 0; j < f; ++j) r[i + j] = (r[i + j] + (unsigned __int128)x[i] * y[j]) % p;
    for (std::size_t i = 2 * f - 1; i >= f; --i) {
      const auto c = r[i] % p;
      if (c == 0) continue;
      for (std::size_t j = 0; j < f; ++j) r[i - f + j] = (r[i - f + j] + (p - c) * (unsigned __int128)modulus[j]) % p;
      r[i] = 0;
    }
    std::vector<std::uint64_t> out(f);
    for (std::size_t i = 0; i < f; ++i) out[i] = static_cast<std::uint64_t>(r[i] % p);
    return pack(out);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  std::uint64_t pow_fast(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow_fast(a, q - 2); }

  // Image of an element of Z[zeta_n] under zeta_n -> z, by Horner.
  std::uint64_t eval(const cycmds::CycInt& a, std::uint64_t z) const {
    std::uint64_t acc = 0;
    const auto c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
      mpz_class r = c[i] % static_cast<unsigned long>(p);
      if (r < 0) r += static_cast<unsigned long>(p);
      acc = add(mul(acc, z), r.get_ui());
    }
    return acc;
  }

  std::uint64_t eval_poly(const Poly& a, std::uint64_t z) const {
    std::uint64_t acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
      mpz_class r = a[i] % static_cast<unsigned long>(p);
      if (r < 0) r += static_cast<unsigned long>(p);
      acc = add(mul(acc, z), r.get_ui());
    }
    return acc;
  }

  std::size_t rank(cycmds::FieldMatrix m) const {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
      std::size_t piv = r;
      while (piv < m.rows && m.at(piv, c) == 0) ++piv;
      if (piv == m.rows) continue;
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
      const auto iv = inv(m.at(r, c));
      for (std::size_t i = 0; i < m.rows; ++i) {
        if (i == r || m.at(i, c) == 0) continue;
        const auto factor = mul(m.at(i, c), iv);
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = sub(m.at(i, j), mul(factor, m.at(r, j)));
      }
      ++r;
    }
    return r;
  }

  // Minimum Hamming weight over all nonzero messages.
  int min_distance(const cycmds::FieldMatrix& g) const {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < g.rows; ++i) total *= q;
    int best = static_cast<int>(g.cols) + 1;
    std::vector<std::uint64_t> msg(g.rows);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      std::uint64_t t = idx;
      for (auto& m : msg) {
        m = t % q;
        t /= q;
      }
      int w = 0;
      for (std::size_t j = 0; j < g.cols; ++j) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < g.rows; ++i) s = add(s, mul(msg[i], g.at(i, j)));
        w += s != 0;
      }
      if (w > 0) best = std::min(best, w);
    }
    return best;
  }
};

}  // namespace oracle
