#include "cycmds/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <utility>

#include "cycmds/error.hpp"

namespace cycmds {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::monomial(std::size_t degree, const BigInt& c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const BigInt& s) {
  std::vector<BigInt> r(a.c_);
  for (auto& c : r) c *= s;
  return IntPoly(std::move(r));
}

void IntPoly::divrem_monic(const IntPoly& a, const IntPoly& monic, IntPoly& quot, IntPoly& rem) {
  if (monic.is_zero() || monic.leading() != 1) {
    throw Error(ErrorCode::PreconditionViolated, "divrem_monic needs a monic divisor");
  }
  std::vector<BigInt> r(a.c_);
  const std::size_t d = monic.c_.size() - 1;
  if (r.size() <= d) {
    quot = {};
    rem = a;
    return;
  }
  std::vector<BigInt> q(r.size() - d);
  for (std::size_t i = r.size(); i-- > d;) {
    const BigInt t = r[i];
    q[i - d] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) {
      mpz_submul(r[i - d + j].get_mpz_t(), t.get_mpz_t(), monic.c_[j].get_mpz_t());
    }
  }
  r.resize(d);
  quot = IntPoly(std::move(q));
  rem = IntPoly(std::move(r));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

// ------------------------------------------------------ cyclotomic polys

namespace {

struct PhiCache {
  std::shared_mutex mu;
  std::map<int, std::unique_ptr<IntPoly>> polys;
};

PhiCache& phi_cache() {
  static PhiCache cache;
  return cache;
}

IntPoly compute_cyclotomic(int n) {
  // x^n - 1 = prod_{d | n} Phi_d
  IntPoly num = IntPoly::monomial(static_cast<std::size_t>(n)) - IntPoly{1};
  for (std::uint64_t d : divisors(static_cast<std::uint64_t>(n))) {
    if (static_cast<int>(d) == n) continue;
    IntPoly q, r;
    IntPoly::divrem_monic(num, cyclotomic_poly(static_cast<int>(d)), q, r);
    if (!r.is_zero()) throw Error(ErrorCode::InternalConsistency, "Phi_d does not divide x^n - 1");
    num = std::move(q);
  }
  return num;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) a = q b + r.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
  const long db = b.degree();
  const BigInt& lb = b.leading();
  auto bc = b.coeffs();
  long dr = a.degree();
  long steps = a.degree() - db + 1;
  while (dr >= db && dr >= 0) {
    const BigInt t = r[static_cast<std::size_t>(dr)];
    for (auto& c : r) c *= lb;
    for (long j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(dr - db + j)].get_mpz_t(), t.get_mpz_t(),
                 bc[static_cast<std::size_t>(j)].get_mpz_t());
    }
    --steps;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
  }
  if (steps > 0) {
    BigInt s;
    mpz_pow_ui(s.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
    for (auto& c : r) c *= s;
  }
  return IntPoly(std::move(r));
}

BigInt pow(const BigInt& b, long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

IntPoly exact_div(const IntPoly& a, const BigInt& d) {
  std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return IntPoly(std::move(r));
}

}  // namespace

const IntPoly& cyclotomic_poly(int n) {
  if (n < 1) throw Error(ErrorCode::PreconditionViolated, "cyclotomic_poly requires n >= 1");
  auto& cache = phi_cache();
  {
    std::shared_lock lock(cache.mu);
    auto it = cache.polys.find(n);
    if (it != cache.polys.end()) return *it->second;
  }
  // Computed outside the lock: the recursion re-enters for proper divisors.
  auto poly = std::make_unique<IntPoly>(compute_cyclotomic(n));
  std::unique_lock lock(cache.mu);
  auto [it, inserted] = cache.polys.try_emplace(n, std::move(poly));
  return *it->second;
}

BigInt resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  IntPoly a = f, b = g;
  const BigInt ca = a.content(), cb = b.content();
  a = exact_div(a, ca);
  b = exact_div(b, cb);
  BigInt t = pow(ca, b.degree()) * pow(cb, a.degree());
  BigInt s = 1, gg = 1, h = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) s = -1;
  }
  if (b.degree() == 0) return s * t * pow(b.leading(), a.degree());
  for (;;) {
    const long delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    a = std::move(b);
    b = exact_div(r, gg * pow(h, delta));
    gg = a.leading();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = gg;
    } else {
      BigInt num = pow(gg, delta);
      BigInt den = pow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) break;
  }
  const long da = a.degree();
  BigInt num = pow(b.leading(), da);
  BigInt den = pow(h, da - 1);
  BigInt hh;
  mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * t * hh;
}

// ----------------------------------------------------------------- CycInt

CycInt::CycInt(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::PreconditionViolated, "conductor must be >= 1");
  c_.resize(euler_phi(static_cast<std::uint64_t>(n)));
}

CycInt::CycInt(int n, const IntPoly& representative) : CycInt(n) {
  IntPoly q, r;
  IntPoly::divrem_monic(representative, cyclotomic_poly(n), q, r);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = r.coeff(i);
}

CycInt CycInt::one(int n) { return integer(n, 1); }

CycInt CycInt::integer(int n, const BigInt& v) {
  CycInt r(n);
  r.c_[0] = v;
  return r;
}

CycInt CycInt::from_power(int n, long long e) {
  if (n < 1) throw Error(ErrorCode::PreconditionViolated, "conductor must be >= 1");
  long long m = e % n;
  if (m < 0) m += n;
  return CycInt(n, IntPoly::monomial(static_cast<std::size_t>(m)));
}

CycInt CycInt::from_group_ring(int n, std::span<const BigInt> counts) {
  CycInt r(n);
  const IntPoly& phi = cyclotomic_poly(n);
  const std::size_t d = r.c_.size();
  std::vector<BigInt> w(counts.begin(), counts.end());
  auto pc = phi.coeffs();
  for (std::size_t i = w.size(); i-- > d;) {
    if (w[i] == 0) continue;
    const BigInt t = w[i];
    for (std::size_t j = 0; j <= d; ++j) {
      if (pc[j] != 0) mpz_submul(w[i - d + j].get_mpz_t(), t.get_mpz_t(), pc[j].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < d && i < w.size(); ++i) r.c_[i] = std::move(w[i]);
  return r;
}

bool CycInt::is_zero() const {
  for (const auto& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

void CycInt::check_same(const CycInt& o) const {
  if (n_ != o.n_) {
    throw Error(ErrorCode::ConductorMismatch,
                "conductors " + std::to_string(n_) + " and " + std::to_string(o.n_));
  }
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  a.check_same(b);
  const std::size_t d = a.c_.size();
  std::vector<BigInt> w(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.c_[j] == 0) continue;
      mpz_addmul(w[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return CycInt::from_group_ring(a.n_, w);
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i].get_str();
  os << ']';
  return os.str();
}

CycInt cyc_from_power(int n, long long e) { return CycInt::from_power(n, e); }

BigInt norm(const CycInt& a) {
  if (a.is_zero()) return 0;
  return resultant(cyclotomic_poly(a.conductor()), a.rep());
}

}  // namespace cycmds
