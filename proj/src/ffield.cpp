#include "cycmds/ffield.hpp"

#include <array>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "cycmds/error.hpp"

namespace cycmds {

namespace {

using u64 = std::uint64_t;

constexpr unsigned kMaxDegree = 64;

u64 addp(u64 a, u64 b, u64 p) {
  const u64 s = a + b;
  return s >= p ? s - p : s;
}
u64 subp(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 mulp(u64 a, u64 b, u64 p) { return a * b % p; }  // p < 2^32

u64 powp(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  for (b %= p; e; e >>= 1) {
    if (e & 1) r = mulp(r, b, p);
    b = mulp(b, b, p);
  }
  return r;
}

// ----- dense polynomials over Z/p (low degree first), used for the
// irreducibility test only.
using PolyP = std::vector<u64>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP poly_mod(PolyP a, const PolyP& m, u64 p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const u64 inv_lead = powp(m.back(), p - 2, p);
  while (a.size() > dm) {
    const u64 t = mulp(a.back(), inv_lead, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = subp(a[shift + j], mulp(t, m[j], p), p);
    trim(a);
  }
  return a;
}

PolyP poly_mulmod(const PolyP& a, const PolyP& b, const PolyP& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addp(r[i + j], mulp(a[i], b[j], p), p);
  }
  return poly_mod(std::move(r), m, p);
}

PolyP poly_powmod(PolyP b, u64 e, const PolyP& m, u64 p) {
  PolyP r{1};
  b = poly_mod(std::move(b), m, p);
  for (; e; e >>= 1) {
    if (e & 1) r = poly_mulmod(r, b, m, p);
    b = poly_mulmod(b, b, m, p);
  }
  return r;
}

PolyP poly_gcd(PolyP a, PolyP b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint64_t> monic, std::uint64_t p) {
  PolyP m(monic.begin(), monic.end());
  trim(m);
  if (m.size() < 2) return false;
  const std::size_t d = m.size() - 1;
  if (d == 1) return true;
  // gcd(x^(p^i) - x, m) = 1 for 1 <= i <= d/2.
  PolyP xp{0, 1};
  for (std::size_t i = 1; i <= d / 2; ++i) {
    xp = poly_powmod(xp, p, m, p);
    PolyP diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = subp(diff[1], 1, p);
    if (poly_gcd(m, diff, p).size() != 1) return false;
  }
  return true;
}

// ------------------------------------------------------------- FieldCtx

FElem FieldCtx::add(FElem a, FElem b) const {
  if (f_ == 1) return addp(a, b, p_);
  FElem r = 0, scale = 1;
  for (unsigned i = 0; i < f_; ++i) {
    r += addp(a % p_, b % p_, p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FElem FieldCtx::sub(FElem a, FElem b) const {
  if (f_ == 1) return subp(a, b, p_);
  FElem r = 0, scale = 1;
  for (unsigned i = 0; i < f_; ++i) {
    r += subp(a % p_, b % p_, p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FElem FieldCtx::mul(FElem a, FElem b) const {
  if (f_ == 1) return mulp(a, b, p_);
  if (a == 0 || b == 0) return 0;
  std::array<u64, kMaxDegree> da{}, db{};
  std::array<u64, 2 * kMaxDegree> prod{};
  for (unsigned i = 0; i < f_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (unsigned i = 0; i < f_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < f_; ++j) prod[i + j] = addp(prod[i + j], mulp(da[i], db[j], p_), p_);
  }
  for (unsigned i = 2 * f_ - 2; i >= f_; --i) {
    const u64 t = prod[i];
    if (t == 0) continue;
    for (unsigned j = 0; j < f_; ++j) prod[i - f_ + j] = subp(prod[i - f_ + j], mulp(t, modulus_[j], p_), p_);
  }
  FElem r = 0;
  for (unsigned i = f_; i-- > 0;) r = r * p_ + prod[i];
  return r;
}

FElem FieldCtx::pow(FElem a, std::uint64_t e) const {
  FElem r = 1;
  for (; e; e >>= 1) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
  }
  return r;
}

FElem FieldCtx::inv(FElem a) const {
  if (a == 0) throw Error(ErrorCode::PreconditionViolated, "inverse of zero");
  return pow(a, q_ - 2);
}

FElem FieldCtx::from_int(const BigInt& v) const {
  BigInt r;
  const BigInt bp = static_cast<unsigned long>(p_);
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), bp.get_mpz_t());
  return r.get_ui();
}

FElem FieldCtx::from_coeffs(std::span<const std::uint64_t> c) const {
  if (c.size() > f_) throw Error(ErrorCode::OutOfRange, "too many coefficients for this field");
  FElem r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * p_ + c[i] % p_;
  return r;
}

std::vector<std::uint64_t> FieldCtx::coeffs(FElem a) const {
  std::vector<std::uint64_t> c(f_);
  for (unsigned i = 0; i < f_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::uint64_t FieldCtx::order(FElem a) const {
  if (a == 0) throw Error(ErrorCode::PreconditionViolated, "order of zero");
  std::uint64_t ord = q_ - 1;
  for (std::uint64_t r : prime_divisors(q_ - 1)) {
    while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
  }
  return ord;
}

std::vector<FElem> FieldCtx::primitive_nth_roots() const {
  std::vector<FElem> out;
  for (int t = 1; t <= n_; ++t) {
    if (std::gcd(t, n_) == 1) out.push_back(pow(zeta_, static_cast<u64>(t)));
  }
  return out;
}

FieldCtx FieldCtx::with_root_exponent(int t) const {
  if (t <= 0 || std::gcd(t, n_) != 1) {
    throw Error(ErrorCode::PreconditionViolated, "root exponent must be positive and coprime to n");
  }
  FieldCtx r = *this;
  r.zeta_ = pow(zeta_, static_cast<u64>(t));
  r.root_exponent_ = static_cast<int>((static_cast<long long>(root_exponent_) * t) % n_);
  if (r.root_exponent_ == 0) r.root_exponent_ = n_;  // only when n = 1
  return r;
}

std::string FieldCtx::describe() const {
  std::ostringstream os;
  os << "F_" << q_ << " (p=" << p_ << ", f=" << f_ << ", modulus [";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  os << "], zeta' [";
  const auto zc = coeffs(zeta_);
  for (std::size_t i = 0; i < zc.size(); ++i) os << (i ? "," : "") << zc[i];
  os << "])";
  return os.str();
}

FieldCtx build_field(std::uint64_t p, int n) {
  if (n < 1) throw Error(ErrorCode::PreconditionViolated, "conductor must be >= 1");
  if (p >= (u64{1} << 32)) throw Error(ErrorCode::OutOfRange, "field characteristic must be < 2^32");
  if (!is_prime(BigInt(static_cast<unsigned long>(p)))) {
    throw Error(ErrorCode::PreconditionViolated, std::to_string(p) + " is not prime");
  }
  if (static_cast<u64>(n) % p == 0) {
    throw Error(ErrorCode::Ramified, std::to_string(p) + " divides n = " + std::to_string(n));
  }
  FieldCtx ctx;
  ctx.p_ = p;
  ctx.n_ = n;
  ctx.f_ = static_cast<unsigned>(multiplicative_order(BigInt(static_cast<unsigned long>(p)), static_cast<u64>(n)));
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < ctx.f_; ++i) {
    q *= p;
    if (q >= (static_cast<unsigned __int128>(1) << 62)) {
      throw Error(ErrorCode::OutOfRange, "field size p^f exceeds 2^62");
    }
  }
  ctx.q_ = static_cast<u64>(q);

  // Scan monic candidates x^f + tail with tail packed base p, ascending.
  std::vector<u64> mod(ctx.f_ + 1, 0);
  mod[ctx.f_] = 1;
  for (u64 tail = 0;; ++tail) {
    u64 t = tail;
    for (unsigned i = 0; i < ctx.f_; ++i) {
      mod[i] = t % p;
      t /= p;
    }
    if (is_irreducible_mod_p(mod, p)) break;
  }
  ctx.modulus_ = mod;

  const auto q1_primes = prime_divisors(ctx.q_ - 1);
  FElem gen = 0;
  for (FElem g = 1; g < ctx.q_; ++g) {
    bool primitive = true;
    for (u64 r : q1_primes) {
      if (ctx.pow(g, (ctx.q_ - 1) / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = g;
      break;
    }
  }
  ctx.zeta_ = ctx.pow(gen, (ctx.q_ - 1) / static_cast<u64>(n));
  return ctx;
}

SplittingData splitting_data(std::uint64_t p, int n) {
  if (static_cast<u64>(n) % p == 0) {
    throw Error(ErrorCode::Ramified, std::to_string(p) + " divides n = " + std::to_string(n));
  }
  const u64 f = multiplicative_order(BigInt(static_cast<unsigned long>(p)), static_cast<u64>(n));
  return {f, euler_phi(static_cast<u64>(n)) / f, 1};
}

FElem reduce_element(const CycInt& a, const FieldCtx& ctx) {
  if (a.conductor() != ctx.n()) {
    throw Error(ErrorCode::ConductorMismatch,
                "element over Z[zeta_" + std::to_string(a.conductor()) + "], field built for n = " +
                    std::to_string(ctx.n()));
  }
  FElem acc = 0, zp = 1;
  for (const BigInt& c : a.coeffs()) {
    if (c != 0) acc = ctx.add(acc, ctx.mul(ctx.from_int(c), zp));
    zp = ctx.mul(zp, ctx.zeta());
  }
  return acc;
}

FieldMatrix reduce_matrix(const CycMatrix& g, const FieldCtx& ctx) {
  if (g.conductor() != ctx.n()) {
    throw Error(ErrorCode::ConductorMismatch, "matrix conductor differs from field conductor");
  }
  FieldMatrix r(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) r.at(i, j) = reduce_element(g.at(i, j), ctx);
  }
  return r;
}

CycMatrix lift_matrix(const FieldMatrix& m, const FieldCtx& ctx) {
  const int n = ctx.n();
  std::unordered_map<FElem, int> dlog;
  FElem z = 1;
  for (int e = 0; e < n; ++e) {
    dlog.emplace(z, e);
    z = ctx.mul(z, ctx.zeta());
  }
  std::vector<CycInt> powers;
  for (int e = 0; e < n; ++e) powers.push_back(CycInt::from_power(n, e));
  CycMatrix out(n, m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      const FElem v = m.at(i, j);
      if (v == 0) continue;
      auto it = dlog.find(v);
      if (it == dlog.end()) {
        throw Error(ErrorCode::NotInCyclicGroup, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                     ") is not a power of zeta'");
      }
      out.at(i, j) = powers[static_cast<std::size_t>(it->second)];
    }
  }
  return out;
}

}  // namespace cycmds
