#include "cycmds/numth.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cycmds/error.hpp"

namespace cycmds {

namespace {

constexpr std::uint64_t kTrialLimit = 10'000;
constexpr unsigned kMillerRabinBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = primes_up_to(kTrialLimit);
  return primes;
}

// true if m is a strong probable prime to base a (m odd, m > a).
bool strong_probable_prime(const BigInt& m, unsigned a, const BigInt& d, unsigned s) {
  const BigInt m1 = m - 1;
  BigInt x;
  const BigInt base = a;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
  if (x == 1 || x == m1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % m;
    if (x == m1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial factor
// or 0 if this polynomial degenerated (caller moves to the next c).
BigInt brent_rho(const BigInt& m, unsigned long c, std::uint64_t& iterations_left) {
  constexpr std::uint64_t kBatch = 128;
  BigInt y = 2, x, ys, q = 1, g = 1;
  std::uint64_t r = 1;
  auto step = [&](BigInt& v) {
    v = v * v + c;
    v %= m;
  };
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) step(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t batch = std::min(kBatch, r - k);
      if (iterations_left < batch) {
        throw Error(ErrorCode::FactorizationIncomplete,
                    "Pollard rho budget exhausted; unfactored cofactor " + m.get_str());
      }
      iterations_left -= batch;
      for (std::uint64_t i = 0; i < batch; ++i) {
        step(y);
        BigInt diff = abs(x - y);
        q = q * diff % m;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), m.get_mpz_t());
      k += batch;
    }
    r *= 2;
  }
  if (g == m) {
    // Batched gcd overshot; replay one step at a time from ys.
    do {
      step(ys);
      BigInt diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
    } while (g == 1);
  }
  return g == m ? BigInt(0) : g;
}

void split(const BigInt& m, std::map<BigInt, unsigned>& out, unsigned multiplicity,
           std::uint64_t& iterations_left) {
  if (m == 1) return;
  if (is_prime(m)) {
    out[m] += multiplicity;
    return;
  }
  if (mpz_perfect_power_p(m.get_mpz_t())) {
    // Largest exponent first keeps the root as small as possible.
    const unsigned long max_e = mpz_sizeinbase(m.get_mpz_t(), 2);
    for (unsigned long e = max_e; e >= 2; --e) {
      BigInt root;
      if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), e) != 0) {
        split(root, out, multiplicity * static_cast<unsigned>(e), iterations_left);
        return;
      }
    }
  }
  for (unsigned long c = 1;; ++c) {
    const BigInt d = brent_rho(m, c, iterations_left);
    if (d != 0) {
      split(d, out, multiplicity, iterations_left);
      split(BigInt(m / d), out, multiplicity, iterations_left);
      return;
    }
  }
}

}  // namespace

BigInt FactoredInt::recompose() const {
  BigInt r = 1;
  for (const auto& pp : factors) {
    BigInt t;
    mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    r *= t;
  }
  return r;
}

const BigInt& primality_certification_bound() {
  static const BigInt bound("3317044064679887385961981");
  return bound;
}

bool is_prime(const BigInt& m) {
  if (m < 2) return false;
  for (unsigned a : kMillerRabinBases) {
    if (m == a) return true;
    if (m % a == 0) return false;
  }
  BigInt d = m - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  for (unsigned a : kMillerRabinBases) {
    if (!strong_probable_prime(m, a, d, s)) return false;
  }
  if (m >= primality_certification_bound()) {
    throw Error(ErrorCode::OutOfRange,
                "cannot certify primality of " + m.get_str() + " above the deterministic bound");
  }
  return true;
}

FactoredInt factorize(const BigInt& m, const FactorBudget& budget) {
  if (m < 1) throw Error(ErrorCode::PreconditionViolated, "factorize requires m >= 1");
  FactoredInt result{m, {}};
  BigInt rest = m;
  std::map<BigInt, unsigned> found;
  for (std::uint64_t p : small_primes()) {
    if (rest == 1) break;
    if (rest < BigInt(p) * p) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) found[BigInt(p)] += e;
  }
  std::uint64_t iterations_left = budget.max_rho_iterations;
  split(rest, found, 1, iterations_left);
  for (auto& [p, e] : found) result.factors.push_back({p, e});
  return result;
}

std::uint64_t multiplicative_order(const BigInt& p, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "modulus must be positive");
  const BigInt bn = static_cast<unsigned long>(n);
  BigInt g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), bn.get_mpz_t());
  if (g != 1) {
    throw Error(ErrorCode::NotCoprime, p.get_str() + " is not coprime to " + std::to_string(n));
  }
  if (n == 1) return 1;
  BigInt r;
  mpz_mod(r.get_mpz_t(), p.get_mpz_t(), bn.get_mpz_t());
  const unsigned __int128 base = r.get_ui();
  // The order divides phi(n); test divisors in ascending order.
  for (std::uint64_t f : divisors(euler_phi(n))) {
    unsigned __int128 acc = 1, b = base;
    for (std::uint64_t e = f; e > 0; e >>= 1) {
      if (e & 1) acc = acc * b % n;
      b = b * b % n;
    }
    if (acc == 1) return f;
  }
  throw Error(ErrorCode::InternalConsistency, "order not found among divisors of phi(n)");
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "euler_phi requires n >= 1");
  std::uint64_t r = n;
  for (std::uint64_t p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "mobius requires n >= 1");
  int sign = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      lo.push_back(d);
      if (d != n / d) hi.push_back(n / d);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

}  // namespace cycmds
