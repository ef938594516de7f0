#pragma once

// Integer number theory over GMP integers: deterministic primality,
// factorization, multiplicative orders and the classical arithmetic
// functions used to build cyclotomic polynomials and finite fields.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace cycmds {

using BigInt = mpz_class;

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A non-negative integer together with its complete prime factorization.
/// Factors are sorted strictly ascending by prime; value 1 has no factors.
struct FactoredInt {
  BigInt value;
  std::vector<PrimePower> factors;

  BigInt recompose() const;
  friend bool operator==(const FactoredInt&, const FactoredInt&) = default;
};

/// Above this bound the fixed Miller-Rabin base set is no longer a proof.
/// is_prime still answers "composite" there (a witness is a proof) but
/// refuses to answer "prime".
const BigInt& primality_certification_bound();

/// Deterministic Miller-Rabin with bases 2..41. Throws OutOfRange for a
/// probable prime above primality_certification_bound().
bool is_prime(const BigInt& m);

struct FactorBudget {
  /// Total Pollard-rho iterations allowed across all cofactors.
  std::uint64_t max_rho_iterations = 20'000'000;
};

/// Trial division up to 10^4, then Brent's variant of Pollard rho with the
/// deterministic polynomial sequence x^2 + c, c = 1, 2, ... Throws
/// FactorizationIncomplete naming the stuck cofactor when the budget runs out.
FactoredInt factorize(const BigInt& m, const FactorBudget& budget = {});

/// Smallest f >= 1 with p^f = 1 (mod n). Throws NotCoprime if gcd(p, n) != 1.
std::uint64_t multiplicative_order(const BigInt& p, std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
int mobius(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Distinct prime divisors of a machine-word integer, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace cycmds
