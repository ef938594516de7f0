#pragma once

// Characteristic-zero certification of a cyclic code: every maximal minor of
// G is computed exactly in Z[zeta_n], vanishing minors are recorded, and the
// primes dividing the absolute norms of the nonzero ones form the bad set.

#include <cstdint>
#include <optional>
#include <vector>

#include "cycmds/cycmatrix.hpp"
#include "cycmds/numth.hpp"

namespace cycmds {

struct MinorCertificate {
  std::vector<int> subset;  // 1-based column indices, increasing
  CycInt det;
  BigInt abs_norm;                   // |N(det)|, zero iff det == 0
  std::optional<FactoredInt> factors;  // absent when det == 0

  friend bool operator==(const MinorCertificate&, const MinorCertificate&) = default;
};

/// Minor-level evidence for an arbitrary matrix over Z[zeta_n].
struct MinorCensus {
  bool has_zero_minor = false;
  std::vector<std::vector<int>> zero_minor_subsets;  // 1-based
  std::vector<BigInt> bad_primes;                    // ascending, distinct
  std::vector<MinorCertificate> certificates;        // lexicographic by subset

  friend bool operator==(const MinorCensus&, const MinorCensus&) = default;
};

struct BadPrimeReport {
  CodeSpec spec;
  MinorCensus census;

  bool has_zero_minor() const { return census.has_zero_minor; }
  const std::vector<BigInt>& bad_primes() const { return census.bad_primes; }
  bool is_bad(std::uint64_t p) const;

  friend bool operator==(const BadPrimeReport&, const BadPrimeReport&) = default;
};

struct BadPrimeOptions {
  MinorOptions minors;
  FactorBudget factor;
  /// false selects the single-threaded reference path.
  bool parallel = true;
};

MinorCensus certify_minors(const CycMatrix& g, const BadPrimeOptions& opts = {});

/// Runs the census on the generator matrix of `spec`. P_bad is reported even
/// when some minors vanish. Throws MinorBudgetExceeded and
/// FactorizationIncomplete.
BadPrimeReport compute_bad_primes(const CodeSpec& spec, const BadPrimeOptions& opts = {});

/// Primes p <= limit with p outside P_bad and p not dividing n; when
/// `split_only`, additionally n | p - 1. Throws ZeroMinorPresent.
std::vector<std::uint64_t> good_primes(const BadPrimeReport& report, std::uint64_t limit,
                                       bool split_only = false);

}  // namespace cycmds
