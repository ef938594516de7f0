#pragma once

// Analysis of the reduced codes over F_q: MDS and cyclicity checks, Schur
// squares, Reed-Solomon classification and the end-to-end pipeline.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycmds/badprimes.hpp"
#include "cycmds/ffield.hpp"

namespace cycmds {

// ----------------------------------------------------- linear algebra

struct Echelon {
  FieldMatrix reduced;               // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank() const { return pivots.size(); }
};

Echelon row_echelon(const FieldCtx& ctx, FieldMatrix m);
std::size_t rank(const FieldCtx& ctx, const FieldMatrix& m);
/// Nonzero rows of the reduced echelon form.
FieldMatrix row_basis(const FieldCtx& ctx, const FieldMatrix& m);
/// Basis (as rows) of { x : m x^T = 0 }; generator matrix of the dual code.
FieldMatrix nullspace(const FieldCtx& ctx, const FieldMatrix& m);
FElem determinant(const FieldCtx& ctx, FieldMatrix square);

// ------------------------------------------------------- code checks

/// True iff every maximal minor is nonzero. Throws RankDeficient when the
/// rows themselves are dependent.
bool is_mds(const FieldCtx& ctx, const FieldMatrix& m);
/// Single-threaded reference for is_mds.
bool is_mds_serial(const FieldCtx& ctx, const FieldMatrix& m);

struct CodewordBudget {
  std::uint64_t max_codewords = 10'000'000;
};

/// Minimum weight over nonzero codewords by enumerating all q^k messages.
/// Throws BudgetExceeded when q^k exceeds the budget.
int brute_min_distance(const FieldCtx& ctx, const FieldMatrix& m, const CodewordBudget& budget = {});
int brute_min_distance_serial(const FieldCtx& ctx, const FieldMatrix& m, const CodewordBudget& budget = {});

/// Row space closed under the right cyclic shift of coordinates.
bool is_cyclic(const FieldCtx& ctx, const FieldMatrix& m);

/// dim of the span of all coordinate-wise products of basis-row pairs.
std::size_t schur_square_dim(const FieldCtx& ctx, const FieldMatrix& m);

enum class Classification { RS, NonRS, Indeterminate };
enum class ClassificationSide { Code, Dual, None };

const char* to_string(Classification c);
const char* to_string(ClassificationSide s);

struct RsVerdict {
  Classification classification = Classification::Indeterminate;
  ClassificationSide side = ClassificationSide::None;
  std::size_t tested_schur_dim = 0;  // 0 when side == None
};

/// GRS test by Schur-square dimension: applied to the code when
/// k <= (n-1)/2, to the dual when n-k <= (n-1)/2, Indeterminate otherwise.
/// Throws NotMds.
RsVerdict classify_rs(const FieldCtx& ctx, const FieldMatrix& m);

/// J (sorted) has constant consecutive differences; sets of size <= 2 count.
bool is_arithmetic_progression(const std::vector<int>& J);
/// |{(a + b) mod n : a, b in J}|
std::size_t sumset_mod_size(const std::vector<int>& J, int n);

// ----------------------------------------------------------- pipeline

struct FieldSummary {
  std::uint64_t p = 0;
  unsigned f = 0;
  std::uint64_t q = 0;
  int n = 0;
  std::vector<std::uint64_t> modulus;
  std::vector<std::uint64_t> zeta;
  int root_exponent = 1;

  static FieldSummary of(const FieldCtx& ctx);
  friend bool operator==(const FieldSummary&, const FieldSummary&) = default;
};

struct CodeReport {
  CodeSpec spec;
  FieldSummary field;
  bool is_mds = false;
  bool is_cyclic = false;
  std::optional<int> min_distance;
  std::string min_distance_method;  // "brute_force" or "minor_criterion"
  std::size_t schur_dim = 0;        // of the code itself
  Classification classification = Classification::Indeterminate;
  ClassificationSide classification_side = ClassificationSide::None;
  std::size_t tested_schur_dim = 0;
  bool ap_flag = false;
  std::size_t sumset_mod_size = 0;
  std::vector<BigInt> bad_primes;
  std::uint64_t certificate_count = 0;
  std::vector<std::string> notices;

  friend bool operator==(const CodeReport&, const CodeReport&) = default;
};

struct AnalyzeOptions {
  CodewordBudget codewords;
  /// Use zeta'^t instead of the canonical root (another prime above p).
  int root_exponent = 1;
  bool parallel = true;
};

/// Full pipeline at prime p given an existing certification of `spec`.
/// Throws ZeroMinorPresent, BadPrime, and InternalConsistency if a good
/// prime yields a non-MDS reduction.
CodeReport analyze(const CodeSpec& spec, std::uint64_t p, const BadPrimeReport& bad,
                   const AnalyzeOptions& opts = {});
CodeReport analyze(const CodeSpec& spec, std::uint64_t p, const AnalyzeOptions& opts = {},
                   const BadPrimeOptions& bad_opts = {});

/// Reports for the first `count` good primes up to `prime_limit`.
std::vector<CodeReport> analyze_auto(const CodeSpec& spec, std::uint64_t prime_limit, std::size_t count,
                                     const BadPrimeReport& bad, const AnalyzeOptions& opts = {});

/// Defining set {0, 1, 2, 4, ..., 2^(k-2)}.
std::vector<int> binary_defining_set(int k);

/// n = 2^s + 1, J = binary_defining_set(k), analyzed at p = 2 over F_{4^s}.
/// Throws PreconditionViolated unless s >= 3, k >= 4 and 2^(k-2) < n/2.
CodeReport binary_construction(int s, int k, const AnalyzeOptions& opts = {},
                               const BadPrimeOptions& bad_opts = {});

}  // namespace cycmds
