#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cycmds/cyclotomic.hpp"

namespace cycmds {

/// Length n and defining set J of the cyclic code generated by
/// G[i][l] = zeta_n^(J[i] * l), 0 <= l < n.
struct CodeSpec {
  int n = 0;
  std::vector<int> J;

  int k() const { return static_cast<int>(J.size()); }

  /// Validates n >= 4, 3 <= k <= n, J strictly increasing within [0, n-1].
  /// Throws InvalidSpec otherwise.
  static CodeSpec make(int n, std::vector<int> J);

  std::string to_string() const;
  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

/// Row-major matrix over Z[zeta_n].
class CycMatrix {
 public:
  CycMatrix(int n, std::size_t rows, std::size_t cols);

  int conductor() const { return n_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const CycInt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  CycInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, CycInt v);

  /// All rows, the given columns in the given order.
  CycMatrix columns(std::span<const int> cols) const;
  CycMatrix submatrix(std::span<const int> rows, std::span<const int> cols) const;

  friend bool operator==(const CycMatrix&, const CycMatrix&) = default;

 private:
  int n_;
  std::size_t rows_, cols_;
  std::vector<CycInt> a_;
};

CycMatrix build_generator_matrix(const CodeSpec& spec);

/// Same construction without the code-level restrictions on n and k; rows
/// follow the order of `exponents`. Throws InvalidSpec on out-of-range or
/// repeated exponents.
CycMatrix build_generator_matrix(int n, std::span<const int> exponents);

/// Laplace expansion, always along the column with the most zero entries.
CycInt determinant_cofactor(const CycMatrix& m);
/// Berkowitz's division-free characteristic-polynomial algorithm.
CycInt determinant_berkowitz(const CycMatrix& m);
/// Cofactor expansion up to 6x6, Berkowitz beyond. Throws NotSquare.
CycInt determinant(const CycMatrix& m);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Advances `comb` (strictly increasing, values < m) to the next k-subset
/// in lexicographic order. Returns false after the last one.
bool next_combination(std::vector<int>& comb, int m);

struct Minor {
  std::vector<int> columns;  // 0-based, increasing
  CycInt det;

  friend bool operator==(const Minor&, const Minor&) = default;
};

struct MinorOptions {
  std::uint64_t minor_budget = 1'000'000;
  /// Subsets evaluated per parallel block.
  std::size_t block_size = 512;
};

using MinorVisitor = std::function<void(const std::vector<int>& columns, const CycInt& det)>;

/// Reference implementation: one minor at a time, lexicographic order.
void for_each_minor_serial(const CycMatrix& g, const MinorVisitor& visit,
                           const MinorOptions& opts = {});

/// OpenMP implementation. Determinants of a block are computed in parallel,
/// then visited in lexicographic order on the calling thread, so the visitor
/// sees exactly the serial sequence.
void for_each_minor(const CycMatrix& g, const MinorVisitor& visit, const MinorOptions& opts = {});

/// All C(cols, rows) maximal minors in lexicographic order. Throws
/// MinorBudgetExceeded when the count exceeds opts.minor_budget.
std::vector<Minor> enumerate_minors(const CycMatrix& g, const MinorOptions& opts = {});

struct ChebotarevOptions {
  int max_n = 11;
  /// Decide every submatrix by an exact determinant in Z[zeta_n] instead of
  /// the modular filter. Only practical for n <= 7.
  bool exact = false;
};

struct ChebotarevResult {
  bool all_nonzero = true;
  std::uint64_t submatrices = 0;
  /// Submatrices the modular filter could not clear and that needed an
  /// exact determinant.
  std::uint64_t exact_fallbacks = 0;
};

/// Checks every square submatrix of the n x n Fourier matrix zeta_n^(ij) for
/// a nonzero determinant. A nonzero image under a reduction Z[zeta_n] -> F_p
/// (p = 1 mod n, p near 2^61) proves the determinant nonzero; submatrices
/// whose image vanishes fall back to the exact determinant.
/// Throws PreconditionViolated for composite n and BudgetExceeded above max_n.
ChebotarevResult chebotarev_check(int n, const ChebotarevOptions& opts = {});

}  // namespace cycmds
