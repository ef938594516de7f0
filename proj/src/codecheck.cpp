#include "cycmds/codecheck.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "cycmds/error.hpp"
#include "cycmds/parallel.hpp"

namespace cycmds {

// ----------------------------------------------------- linear algebra

Echelon row_echelon(const FieldCtx& ctx, FieldMatrix m) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t piv = row;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    }
    const FElem inv = ctx.inv(m.at(row, col));
    for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = ctx.mul(m.at(row, j), inv);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const FElem factor = m.at(r, col);
      for (std::size_t j = col; j < m.cols; ++j) {
        m.at(r, j) = ctx.sub(m.at(r, j), ctx.mul(factor, m.at(row, j)));
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const FieldCtx& ctx, const FieldMatrix& m) { return row_echelon(ctx, m).rank(); }

FieldMatrix row_basis(const FieldCtx& ctx, const FieldMatrix& m) {
  Echelon e = row_echelon(ctx, m);
  FieldMatrix b(e.rank(), m.cols);
  for (std::size_t i = 0; i < e.rank(); ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) b.at(i, j) = e.reduced.at(i, j);
  }
  return b;
}

FieldMatrix nullspace(const FieldCtx& ctx, const FieldMatrix& m) {
  Echelon e = row_echelon(ctx, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  FieldMatrix basis(m.cols - e.rank(), m.cols);
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    basis.at(out, free) = 1;
    for (std::size_t i = 0; i < e.rank(); ++i) {
      basis.at(out, e.pivots[i]) = ctx.neg(e.reduced.at(i, free));
    }
    ++out;
  }
  return basis;
}

FElem determinant(const FieldCtx& ctx, FieldMatrix a) {
  if (a.rows != a.cols) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  const std::size_t k = a.rows;
  FElem det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && a.at(piv, c) == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < k; ++j) std::swap(a.at(piv, j), a.at(c, j));
      det = ctx.neg(det);
    }
    det = ctx.mul(det, a.at(c, c));
    const FElem inv = ctx.inv(a.at(c, c));
    for (std::size_t r = c + 1; r < k; ++r) {
      if (a.at(r, c) == 0) continue;
      const FElem factor = ctx.mul(a.at(r, c), inv);
      for (std::size_t j = c; j < k; ++j) a.at(r, j) = ctx.sub(a.at(r, j), ctx.mul(factor, a.at(c, j)));
    }
  }
  return det;
}

// ------------------------------------------------------- code checks

namespace {

FieldMatrix column_subset(const FieldMatrix& m, const std::vector<int>& cols) {
  FieldMatrix s(m.rows, cols.size());
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = m.at(i, static_cast<std::size_t>(cols[j]));
  }
  return s;
}

template <class ForIndex>
bool is_mds_impl(const FieldCtx& ctx, const FieldMatrix& m, ForIndex for_index) {
  const std::size_t k = m.rows;
  if (k == 0 || k > m.cols) throw Error(ErrorCode::PreconditionViolated, "need 1 <= k <= n");
  if (rank(ctx, m) < k) {
    throw Error(ErrorCode::RankDeficient, "generator rows are linearly dependent");
  }
  std::vector<std::vector<int>> subsets;
  std::vector<int> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = static_cast<int>(i);
  do {
    subsets.push_back(comb);
  } while (next_combination(comb, static_cast<int>(m.cols)));
  std::vector<char> nonzero(subsets.size(), 0);
  for_index(subsets.size(), [&](std::size_t i) {
    nonzero[i] = determinant(ctx, column_subset(m, subsets[i])) != 0;
  });
  return std::all_of(nonzero.begin(), nonzero.end(), [](char c) { return c != 0; });
}

std::uint64_t message_count(const FieldCtx& ctx, std::size_t k, const CodewordBudget& budget) {
  unsigned __int128 total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= ctx.q();
    if (total > budget.max_codewords) {
      throw Error(ErrorCode::BudgetExceeded, "q^k codewords exceed the budget of " +
                                                 std::to_string(budget.max_codewords));
    }
  }
  return static_cast<std::uint64_t>(total);
}

// Minimum nonzero weight over messages whose first coordinate is `lead`.
int min_weight_with_lead(const FieldCtx& ctx, const FieldMatrix& m, FElem lead) {
  const std::size_t k = m.rows, n = m.cols;
  const std::uint64_t q = ctx.q();
  std::vector<std::vector<FElem>> partial(k, std::vector<FElem>(n, 0));
  for (std::size_t j = 0; j < n; ++j) partial[0][j] = ctx.mul(lead, m.at(0, j));
  int best = std::numeric_limits<int>::max();
  std::vector<FElem> digit(k, 0);
  // Odometer over coordinates 1..k-1; partial[d] = sum of the first d+1 terms.
  std::size_t depth = 1;
  if (k == 1) {
    int w = 0;
    for (FElem v : partial[0]) w += v != 0;
    return w == 0 ? best : w;
  }
  for (std::size_t d = 1; d < k; ++d) partial[d] = partial[d - 1];
  for (;;) {
    const auto& leaf = partial[k - 1];
    int w = 0;
    for (FElem v : leaf) w += v != 0;
    if (w != 0) best = std::min(best, w);
    // advance the last digit that can move
    depth = k - 1;
    while (depth >= 1 && digit[depth] + 1 == q) --depth;
    if (depth == 0) break;
    ++digit[depth];
    for (std::size_t j = 0; j < n; ++j) {
      partial[depth][j] = ctx.add(partial[depth - 1][j], ctx.mul(digit[depth], m.at(depth, j)));
    }
    for (std::size_t d = depth + 1; d < k; ++d) {
      digit[d] = 0;
      partial[d] = partial[depth];
    }
  }
  return best;
}

template <class ForIndex>
int brute_min_distance_impl(const FieldCtx& ctx, const FieldMatrix& m, const CodewordBudget& budget,
                            ForIndex for_index) {
  if (m.rows == 0) throw Error(ErrorCode::PreconditionViolated, "empty generator matrix");
  message_count(ctx, m.rows, budget);
  std::vector<int> best(ctx.q(), std::numeric_limits<int>::max());
  for_index(ctx.q(), [&](std::size_t lead) { best[lead] = min_weight_with_lead(ctx, m, lead); });
  const int d = *std::min_element(best.begin(), best.end());
  if (d == std::numeric_limits<int>::max()) {
    throw Error(ErrorCode::RankDeficient, "the code has no nonzero codeword");
  }
  return d;
}

}  // namespace

bool is_mds(const FieldCtx& ctx, const FieldMatrix& m) {
  return is_mds_impl(ctx, m, [](std::size_t n, auto&& body) { parallel_for_index(n, body); });
}

bool is_mds_serial(const FieldCtx& ctx, const FieldMatrix& m) {
  return is_mds_impl(ctx, m, [](std::size_t n, auto&& body) { serial_for_index(n, body); });
}

int brute_min_distance(const FieldCtx& ctx, const FieldMatrix& m, const CodewordBudget& budget) {
  return brute_min_distance_impl(ctx, m, budget,
                                 [](std::size_t n, auto&& body) { parallel_for_index(n, body); });
}

int brute_min_distance_serial(const FieldCtx& ctx, const FieldMatrix& m, const CodewordBudget& budget) {
  return brute_min_distance_impl(ctx, m, budget, [](std::size_t n, auto&& body) { serial_for_index(n, body); });
}

bool is_cyclic(const FieldCtx& ctx, const FieldMatrix& m) {
  FieldMatrix stacked(2 * m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      stacked.at(i, j) = m.at(i, j);
      // right shift: (c_{n-1}, c_0, ..., c_{n-2})
      stacked.at(m.rows + i, (j + 1) % m.cols) = m.at(i, j);
    }
  }
  return rank(ctx, stacked) == rank(ctx, m);
}

std::size_t schur_square_dim(const FieldCtx& ctx, const FieldMatrix& m) {
  const FieldMatrix b = row_basis(ctx, m);
  const std::size_t k = b.rows;
  FieldMatrix products(k * (k + 1) / 2, b.cols);
  std::size_t r = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j, ++r) {
      for (std::size_t c = 0; c < b.cols; ++c) products.at(r, c) = ctx.mul(b.at(i, c), b.at(j, c));
    }
  }
  return rank(ctx, products);
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::RS: return "RS";
    case Classification::NonRS: return "NonRS";
    case Classification::Indeterminate: return "Indeterminate";
  }
  return "?";
}

const char* to_string(ClassificationSide s) {
  switch (s) {
    case ClassificationSide::Code: return "code";
    case ClassificationSide::Dual: return "dual";
    case ClassificationSide::None: return "none";
  }
  return "?";
}

RsVerdict classify_rs(const FieldCtx& ctx, const FieldMatrix& m) {
  if (!is_mds(ctx, m)) throw Error(ErrorCode::NotMds, "classification requires an MDS code");
  const std::size_t n = m.cols, k = m.rows;
  RsVerdict v;
  if (2 * k <= n - 1) {
    v.side = ClassificationSide::Code;
    v.tested_schur_dim = schur_square_dim(ctx, m);
    v.classification = v.tested_schur_dim == 2 * k - 1 ? Classification::RS : Classification::NonRS;
  } else if (2 * (n - k) <= n - 1) {
    // Duals of MDS codes are MDS and duals of GRS codes are GRS.
    v.side = ClassificationSide::Dual;
    v.tested_schur_dim = schur_square_dim(ctx, nullspace(ctx, m));
    v.classification = v.tested_schur_dim == 2 * (n - k) - 1 ? Classification::RS : Classification::NonRS;
  }
  return v;
}

bool is_arithmetic_progression(const std::vector<int>& J) {
  if (J.size() <= 2) return true;
  const int step = J[1] - J[0];
  for (std::size_t i = 2; i < J.size(); ++i) {
    if (J[i] - J[i - 1] != step) return false;
  }
  return true;
}

std::size_t sumset_mod_size(const std::vector<int>& J, int n) {
  std::set<int> sums;
  for (int a : J) {
    for (int b : J) sums.insert((a + b) % n);
  }
  return sums.size();
}

// ----------------------------------------------------------- pipeline

FieldSummary FieldSummary::of(const FieldCtx& ctx) {
  return FieldSummary{ctx.p(), ctx.f(), ctx.q(), ctx.n(), ctx.modulus(), ctx.coeffs(ctx.zeta()),
                      ctx.root_exponent()};
}

CodeReport analyze(const CodeSpec& spec, std::uint64_t p, const BadPrimeReport& bad, const AnalyzeOptions& opts) {
  if (!(bad.spec == spec)) throw Error(ErrorCode::PreconditionViolated, "bad-prime report is for another spec");
  if (bad.has_zero_minor()) {
    throw Error(ErrorCode::ZeroMinorPresent, spec.to_string() + " has a vanishing minor in characteristic zero");
  }
  if (static_cast<std::uint64_t>(spec.n) % p == 0 || bad.is_bad(p)) {
    throw Error(ErrorCode::BadPrime, std::to_string(p) + " is a bad prime for " + spec.to_string());
  }
  FieldCtx ctx = build_field(p, spec.n);
  if (opts.root_exponent != 1) ctx = ctx.with_root_exponent(opts.root_exponent);
  const FieldMatrix m = reduce_matrix(build_generator_matrix(spec), ctx);

  CodeReport r;
  r.spec = spec;
  r.field = FieldSummary::of(ctx);
  r.bad_primes = bad.bad_primes();
  r.certificate_count = bad.census.certificates.size();
  r.is_mds = opts.parallel ? is_mds(ctx, m) : is_mds_serial(ctx, m);
  if (!r.is_mds) {
    throw Error(ErrorCode::InternalConsistency,
                "good prime " + std::to_string(p) + " produced a non-MDS reduction of " + spec.to_string());
  }
  r.is_cyclic = is_cyclic(ctx, m);
  r.schur_dim = schur_square_dim(ctx, m);
  const RsVerdict v = classify_rs(ctx, m);
  r.classification = v.classification;
  r.classification_side = v.side;
  r.tested_schur_dim = v.tested_schur_dim;
  r.ap_flag = is_arithmetic_progression(spec.J);
  r.sumset_mod_size = sumset_mod_size(spec.J, spec.n);
  try {
    r.min_distance = opts.parallel ? brute_min_distance(ctx, m, opts.codewords)
                                   : brute_min_distance_serial(ctx, m, opts.codewords);
    r.min_distance_method = "brute_force";
    if (*r.min_distance != spec.n - spec.k() + 1) {
      throw Error(ErrorCode::InternalConsistency, "brute-force distance disagrees with the minor test");
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    r.min_distance = spec.n - spec.k() + 1;
    r.min_distance_method = "minor_criterion";
    r.notices.push_back("codeword enumeration skipped: q^k exceeds the codeword budget of " +
                        std::to_string(opts.codewords.max_codewords));
  }
  return r;
}

CodeReport analyze(const CodeSpec& spec, std::uint64_t p, const AnalyzeOptions& opts,
                   const BadPrimeOptions& bad_opts) {
  return analyze(spec, p, compute_bad_primes(spec, bad_opts), opts);
}

std::vector<CodeReport> analyze_auto(const CodeSpec& spec, std::uint64_t prime_limit, std::size_t count,
                                     const BadPrimeReport& bad, const AnalyzeOptions& opts) {
  std::vector<CodeReport> out;
  for (std::uint64_t p : good_primes(bad, prime_limit)) {
    if (out.size() >= count) break;
    out.push_back(analyze(spec, p, bad, opts));
  }
  return out;
}

std::vector<int> binary_defining_set(int k) {
  std::vector<int> J{0};
  for (int i = 0; i + 1 < k; ++i) J.push_back(1 << i);
  return J;
}

CodeReport binary_construction(int s, int k, const AnalyzeOptions& opts, const BadPrimeOptions& bad_opts) {
  if (s < 3 || s > 20 || k < 4) {
    throw Error(ErrorCode::PreconditionViolated, "binary construction needs 3 <= s <= 20 and k >= 4");
  }
  const int n = (1 << s) + 1;
  if (k - 2 >= 30 || 2 * (1 << (k - 2)) >= n) {
    throw Error(ErrorCode::PreconditionViolated, "need 2^(k-2) < n/2");
  }
  const CodeSpec spec = CodeSpec::make(n, binary_defining_set(k));
  CodeReport r = analyze(spec, 2, opts, bad_opts);
  if (r.field.f != static_cast<unsigned>(2 * s)) {
    throw Error(ErrorCode::InternalConsistency, "residue degree of 2 modulo n is not 2s");
  }
  return r;
}

}  // namespace cycmds
