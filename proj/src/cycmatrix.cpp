#include "cycmds/cycmatrix.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "cycmds/error.hpp"

namespace cycmds {

CodeSpec CodeSpec::make(int n, std::vector<int> J) {
  if (n < 4) throw Error(ErrorCode::InvalidSpec, "length n must be >= 4, got " + std::to_string(n));
  const int k = static_cast<int>(J.size());
  if (k < 3 || k > n) {
    throw Error(ErrorCode::InvalidSpec, "dimension k must satisfy 3 <= k <= n, got " + std::to_string(k));
  }
  for (int i = 0; i < k; ++i) {
    if (J[i] < 0 || J[i] >= n) {
      throw Error(ErrorCode::InvalidSpec, "defining set element out of [0, n-1]: " + std::to_string(J[i]));
    }
    if (i > 0 && J[i] <= J[i - 1]) {
      throw Error(ErrorCode::InvalidSpec, "defining set must be strictly increasing");
    }
  }
  return CodeSpec{n, std::move(J)};
}

std::string CodeSpec::to_string() const {
  std::ostringstream os;
  os << "(n=" << n << ", J={";
  for (std::size_t i = 0; i < J.size(); ++i) os << (i ? "," : "") << J[i];
  os << "})";
  return os.str();
}

CycMatrix::CycMatrix(int n, std::size_t rows, std::size_t cols)
    : n_(n), rows_(rows), cols_(cols), a_(rows * cols, CycInt(n)) {}

void CycMatrix::set(std::size_t i, std::size_t j, CycInt v) {
  if (v.conductor() != n_) throw Error(ErrorCode::ConductorMismatch, "matrix entry conductor");
  a_[i * cols_ + j] = std::move(v);
}

CycMatrix CycMatrix::columns(std::span<const int> cols) const {
  CycMatrix r(n_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) r.at(i, j) = at(i, static_cast<std::size_t>(cols[j]));
  }
  return r;
}

CycMatrix CycMatrix::submatrix(std::span<const int> rows, std::span<const int> cols) const {
  CycMatrix r(n_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      r.at(i, j) = at(static_cast<std::size_t>(rows[i]), static_cast<std::size_t>(cols[j]));
    }
  }
  return r;
}

CycMatrix build_generator_matrix(const CodeSpec& spec) {
  return build_generator_matrix(spec.n, spec.J);
}

CycMatrix build_generator_matrix(int n, std::span<const int> exponents) {
  if (n < 1) throw Error(ErrorCode::InvalidSpec, "conductor must be >= 1");
  if (exponents.empty() || exponents.size() > static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::InvalidSpec, "need 1 <= k <= n exponents");
  }
  std::set<int> seen;
  for (int j : exponents) {
    if (j < 0 || j >= n || !seen.insert(j).second) {
      throw Error(ErrorCode::InvalidSpec, "exponents must be distinct and within [0, n-1]");
    }
  }
  // Only n distinct entries exist; build each power once.
  std::vector<CycInt> powers;
  powers.reserve(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) powers.push_back(CycInt::from_power(n, e));
  CycMatrix g(n, exponents.size(), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    for (int l = 0; l < n; ++l) {
      g.at(i, static_cast<std::size_t>(l)) = powers[static_cast<std::size_t>((exponents[i] * l) % n)];
    }
  }
  return g;
}

// ------------------------------------------------------------ determinants

namespace {

CycInt cofactor_rec(const CycMatrix& m, std::vector<int>& rows, std::vector<int>& cols) {
  const int n = m.conductor();
  const std::size_t size = rows.size();
  if (size == 1) return m.at(static_cast<std::size_t>(rows[0]), static_cast<std::size_t>(cols[0]));
  if (size == 2) {
    const auto r0 = static_cast<std::size_t>(rows[0]), r1 = static_cast<std::size_t>(rows[1]);
    const auto c0 = static_cast<std::size_t>(cols[0]), c1 = static_cast<std::size_t>(cols[1]);
    return m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
  }
  // Expand along the column with the most zeros in the remaining rows.
  std::size_t best = 0;
  std::size_t best_zeros = 0;
  for (std::size_t c = 0; c < size; ++c) {
    std::size_t zeros = 0;
    for (int r : rows) zeros += m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(cols[c])).is_zero();
    if (zeros == size) return CycInt(n);
    if (zeros > best_zeros) {
      best = c;
      best_zeros = zeros;
    }
  }
  const int col = cols[best];
  cols.erase(cols.begin() + static_cast<long>(best));
  CycInt acc(n);
  for (std::size_t i = 0; i < size; ++i) {
    const int row = rows[i];
    const CycInt& entry = m.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col));
    if (entry.is_zero()) continue;
    rows.erase(rows.begin() + static_cast<long>(i));
    CycInt term = entry * cofactor_rec(m, rows, cols);
    rows.insert(rows.begin() + static_cast<long>(i), row);
    if ((i + best) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  cols.insert(cols.begin() + static_cast<long>(best), col);
  return acc;
}

void require_square(const CycMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NotSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace

CycInt determinant_cofactor(const CycMatrix& m) {
  require_square(m);
  if (m.rows() == 0) return CycInt::one(m.conductor());
  std::vector<int> rows(m.rows()), cols(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = cols[i] = static_cast<int>(i);
  return cofactor_rec(m, rows, cols);
}

CycInt determinant_berkowitz(const CycMatrix& m) {
  require_square(m);
  const int n = m.conductor();
  const std::size_t size = m.rows();
  if (size == 0) return CycInt::one(n);
  // poly holds the characteristic polynomial of the leading r x r block,
  // highest coefficient first.
  std::vector<CycInt> poly{CycInt::one(n), -m.at(0, 0)};
  for (std::size_t r = 1; r < size; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^(r-1) C
    std::vector<CycInt> t;
    t.reserve(r + 2);
    t.push_back(CycInt::one(n));
    t.push_back(-m.at(r, r));
    std::vector<CycInt> v(r, CycInt(n));  // A^i C
    for (std::size_t i = 0; i < r; ++i) v[i] = m.at(i, r);
    for (std::size_t power = 0; power < r; ++power) {
      CycInt dot(n);
      for (std::size_t j = 0; j < r; ++j) dot += m.at(r, j) * v[j];
      t.push_back(-dot);
      if (power + 1 < r) {
        std::vector<CycInt> next(r, CycInt(n));
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) next[i] += m.at(i, j) * v[j];
        }
        v = std::move(next);
      }
    }
    std::vector<CycInt> next(r + 2, CycInt(n));
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += t[i - j] * poly[j];
    }
    poly = std::move(next);
  }
  return size % 2 == 0 ? poly[size] : -poly[size];
}

CycInt determinant(const CycMatrix& m) {
  require_square(m);
  return m.rows() <= 6 ? determinant_cofactor(m) : determinant_berkowitz(m);
}

// ------------------------------------------------------------------ minors

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

bool next_combination(std::vector<int>& comb, int m) {
  const int k = static_cast<int>(comb.size());
  int i = k - 1;
  while (i >= 0 && comb[static_cast<std::size_t>(i)] == m - k + i) --i;
  if (i < 0) return false;
  ++comb[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

namespace {

void check_minor_budget(const CycMatrix& g, const MinorOptions& opts) {
  if (g.rows() == 0 || g.rows() > g.cols()) {
    throw Error(ErrorCode::PreconditionViolated, "need 1 <= rows <= cols for maximal minors");
  }
  const std::uint64_t count = binomial(g.cols(), g.rows());
  if (count > opts.minor_budget) {
    throw Error(ErrorCode::MinorBudgetExceeded, std::to_string(count) + " minors exceed the budget of " +
                                                    std::to_string(opts.minor_budget));
  }
}

std::vector<int> first_combination(std::size_t k) {
  std::vector<int> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = static_cast<int>(i);
  return comb;
}

}  // namespace

void for_each_minor_serial(const CycMatrix& g, const MinorVisitor& visit, const MinorOptions& opts) {
  check_minor_budget(g, opts);
  std::vector<int> comb = first_combination(g.rows());
  const int m = static_cast<int>(g.cols());
  do {
    visit(comb, determinant(g.columns(comb)));
  } while (next_combination(comb, m));
}

void for_each_minor(const CycMatrix& g, const MinorVisitor& visit, const MinorOptions& opts) {
  check_minor_budget(g, opts);
  const std::size_t block = std::max<std::size_t>(1, opts.block_size);
  const int m = static_cast<int>(g.cols());
  std::vector<int> comb = first_combination(g.rows());
  std::vector<std::vector<int>> subsets;
  std::vector<CycInt> dets;
  bool more = true;
  while (more) {
    subsets.clear();
    while (more && subsets.size() < block) {
      subsets.push_back(comb);
      more = next_combination(comb, m);
    }
    dets.assign(subsets.size(), CycInt(g.conductor()));
    const long count = static_cast<long>(subsets.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < count; ++i) {
      dets[static_cast<std::size_t>(i)] = determinant(g.columns(subsets[static_cast<std::size_t>(i)]));
    }
    for (std::size_t i = 0; i < subsets.size(); ++i) visit(subsets[i], dets[i]);
  }
}

std::vector<Minor> enumerate_minors(const CycMatrix& g, const MinorOptions& opts) {
  std::vector<Minor> out;
  out.reserve(binomial(g.cols(), g.rows()) <= opts.minor_budget ? binomial(g.cols(), g.rows()) : 0);
  for_each_minor(g, [&](const std::vector<int>& cols, const CycInt& det) { out.push_back({cols, det}); },
                 opts);
  return out;
}

// --------------------------------------------------------------- Chebotarev

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
  }
  return r;
}

// Primes p = 1 (mod n) just below 2^61, with an element of order n.
struct ModularImage {
  u64 p;
  u64 omega;
};

std::vector<ModularImage> modular_images(int n, std::size_t count) {
  std::vector<ModularImage> out;
  const u64 un = static_cast<u64>(n);
  u64 cand = ((u64{1} << 61) / un) * un + 1;
  while (out.size() < count) {
    cand -= un;
    if (!is_prime(BigInt(static_cast<unsigned long>(cand)))) continue;
    for (u64 g = 2;; ++g) {
      const u64 w = powmod(g, (cand - 1) / un, cand);
      if (w == 1) continue;
      // n is prime here, so w != 1 has order exactly n.
      out.push_back({cand, w});
      break;
    }
  }
  return out;
}

bool det_nonzero_mod(std::vector<u64> a, std::size_t k, u64 p) {
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && a[piv * k + c] == 0) ++piv;
    if (piv == k) return false;
    if (piv != c) {
      for (std::size_t j = 0; j < k; ++j) std::swap(a[piv * k + j], a[c * k + j]);
    }
    const u64 inv = powmod(a[c * k + c], p - 2, p);
    for (std::size_t r = c + 1; r < k; ++r) {
      if (a[r * k + c] == 0) continue;
      const u64 f = mulmod(a[r * k + c], inv, p);
      for (std::size_t j = c; j < k; ++j) {
        a[r * k + j] = (a[r * k + j] + p - mulmod(f, a[c * k + j], p)) % p;
      }
    }
  }
  return true;
}

}  // namespace

ChebotarevResult chebotarev_check(int n, const ChebotarevOptions& opts) {
  if (n < 2 || !is_prime(BigInt(n))) {
    throw Error(ErrorCode::PreconditionViolated, std::to_string(n) + " is not prime");
  }
  if (n > opts.max_n) {
    throw Error(ErrorCode::BudgetExceeded,
                "n = " + std::to_string(n) + " exceeds the Chebotarev budget " + std::to_string(opts.max_n));
  }
  const auto images = modular_images(n, 2);
  std::vector<std::vector<u64>> omega_pow(images.size(), std::vector<u64>(static_cast<std::size_t>(n)));
  for (std::size_t t = 0; t < images.size(); ++t) {
    for (int e = 0; e < n; ++e) omega_pow[t][static_cast<std::size_t>(e)] = powmod(images[t].omega, static_cast<u64>(e), images[t].p);
  }
  std::vector<CycInt> zeta_pow;
  for (int e = 0; e < n; ++e) zeta_pow.push_back(CycInt::from_power(n, e));

  ChebotarevResult result;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> rows = first_combination(static_cast<std::size_t>(k));
    do {
      std::vector<int> cols = first_combination(static_cast<std::size_t>(k));
      do {
        ++result.submatrices;
        bool nonzero = false;
        if (!opts.exact) {
          for (std::size_t t = 0; t < images.size() && !nonzero; ++t) {
            std::vector<u64> a(static_cast<std::size_t>(k * k));
            for (int i = 0; i < k; ++i) {
              for (int j = 0; j < k; ++j) {
                a[static_cast<std::size_t>(i * k + j)] =
                    omega_pow[t][static_cast<std::size_t>((rows[static_cast<std::size_t>(i)] * cols[static_cast<std::size_t>(j)]) % n)];
              }
            }
            nonzero = det_nonzero_mod(std::move(a), static_cast<std::size_t>(k), images[t].p);
          }
        }
        if (!nonzero) {
          if (!opts.exact) ++result.exact_fallbacks;
          CycMatrix sub(n, static_cast<std::size_t>(k), static_cast<std::size_t>(k));
          for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
              sub.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                  zeta_pow[static_cast<std::size_t>((rows[static_cast<std::size_t>(i)] * cols[static_cast<std::size_t>(j)]) % n)];
            }
          }
          nonzero = !determinant(sub).is_zero();
        }
        if (!nonzero) result.all_nonzero = false;
      } while (next_combination(cols, n));
    } while (next_combination(rows, n));
  }
  return result;
}

}  // namespace cycmds
