#pragma once

// Residue fields of Z[zeta_n]: F_{p^f} with f = ord_n(p), a canonical
// primitive n-th root of unity zeta', and the reduction map zeta_n -> zeta'.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cycmds/cycmatrix.hpp"

namespace cycmds {

/// Field element: coefficient vector c_0 + c_1 x + ... + c_{f-1} x^{f-1}
/// over Z/p packed as the base-p integer sum c_i p^i, so 0 <= e < q.
using FElem = std::uint64_t;

class FieldCtx {
 public:
  std::uint64_t p() const { return p_; }
  unsigned f() const { return f_; }
  std::uint64_t q() const { return q_; }
  int n() const { return n_; }
  /// Monic, f + 1 coefficients, low degree first.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  FElem zeta() const { return zeta_; }
  /// Exponent t with zeta() = canonical_zeta^t (1 unless re-rooted).
  int root_exponent() const { return root_exponent_; }

  FElem add(FElem a, FElem b) const;
  FElem sub(FElem a, FElem b) const;
  FElem neg(FElem a) const { return sub(0, a); }
  FElem mul(FElem a, FElem b) const;
  FElem pow(FElem a, std::uint64_t e) const;
  /// Throws PreconditionViolated on zero.
  FElem inv(FElem a) const;

  FElem from_int(const BigInt& v) const;
  FElem from_coeffs(std::span<const std::uint64_t> c) const;
  std::vector<std::uint64_t> coeffs(FElem a) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(FElem a) const;

  /// All roots of Phi_n in this field: zeta^t for 1 <= t < n, gcd(t, n) = 1.
  std::vector<FElem> primitive_nth_roots() const;

  /// The same field with zeta' replaced by zeta'^t, gcd(t, n) = 1. This is
  /// the reduction modulo a different prime above p.
  FieldCtx with_root_exponent(int t) const;

  std::string describe() const;

  friend bool operator==(const FieldCtx&, const FieldCtx&) = default;

 private:
  friend FieldCtx build_field(std::uint64_t p, int n);

  std::uint64_t p_ = 0;
  unsigned f_ = 0;
  std::uint64_t q_ = 0;
  int n_ = 0;
  std::vector<std::uint64_t> modulus_;
  FElem zeta_ = 0;
  int root_exponent_ = 1;
};

/// F_{p^f}, f = ord_n(p). The modulus is the first monic irreducible
/// polynomial of degree f when the lower coefficients are read as the base-p
/// number sum c_i p^i and scanned upward; zeta' = g^((q-1)/n) for the least
/// generator g of F_q^* in the same packed order.
/// Throws Ramified when p | n, OutOfRange when p >= 2^32 or q >= 2^62.
FieldCtx build_field(std::uint64_t p, int n);

struct SplittingData {
  std::uint64_t f = 0;  // residue degree
  std::uint64_t g = 0;  // number of primes above p
  std::uint64_t e = 1;  // ramification index

  friend bool operator==(const SplittingData&, const SplittingData&) = default;
};

SplittingData splitting_data(std::uint64_t p, int n);

/// Ben-Or irreducibility test over Z/p; `monic` is low degree first.
bool is_irreducible_mod_p(std::span<const std::uint64_t> monic, std::uint64_t p);

/// Row-major matrix over a FieldCtx.
struct FieldMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<FElem> a;

  FieldMatrix() = default;
  FieldMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  FElem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  FElem at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;
};

/// rho(a) = rep(a)(zeta'). Throws ConductorMismatch.
FElem reduce_element(const CycInt& a, const FieldCtx& ctx);
FieldMatrix reduce_matrix(const CycMatrix& g, const FieldCtx& ctx);

/// Inverse of reduce_matrix on matrices whose nonzero entries are powers of
/// zeta': 0 -> 0, zeta'^e -> zeta_n^e. Throws NotInCyclicGroup.
CycMatrix lift_matrix(const FieldMatrix& m, const FieldCtx& ctx);

}  // namespace cycmds
