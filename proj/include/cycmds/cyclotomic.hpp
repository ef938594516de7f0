#pragma once

// Exact arithmetic in Z[zeta_n], represented in the power basis
// 1, zeta, ..., zeta^(phi(n)-1) modulo the cyclotomic polynomial.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cycmds/numth.hpp"

namespace cycmds {

/// Dense integer polynomial, index = degree, trailing zeros trimmed.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(std::size_t degree, const BigInt& c = 1);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const BigInt& leading() const { return c_.back(); }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  std::span<const BigInt> coeffs() const { return c_; }

  BigInt content() const;
  BigInt eval(const BigInt& x) const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const BigInt& s);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Division by a monic divisor; both quotient and remainder are exact.
  static void divrem_monic(const IntPoly& a, const IntPoly& monic, IntPoly& quot, IntPoly& rem);

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// The n-th cyclotomic polynomial. Memoized; safe to call concurrently.
const IntPoly& cyclotomic_poly(int n);

/// Resultant of two integer polynomials by the subresultant PRS.
/// Res(0, g) = 0; for monic f, Res(f, g) = prod over roots a of f of g(a).
BigInt resultant(const IntPoly& f, const IntPoly& g);

/// Element of Z[zeta_n]: exactly euler_phi(n) power-basis coordinates.
class CycInt {
 public:
  /// The zero of Z[zeta_n].
  explicit CycInt(int n);
  /// Reduces an arbitrary integer polynomial representative modulo Phi_n.
  CycInt(int n, const IntPoly& representative);

  static CycInt zero(int n) { return CycInt(n); }
  static CycInt one(int n);
  static CycInt integer(int n, const BigInt& v);
  /// zeta_n^e, e taken modulo n (negative e allowed).
  static CycInt from_power(int n, long long e);
  /// Reduces a group-ring vector (coefficient of zeta^i at index i, i < n).
  static CycInt from_group_ring(int n, std::span<const BigInt> counts);

  int conductor() const { return n_; }
  std::span<const BigInt> coeffs() const { return c_; }
  bool is_zero() const;
  IntPoly rep() const { return IntPoly(c_); }

  CycInt operator-() const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend bool operator==(const CycInt&, const CycInt&) = default;

  std::string to_string() const;

 private:
  void check_same(const CycInt& o) const;

  int n_;
  std::vector<BigInt> c_;
};

CycInt cyc_from_power(int n, long long e);

/// N_{Q(zeta_n)/Q}(a) as Res(Phi_n, rep(a)); signed, norm(0) = 0.
BigInt norm(const CycInt& a);

}  // namespace cycmds
