#pragma once

#include <complex>
#include <vector>

#include "oiv/finitefield.hpp"
#include "oiv/rat.hpp"

namespace oiv {

// Element of Z[zeta_N] held in the group-ring form sum_j c[j] zeta_N^j.
// Arithmetic stays in this redundant representation; equality, integrality
// and exact division reduce modulo the N-th cyclotomic polynomial first.
class CycInt {
 public:
  CycInt() : N_(1), c_(1, Int(0)) {}
  explicit CycInt(long N) : N_(N), c_(N, Int(0)) { require(N >= 1, "order must be positive"); }
  static CycInt from_int(long N, const Int& v);
  static CycInt zeta(long N, long j);

  long order() const { return N_; }
  const std::vector<Int>& coeffs() const { return c_; }

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;
  CycInt& operator*=(const CycInt& o);
  CycInt scaled(const Int& s) const;

  CycInt galois(long t) const;  // zeta -> zeta^t, gcd(t, N) = 1
  CycInt conj() const;          // zeta -> zeta^{-1}

  std::vector<Int> canonical() const;  // residue mod Phi_N, degree < phi(N)
  bool is_zero() const;
  bool operator==(const CycInt& o) const;
  bool operator!=(const CycInt& o) const { return !(*this == o); }
  bool is_integer() const;
  Int to_integer() const;                  // integrity_error when not integral
  CycInt div_exact(const Int& d) const;    // integrity_error unless d divides exactly

  std::complex<double> approx() const;  // float cross-check only

 private:
  long N_;
  std::vector<Int> c_;
};

// Coefficients of the N-th cyclotomic polynomial, ascending degree, cached.
const std::vector<Int>& cyclotomic_poly(long N);

// zeta_N^{m*dlog(x)} for N = |E| - 1: the exact character value.
CycInt char_value(const ff::TorusChar& lam, const ff::FFElem& x);

}  // namespace oiv
