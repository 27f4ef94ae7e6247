#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "oiv/rat.hpp"

namespace oiv::ff {

class FF;

// Residue-class polynomial c[0] + c[1] x + ... + c[k-1] x^{k-1} over F_p.
// The lexicographic code orders elements with the constant coefficient most
// significant: code = c[0] p^{k-1} + c[1] p^{k-2} + ... + c[k-1].
struct FFElem {
  const FF* F = nullptr;
  std::vector<int> c;

  bool is_zero() const;
  bool is_one() const;
  long code() const;
  bool operator==(const FFElem& o) const { return F == o.F && c == o.c; }
  bool operator!=(const FFElem& o) const { return !(*this == o); }
  bool operator<(const FFElem& o) const { return code() < o.code(); }
};

FFElem operator+(const FFElem& a, const FFElem& b);
FFElem operator-(const FFElem& a, const FFElem& b);
FFElem operator-(const FFElem& a);
FFElem operator*(const FFElem& a, const FFElem& b);

class FF {
 public:
  long p = 0;
  long k = 0;
  long q = 0;                 // p^k
  std::vector<int> modulus;   // monic, length k+1, modulus[i] = x^i coefficient

  // Cached accessor; the modulus is the lexicographically least monic
  // irreducible of degree k (same code order as elements, extended to the
  // non-leading coefficient tuple).
  static const FF* get(long p, long k);

  FFElem zero() const;
  FFElem one() const;
  FFElem gen() const;  // class of x
  FFElem from_int(long a) const;
  FFElem from_coeffs(std::vector<int> cs) const;
  FFElem from_code(long code) const;

  FFElem add(const FFElem& a, const FFElem& b) const;
  FFElem sub(const FFElem& a, const FFElem& b) const;
  FFElem neg(const FFElem& a) const;
  FFElem mul(const FFElem& a, const FFElem& b) const;
  FFElem inv(const FFElem& a) const;
  FFElem pow(const FFElem& a, const Int& e) const;
  FFElem frobenius(const FFElem& a, long j) const;  // a^{p^j}

  // Galois theory relative to the subfield of p^d elements, d | k.
  FFElem trace_to(const FFElem& a, long d) const;
  FFElem norm_to(const FFElem& a, long d) const;
  bool in_subfield(const FFElem& a, long d) const;

  bool is_square(const FFElem& a) const;  // a != 0

  FFElem primitive_root() const;      // least code among generators
  long dlog(const FFElem& x) const;   // base primitive_root(); x != 0
  long mult_order(const FFElem& a) const;

 private:
  FF() = default;
  mutable std::mutex cache_mu_;           // guards the lazy caches below
  mutable FFElem prim_;                   // cached primitive root
  mutable bool prim_ready_ = false;
  mutable std::vector<long> dlog_table_;  // full table when q small
  mutable std::vector<long> q1_primes_;   // distinct prime divisors of q-1
  void ensure_prim() const;
  long dlog_bsgs(const FFElem& x) const;
};

// Deterministic embedding of one field into another of divisible degree:
// the subfield generator goes to the least-code root of its modulus.
class SubfieldMap {
 public:
  SubfieldMap(const FF* sub, const FF* big);
  const FF* sub() const { return sub_; }
  const FF* big() const { return big_; }
  const FFElem& root() const { return root_; }
  FFElem embed(const FFElem& a) const;
  bool in_image(const FFElem& y) const;
  FFElem section(const FFElem& y) const;  // inverse of embed; y must be in image

 private:
  const FF* sub_;
  const FF* big_;
  FFElem root_;
  std::map<long, long> back_;  // big code -> sub code
};

// Character of F_{q^n}^x = E^x of index m against the fixed primitive root g:
// value at g^j is zeta_N^{mj}, N = q^n - 1, q the base field size inferred
// from the factor count n.
class TorusChar {
 public:
  TorusChar(const FF* E, long n, long m);
  const FF* field() const { return E_; }
  long factors() const { return n_; }
  long index() const { return m_; }
  long order_N() const { return N_; }
  long base_q() const { return q_; }
  long value_exponent(const FFElem& x) const;  // m*dlog(x) mod N
  int at_minus_one() const;                    // (-1)^m
  bool is_regular() const;                     // Frobenius orbit of m has size n

 private:
  const FF* E_;
  long n_, m_, N_, q_;
};

}  // namespace oiv::ff
