#pragma once

#include <string>
#include <vector>

#include "oiv/matq.hpp"
#include "oiv/rat.hpp"

namespace oiv::padic {

// One of the four classes of Q_p^x / (Q_p^x)^2 for odd p.
struct SquareClass {
  long p = 0;
  int val_parity = 0;      // v_p mod 2
  int unit_is_square = 1;  // Legendre symbol of the unit part, as 1/0 flag
  bool operator==(const SquareClass& o) const {
    return p == o.p && val_parity == o.val_parity && unit_is_square == o.unit_is_square;
  }
  bool operator<(const SquareClass& o) const {
    return std::pair(val_parity, unit_is_square) < std::pair(o.val_parity, o.unit_is_square);
  }
  std::string label() const;  // "1", "u", "p", "up"
};

SquareClass square_class(const Rat& r, long p);
Rat class_rep(const SquareClass& c);  // 1, u, p, or u*p with the least nonresidue u
std::vector<SquareClass> all_classes(long p);
bool same_class(const Rat& a, const Rat& b, long p);

int hilbert_symbol(const Rat& a, const Rat& b, long p);
// Oracle: primitive solvability of z^2 = a x^2 + b y^2 modulo p^4 on
// square-class representatives.
int hilbert_symbol_brute(const Rat& a, const Rat& b, long p);

struct QFInvariants {
  long n = 0;
  SquareClass disc;
  SquareClass signed_disc;
  int hasse = 1;   // product over i <= j
  int hasse0 = 1;  // product over i < j
};

struct OrbitLabel {
  SquareClass disc;
  int hasse = 1;
  bool operator==(const OrbitLabel& o) const { return disc == o.disc && hasse == o.hasse; }
  bool operator<(const OrbitLabel& o) const {
    return std::pair(disc, hasse) < std::pair(o.disc, o.hasse);
  }
  std::string label() const;
};

MatQ antidiag_form(long n);  // the matrix with ones on the antidiagonal

// Exact symmetric diagonalization: returns (D, P) with transpose(P)*A*P = D.
std::pair<MatQ, MatQ> diagonalize_congruence(const MatQ& A);

QFInvariants invariants(const MatQ& A, long p);
OrbitLabel classify_orbit(const MatQ& A, long p);
bool similar_to_J(const MatQ& A, long p);
std::vector<OrbitLabel> scalar_orbit(const MatQ& A, long p);  // scalars 1, u, p, up
bool in_theta_j(const MatQ& A, long p);

// P with transpose(P)*A*P = B modulo p^N entrywise; precondition_error when
// the invariants differ, integrity_error if internal lifting fails.
MatQ congruence_transform(const MatQ& A, const MatQ& B, long p, long N);

// p-adic approximation helpers shared with the tame extension module.
bool rat_is_padic_square(const Rat& r, long p);     // r != 0
Rat rat_padic_sqrt(const Rat& r, long p, long prec);  // square class of a square; mod p^prec

}  // namespace oiv::padic
