#pragma once
#include <gmpxx.h>

#include <string>

#include "oiv/errors.hpp"

namespace oiv {

using Int = mpz_class;
using Rat = mpq_class;

// p-adic valuation; a must be nonzero.
long vp_int(const Int& a, long p);
long vp_rat(const Rat& a, long p);

Int pk(long p, long k);

// Legendre symbol of a unit modulo an odd prime; +1 or -1.
int legendre_unit(const Int& a, long p);

// Least positive quadratic nonresidue modulo an odd prime.
long least_nonresidue(long p);

// Unit part a * p^{-vp(a)} of a nonzero rational, as an exact rational.
Rat unit_part(const Rat& a, long p);

// Canonical representative in [0, p^k) of a rational with p-unit denominator.
Int mod_pk(const Rat& a, long p, long k);

Int inv_mod(const Int& a, const Int& m);

// Square root of a unit square modulo p^k (p odd), canonical in [0, p^k).
Int sqrt_mod_pk(const Int& a, long p, long k);

// Exact serialization: "num/den" in lowest terms, "num" when den = 1.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

}  // namespace oiv
