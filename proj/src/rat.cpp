#include "oiv/rat.hpp"

#include <algorithm>

namespace oiv {

long vp_int(const Int& a, long p) {
  require(a != 0, "vp of zero");
  Int r = a;
  long v = 0;
  while (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
    ++v;
  }
  return v;
}

long vp_rat(const Rat& a, long p) {
  require(a != 0, "vp of zero");
  return vp_int(a.get_num(), p) - vp_int(a.get_den(), p);
}

Int pk(long p, long k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(k));
  return r;
}

int legendre_unit(const Int& a, long p) {
  require(p > 2, "legendre needs odd prime");
  Int pp(p);
  require(!mpz_divisible_p(a.get_mpz_t(), pp.get_mpz_t()), "legendre of non-unit");
  return mpz_legendre(a.get_mpz_t(), pp.get_mpz_t());
}

long least_nonresidue(long p) {
  for (long u = 2; u < p; ++u)
    if (legendre_unit(Int(u), p) == -1) return u;
  throw integrity_error("no nonresidue found");
}

Rat unit_part(const Rat& a, long p) {
  long v = vp_rat(a, p);
  Rat scale(pk(p, v >= 0 ? v : -v));
  return v >= 0 ? Rat(a / scale) : Rat(a * scale);
}

Int mod_pk(const Rat& a, long p, long k) {
  Int m = pk(p, k);
  if (a == 0) return Int(0);
  require(vp_int(a.get_den(), p) == 0, "mod_pk: denominator not a p-unit");
  Int num = a.get_num() % m;
  if (num < 0) num += m;
  Int den_inv = inv_mod(a.get_den(), m);
  Int r = (num * den_inv) % m;
  if (r < 0) r += m;
  return r;
}

Int inv_mod(const Int& a, const Int& m) {
  Int r;
  int ok = mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  ensure(ok != 0, "non-invertible residue");
  return r;
}

Int sqrt_mod_pk(const Int& a, long p, long k) {
  require(p > 2, "sqrt_mod_pk needs odd prime");
  Int m = pk(p, k);
  Int a0 = a % m;
  if (a0 < 0) a0 += m;
  require(legendre_unit(a0, p) == 1, "not a unit square");
  // Base root modulo p by scan (p is small throughout this project).
  Int x(-1);
  for (long c = 1; c < p; ++c) {
    if ((Int(c) * c - a0) % p == 0) {
      x = c;
      break;
    }
  }
  ensure(x >= 0, "square root scan failed");
  // Newton: x <- (x + a/x)/2, doubling precision each round.
  long prec = 1;
  while (prec < k) {
    prec = std::min(2 * prec, k);
    Int mm = pk(p, prec);
    Int inv2x = inv_mod(2 * x % mm, mm);
    x = (x + (a0 % mm - x * x % mm) % mm * inv2x) % mm;
    if (x < 0) x += mm;
  }
  ensure((x * x - a0) % m == 0, "sqrt lift failed");
  return x;
}

std::string rat_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rat r{Int(s)};
      return r;
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw usage_error("zero denominator: " + s);
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw usage_error("bad rational literal: " + s);
  }
}

}  // namespace oiv
