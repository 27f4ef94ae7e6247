#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "oiv/cycint.hpp"

using namespace oiv;
using namespace oiv::ff;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == std::vector<Int>{-1, 1});
  CHECK(cyclotomic_poly(2) == std::vector<Int>{1, 1});
  CHECK(cyclotomic_poly(3) == std::vector<Int>{1, 1, 1});
  CHECK(cyclotomic_poly(6) == std::vector<Int>{1, -1, 1});
  CHECK(cyclotomic_poly(8) == std::vector<Int>{1, 0, 0, 0, 1});
  CHECK(cyclotomic_poly(12) == std::vector<Int>{1, 0, -1, 0, 1});
  // phi(26) = 12
  CHECK(cyclotomic_poly(26).size() == 13);
  // phi(105) = 48; first cyclotomic with a coefficient of modulus 2
  const auto& c105 = cyclotomic_poly(105);
  CHECK(c105.size() == 49);
  CHECK(c105[7] == -2);
}

TEST_CASE("relations among roots of unity") {
  // zeta_6^2 = zeta_6 - 1
  CHECK(CycInt::zeta(6, 2) == CycInt::zeta(6, 1) - CycInt::from_int(6, Int(1)));
  // 1 + zeta_5 + ... + zeta_5^4 = 0
  CycInt s(5);
  for (long j = 0; j < 5; ++j) s += CycInt::zeta(5, j);
  CHECK(s.is_zero());
  CHECK(s.is_integer());
  CHECK(s.to_integer() == 0);
  // zeta * conj(zeta) = 1
  CycInt z = CycInt::zeta(26, 7);
  CHECK(z * z.conj() == CycInt::from_int(26, Int(1)));
  // zeta_26^13 = -1
  CHECK(CycInt::zeta(26, 13) == CycInt::from_int(26, Int(-1)));
}

TEST_CASE("integrality detection") {
  CycInt z = CycInt::zeta(12, 1);
  CHECK(!z.is_integer());
  CHECK_THROWS_AS(z.to_integer(), integrity_error);
  // zeta_12 + zeta_12^{-1} = sqrt(3): not integral
  CHECK(!(CycInt::zeta(12, 1) + CycInt::zeta(12, 11)).is_integer());
  // zeta_8^2 + zeta_8^{-2} = 0
  CycInt w = CycInt::zeta(8, 2) + CycInt::zeta(8, 6);
  CHECK(w.is_integer());
  CHECK(w.to_integer() == 0);
}

TEST_CASE("exact division by integers") {
  CycInt v = CycInt::from_int(12, Int(6)) + CycInt::zeta(12, 1).scaled(Int(9));
  CycInt t = v.div_exact(Int(3));
  CHECK(t == CycInt::from_int(12, Int(2)) + CycInt::zeta(12, 1).scaled(Int(3)));
  CHECK_THROWS_AS(v.div_exact(Int(4)), integrity_error);
}

TEST_CASE("galois action and norm down to the integers") {
  CycInt z = CycInt::zeta(5, 1) - CycInt::from_int(5, Int(3));
  CycInt prod = CycInt::from_int(5, Int(1));
  for (long t = 1; t <= 4; ++t) prod *= z.galois(t);
  CHECK(prod.is_integer());
  // product of (zeta^t - 3) = Phi_5 evaluated at 3 up to sign: 3^4+3^3+3^2+3+1 = 121
  CHECK(prod.to_integer() == 121);
  CHECK_THROWS_AS(CycInt::zeta(6, 1).galois(2), precondition_error);
}

TEST_CASE("float evaluation cross-check") {
  CycInt z = CycInt::zeta(8, 1);
  std::complex<double> v = z.approx();
  CHECK(std::abs(v.real() - std::sqrt(0.5)) < 1e-9);
  CHECK(std::abs(v.imag() - std::sqrt(0.5)) < 1e-9);
  // a sum known to vanish exactly also vanishes numerically
  CycInt s(26);
  for (long j = 0; j < 26; ++j) s += CycInt::zeta(26, j);
  CHECK(s.is_zero());
  CHECK(std::abs(s.approx()) < 1e-6);
}

TEST_CASE("character values are exact roots of unity and multiplicative") {
  const FF* E = FF::get(3, 3);
  TorusChar lam(E, 3, 5);
  long seed = 7;
  auto next = [&]() {
    seed = (seed * 31 + 11) % (E->q - 1);
    return E->from_code(seed + 1 <= E->q - 1 ? seed + 1 : 1);
  };
  for (int t = 0; t < 50; ++t) {
    FFElem a = next(), b = next();
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(char_value(lam, E->mul(a, b)) == char_value(lam, a) * char_value(lam, b));
  }
}

TEST_CASE("full multiplicative character sum vanishes for nonzero index") {
  const FF* E = FF::get(3, 3);
  for (long m : {1L, 2L, 5L, 13L}) {
    TorusChar lam(E, 3, m);
    CycInt s(26);
    for (long code = 0; code < E->q; ++code) {
      FFElem x = E->from_code(code);
      if (x.is_zero()) continue;
      s += char_value(lam, x);
    }
    CHECK(s.is_integer());
    CHECK(s.to_integer() == 0);
  }
  // index 0: the sum is the group order
  TorusChar triv(E, 3, 0);
  CycInt s(26);
  for (long code = 1; code < E->q; ++code) {
    FFElem x = E->from_code(code);
    if (x.is_zero()) continue;
    s += char_value(triv, x);
  }
  CHECK(s.to_integer() == 26);
}
