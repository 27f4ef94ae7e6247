#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oiv/padicforms.hpp"

using namespace oiv;
using namespace oiv::padic;

namespace {

Rat rnd_rat(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 3);
  for (;;) {
    Rat r(Int(num(rng)), Int(den(rng)));
    r.canonicalize();
    if (!nonzero || r != 0) return r;
  }
}

MatQ rnd_sym(std::mt19937_64& rng, long n) {
  for (;;) {
    MatQ a = matq::zero(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = i; j < n; ++j) a[i][j] = a[j][i] = rnd_rat(rng);
    if (matq::det(a) != 0) return a;
  }
}

MatQ rnd_unimodular(std::mt19937_64& rng, long n) {
  MatQ u = matq::identity(n);
  std::uniform_int_distribution<long> pick(0, n - 1);
  std::uniform_int_distribution<long> coef(-2, 2);
  for (int step = 0; step < 8; ++step) {
    long i = pick(rng), j = pick(rng);
    if (i == j) continue;
    long c = coef(rng);
    for (long r = 0; r < n; ++r) u[r][j] += Rat(c) * u[r][i];
  }
  return u;
}

}  // namespace

TEST_CASE("square class examples") {
  CHECK(square_class(Rat(1), 5).label() == "1");
  CHECK(square_class(Rat(5), 5).label() == "p");
  CHECK(square_class(Rat(50), 5).label() == "u");
  CHECK(square_class(Rat(-1), 3).label() == "u");
  CHECK(square_class(Rat(-1), 5).label() == "1");
  CHECK(square_class(Rat(2, 3), 3).label() == "up");
  CHECK_THROWS_AS(square_class(Rat(0), 5), precondition_error);
  CHECK_THROWS_AS(square_class(Rat(1), 2), precondition_error);
}

TEST_CASE("class representatives round trip") {
  for (long p : {3L, 5L, 7L}) {
    auto cs = all_classes(p);
    REQUIRE(cs.size() == 4);
    std::set<std::string> labels;
    for (const auto& c : cs) {
      CHECK(square_class(class_rep(c), p) == c);
      labels.insert(c.label());
    }
    CHECK(labels == std::set<std::string>{"1", "u", "p", "up"});
  }
}

TEST_CASE("hilbert symbol golden values") {
  CHECK(hilbert_symbol(Rat(2), Rat(3), 5) == 1);
  CHECK(hilbert_symbol(Rat(1), Rat(7), 5) == 1);
  CHECK(hilbert_symbol(Rat(5), Rat(2), 5) == -1);
  CHECK(hilbert_symbol(Rat(-1), Rat(-1), 3) == 1);
  CHECK(hilbert_symbol(Rat(3), Rat(3), 3) == -1);
  CHECK(hilbert_symbol(Rat(5), Rat(5), 5) == 1);
  CHECK(hilbert_symbol(Rat(7), Rat(7), 7) == -1);
}

TEST_CASE("hilbert symbol properties") {
  std::mt19937_64 rng(20240817);
  for (long p : {3L, 5L, 7L}) {
    for (int t = 0; t < 40; ++t) {
      Rat a = rnd_rat(rng, true), b = rnd_rat(rng, true), c = rnd_rat(rng, true);
      CHECK(hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p));
      CHECK(hilbert_symbol(a * c, b, p) == hilbert_symbol(a, b, p) * hilbert_symbol(c, b, p));
      CHECK(hilbert_symbol(a, -a, p) == 1);
      CHECK(hilbert_symbol(a * b * b, c, p) == hilbert_symbol(a, c, p));
    }
  }
}

TEST_CASE("hilbert closed form matches the mod p^4 search on all class pairs") {
  for (long p : {3L, 5L, 7L}) {
    for (const auto& ca : all_classes(p))
      for (const auto& cb : all_classes(p)) {
        Rat a = class_rep(ca), b = class_rep(cb);
        CHECK(hilbert_symbol(a, b, p) == hilbert_symbol_brute(a, b, p));
      }
  }
}

TEST_CASE("hilbert brute oracle on random rationals") {
  std::mt19937_64 rng(7);
  for (long p : {3L, 5L}) {
    for (int t = 0; t < 10; ++t) {
      Rat a = rnd_rat(rng, true), b = rnd_rat(rng, true);
      CHECK(hilbert_symbol(a, b, p) == hilbert_symbol_brute(a, b, p));
    }
  }
}

TEST_CASE("diagonalization examples") {
  MatQ eye = matq::identity(3);
  auto [d1, p1] = diagonalize_congruence(eye);
  CHECK(d1 == eye);
  CHECK(p1 == eye);

  MatQ hyp = matq::zero(2, 2);
  hyp[0][1] = hyp[1][0] = 1;
  auto [d2, p2] = diagonalize_congruence(hyp);
  CHECK(d2[0][0] == 2);
  CHECK(d2[1][1] == -2);
  CHECK(d2[0][1] == 0);
  CHECK(p2[0][0] == 1);
  CHECK(p2[0][1] == 1);
  CHECK(p2[1][0] == 1);
  CHECK(p2[1][1] == -1);
  CHECK(matq::congruence(p2, hyp) == d2);

  MatQ j3 = antidiag_form(3);
  auto [d3, p3] = diagonalize_congruence(j3);
  CHECK(d3[0][0] == 1);
  CHECK(d3[1][1] == 2);
  CHECK(d3[2][2] == -2);
  CHECK(matq::congruence(p3, j3) == d3);
}

TEST_CASE("diagonalization on random symmetric matrices") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 30; ++t) {
    long n = 2 + (t % 2);
    MatQ a = rnd_sym(rng, n);
    auto [d, p] = diagonalize_congruence(a);
    CHECK(matq::congruence(p, a) == d);
    for (long i = 0; i < n; ++i) {
      CHECK(d[i][i] != 0);
      for (long j = 0; j < n; ++j)
        if (i != j) CHECK(d[i][j] == 0);
    }
  }
}

TEST_CASE("invariants of named forms") {
  MatQ j3 = antidiag_form(3);
  QFInvariants inv = invariants(j3, 5);
  CHECK(inv.disc == square_class(Rat(-1), 5));
  CHECK(inv.signed_disc.label() == "1");
  CHECK(inv.hasse == 1);
  CHECK(inv.hasse0 == 1);

  QFInvariants ieye = invariants(matq::identity(3), 7);
  CHECK(ieye.disc.label() == "1");
  CHECK(ieye.hasse == 1);
}

TEST_CASE("unimodular integer forms have trivial hasse") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> ent(-6, 6);
  for (long p : {3L, 5L, 7L}) {
    int done = 0;
    while (done < 25) {
      long n = 2 + (done % 2);
      MatQ a = matq::zero(n, n);
      for (long i = 0; i < n; ++i)
        for (long j = i; j < n; ++j) a[i][j] = a[j][i] = Rat(ent(rng));
      Rat dt = matq::det(a);
      if (dt == 0 || vp_rat(dt, p) != 0) continue;
      QFInvariants inv = invariants(a, p);
      CHECK(inv.hasse == 1);
      CHECK(inv.hasse0 == 1);
      ++done;
    }
  }
}

TEST_CASE("orbit classification against J") {
  CHECK(similar_to_J(antidiag_form(2), 3));
  CHECK(similar_to_J(antidiag_form(3), 3));
  CHECK(similar_to_J(antidiag_form(3), 7));
  MatQ a = matq::identity(3);
  a[2][2] = 3;
  CHECK(!similar_to_J(a, 3));  // disc has odd valuation
  CHECK(in_theta_j(matq::identity(3), 3));
  CHECK(in_theta_j(matq::identity(3), 7));
  CHECK(in_theta_j(antidiag_form(3), 5));
  CHECK(!in_theta_j(matq::identity(2), 3));
}

TEST_CASE("scalar orbit hits all four disc classes when n is odd") {
  std::mt19937_64 rng(17);
  for (long p : {3L, 5L}) {
    for (int t = 0; t < 10; ++t) {
      MatQ a = rnd_sym(rng, 3);
      auto labels = scalar_orbit(a, p);
      REQUIRE(labels.size() == 4);
      std::set<std::string> discs;
      for (const auto& l : labels) discs.insert(l.disc.label());
      CHECK(discs.size() == 4);
    }
  }
}

TEST_CASE("exactly eight labels realized at n=3, excluded label absent at n=2") {
  std::mt19937_64 rng(31337);
  for (long p : {3L, 5L}) {
    std::set<std::pair<std::string, int>> seen3;
    for (int t = 0; t < 200; ++t) {
      OrbitLabel l = classify_orbit(rnd_sym(rng, 3), p);
      seen3.insert({l.disc.label(), l.hasse});
    }
    CHECK(seen3.size() == 8);
    SquareClass minus1 = square_class(Rat(-1), p);
    for (int t = 0; t < 200; ++t) {
      OrbitLabel l = classify_orbit(rnd_sym(rng, 2), p);
      CHECK(!(l.disc == minus1 && l.hasse == -1));
    }
  }
}

TEST_CASE("invariants are congruence invariant") {
  std::mt19937_64 rng(555);
  for (long p : {3L, 5L, 7L}) {
    for (int t = 0; t < 34; ++t) {
      long n = 2 + (t % 2);
      MatQ a = rnd_sym(rng, n);
      MatQ u = rnd_unimodular(rng, n);
      QFInvariants ia = invariants(a, p);
      QFInvariants ib = invariants(matq::congruence(u, a), p);
      CHECK(ia.disc == ib.disc);
      CHECK(ia.signed_disc == ib.signed_disc);
      CHECK(ia.hasse == ib.hasse);
      CHECK(ia.hasse0 == ib.hasse0);
    }
  }
}

TEST_CASE("congruence transform: identity, hyperbolic, exact scaling") {
  MatQ a = matq::identity(3);
  MatQ p1 = congruence_transform(a, a, 5, 8);
  CHECK(p1 == matq::identity(3));

  MatQ d = matq::zero(2, 2);
  d[0][0] = 2;
  d[1][1] = -2;
  MatQ hyp = antidiag_form(2);
  MatQ p2 = congruence_transform(d, hyp, 5, 6);
  MatQ got = matq::congruence(p2, d);
  for (long i = 0; i < 2; ++i)
    for (long j = 0; j < 2; ++j) {
      Rat diff = got[i][j] - hyp[i][j];
      if (diff != 0) CHECK(vp_rat(diff, 5) >= 6);
    }

  MatQ b = matq::zero(3, 3);
  b[0][0] = 4;
  b[1][1] = 9;
  b[2][2] = 1;
  MatQ p3 = congruence_transform(matq::identity(3), b, 5, 8);
  CHECK(matq::congruence(p3, matq::identity(3)) == b);  // exact rational recovery
}

TEST_CASE("congruence transform rejects invariant mismatch") {
  MatQ a = matq::identity(2);
  MatQ b = matq::identity(2);
  b[1][1] = least_nonresidue(5);
  CHECK_THROWS_AS(congruence_transform(a, b, 5, 6), precondition_error);
  CHECK_THROWS_AS(congruence_transform(a, a, 5, 0), precondition_error);
}

TEST_CASE("congruence transform on random congruent pairs, precision stable") {
  std::mt19937_64 rng(808);
  for (long p : {3L, 5L, 7L}) {
    for (int t = 0; t < 6; ++t) {
      long n = 2 + (t % 2);
      MatQ a = rnd_sym(rng, n);
      MatQ u = rnd_unimodular(rng, n);
      MatQ b = matq::congruence(u, a);
      for (long N : {8L, 12L}) {
        MatQ pm = congruence_transform(a, b, p, N);
        MatQ got = matq::congruence(pm, a);
        for (long i = 0; i < n; ++i)
          for (long j = 0; j < n; ++j) {
            Rat diff = got[i][j] - b[i][j];
            if (diff != 0) CHECK(vp_rat(diff, p) >= N);
          }
      }
    }
  }
}
