#include "oiv/padicforms.hpp"

#include <algorithm>

namespace oiv::padic {

std::string SquareClass::label() const {
  if (val_parity == 0) return unit_is_square ? "1" : "u";
  return unit_is_square ? "p" : "up";
}

std::string OrbitLabel::label() const {
  return "(" + disc.label() + std::string(",") + (hasse > 0 ? "+1" : "-1") + ")";
}

SquareClass square_class(const Rat& r, long p) {
  require(p > 2 && p % 2 == 1, "p must be an odd prime");
  require(r != 0, "square class of zero");
  SquareClass c;
  c.p = p;
  long v = vp_rat(r, p);
  c.val_parity = static_cast<int>(((v % 2) + 2) % 2);
  Rat u = unit_part(r, p);
  c.unit_is_square = legendre_unit(mod_pk(u, p, 1), p) == 1 ? 1 : 0;
  return c;
}

Rat class_rep(const SquareClass& c) {
  Rat r(1);
  if (!c.unit_is_square) r *= least_nonresidue(c.p);
  if (c.val_parity) r *= c.p;
  return r;
}

std::vector<SquareClass> all_classes(long p) {
  std::vector<SquareClass> cs;
  for (int vp = 0; vp < 2; ++vp)
    for (int sq = 1; sq >= 0; --sq) cs.push_back(SquareClass{p, vp, sq});
  return cs;  // order: 1, u, p, up
}

bool same_class(const Rat& a, const Rat& b, long p) {
  return square_class(a, p) == square_class(b, p);
}

int hilbert_symbol(const Rat& a, const Rat& b, long p) {
  require(p > 2 && p % 2 == 1, "p must be an odd prime");
  require(a != 0 && b != 0, "hilbert symbol of zero");
  long alpha = vp_rat(a, p), beta = vp_rat(b, p);
  Rat u = unit_part(a, p), v = unit_part(b, p);
  int s = 1;
  if ((alpha % 2) != 0 && (beta % 2) != 0) s *= legendre_unit(Int(-1), p);
  if ((beta % 2) != 0) s *= legendre_unit(mod_pk(u, p, 1), p);
  if ((alpha % 2) != 0) s *= legendre_unit(mod_pk(v, p, 1), p);
  return s;
}

int hilbert_symbol_brute(const Rat& a, const Rat& b, long p) {
  require(p > 2 && p % 2 == 1, "p must be an odd prime");
  require(a != 0 && b != 0, "hilbert symbol of zero");
  long p4 = pk(p, 4).get_si();
  long A = mod_pk(class_rep(square_class(a, p)), p, 4).get_si();
  long B = mod_pk(class_rep(square_class(b, p)), p, 4).get_si();
  std::vector<char> sq_any(p4, 0), sq_unit(p4, 0);
  for (long z = 0; z < p4; ++z) {
    long w = z * z % p4;
    sq_any[w] = 1;
    if (z % p != 0) sq_unit[w] = 1;
  }
  std::vector<long> sqr(p4);
  for (long x = 0; x < p4; ++x) sqr[x] = x * x % p4;
  for (long x = 0; x < p4; ++x) {
    long ax = A * sqr[x] % p4;
    bool xu = x % p != 0;
    for (long y = 0; y < p4; ++y) {
      long w = (ax + B * sqr[y]) % p4;
      if (xu || y % p != 0) {
        if (sq_any[w]) return 1;
      } else {
        if (sq_unit[w]) return 1;
      }
    }
  }
  return -1;
}

MatQ antidiag_form(long n) {
  MatQ j = matq::zero(n, n);
  for (long i = 0; i < n; ++i) j[i][n - 1 - i] = 1;
  return j;
}

namespace {

// In-place symmetric column+row operation: col r -= f * col i, row r -= f * row i.
void sym_colrow_sub(MatQ& m, long r, long i, const Rat& f) {
  long n = matq::rows(m);
  for (long x = 0; x < n; ++x) m[x][r] -= f * m[x][i];
  for (long x = 0; x < n; ++x) m[r][x] -= f * m[i][x];
}

void sym_swap(MatQ& m, long i, long j) {
  long n = matq::rows(m);
  for (long x = 0; x < n; ++x) std::swap(m[x][i], m[x][j]);
  for (long x = 0; x < n; ++x) std::swap(m[i][x], m[j][x]);
}

// (col i, col j) <- (col i + col j, col i - col j), symmetric on both sides.
void sym_hyperbolic(MatQ& m, long i, long j) {
  long n = matq::rows(m);
  for (long x = 0; x < n; ++x) {
    Rat ci = m[x][i], cj = m[x][j];
    m[x][i] = ci + cj;
    m[x][j] = ci - cj;
  }
  for (long x = 0; x < n; ++x) {
    Rat ri = m[i][x], rj = m[j][x];
    m[i][x] = ri + rj;
    m[j][x] = ri - rj;
  }
}

}  // namespace

std::pair<MatQ, MatQ> diagonalize_congruence(const MatQ& A) {
  require(matq::is_symmetric(A), "matrix must be symmetric");
  long n = matq::rows(A);
  require(matq::det(A) != 0, "matrix must be nonsingular");
  MatQ m = A;
  MatQ pmat = matq::identity(n);
  for (long i = 0; i < n; ++i) {
    if (m[i][i] == 0) {
      long j = -1;
      for (long r = i + 1; r < n; ++r)
        if (m[r][r] != 0) { j = r; break; }
      if (j >= 0) {
        sym_swap(m, i, j);
        for (long x = 0; x < n; ++x) std::swap(pmat[x][i], pmat[x][j]);
      } else {
        j = -1;
        for (long r = i + 1; r < n; ++r)
          if (m[i][r] != 0) { j = r; break; }
        ensure(j >= 0, "degenerate block in diagonalization");
        sym_hyperbolic(m, i, j);
        for (long x = 0; x < n; ++x) {
          Rat ci = pmat[x][i], cj = pmat[x][j];
          pmat[x][i] = ci + cj;
          pmat[x][j] = ci - cj;
        }
      }
    }
    Rat inv_p = Rat(1) / m[i][i];
    for (long r = i + 1; r < n; ++r) {
      if (m[i][r] == 0) continue;
      Rat f = m[i][r] * inv_p;
      sym_colrow_sub(m, r, i, f);
      for (long x = 0; x < n; ++x) pmat[x][r] -= f * pmat[x][i];
    }
  }
  ensure(matq::congruence(pmat, A) == m, "diagonalization bookkeeping failed");
  return {m, pmat};
}

QFInvariants invariants(const MatQ& A, long p) {
  require(p > 2 && p % 2 == 1, "p must be an odd prime");
  auto [d, pm] = diagonalize_congruence(A);
  long n = matq::rows(A);
  QFInvariants inv;
  inv.n = n;
  Rat dt = matq::det(A);
  inv.disc = square_class(dt, p);
  long half = (n * (n - 1) / 2) % 2;
  inv.signed_disc = square_class(half ? -dt : dt, p);
  inv.hasse = 1;
  inv.hasse0 = 1;
  for (long i = 0; i < n; ++i)
    for (long j = i; j < n; ++j) {
      int h = hilbert_symbol(d[i][i], d[j][j], p);
      inv.hasse *= h;
      if (j > i) inv.hasse0 *= h;
    }
  int disc_sym = hilbert_symbol(dt, Rat(-1), p);
  ensure(inv.hasse == inv.hasse0 * disc_sym, "hasse discrepancy identity violated");
  return inv;
}

OrbitLabel classify_orbit(const MatQ& A, long p) {
  QFInvariants inv = invariants(A, p);
  return OrbitLabel{inv.disc, inv.hasse};
}

bool similar_to_J(const MatQ& A, long p) {
  QFInvariants inv = invariants(A, p);
  long n = inv.n;
  long half = (n * (n - 1) / 2) % 2;
  SquareClass target = square_class(half ? Rat(-1) : Rat(1), p);
  return inv.disc == target && inv.hasse == 1;
}

std::vector<OrbitLabel> scalar_orbit(const MatQ& A, long p) {
  std::vector<OrbitLabel> out;
  for (const SquareClass& c : all_classes(p))
    out.push_back(classify_orbit(matq::scaled(A, class_rep(c)), p));
  return out;
}

bool in_theta_j(const MatQ& A, long p) {
  for (const SquareClass& c : all_classes(p))
    if (similar_to_J(matq::scaled(A, class_rep(c)), p)) return true;
  return false;
}

bool rat_is_padic_square(const Rat& r, long p) {
  require(r != 0, "square test of zero");
  if (vp_rat(r, p) % 2 != 0) return false;
  return legendre_unit(mod_pk(unit_part(r, p), p, 1), p) == 1;
}

Rat rat_padic_sqrt(const Rat& r, long p, long prec) {
  require(rat_is_padic_square(r, p), "not a p-adic square");
  // exact rational square root when available
  if (mpz_perfect_square_p(r.get_num().get_mpz_t()) &&
      mpz_perfect_square_p(r.get_den().get_mpz_t())) {
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), r.get_den().get_mpz_t());
    return Rat(sn, sd);
  }
  long v = vp_rat(r, p);
  Rat u = unit_part(r, p);
  Int s = sqrt_mod_pk(mod_pk(u, p, prec), p, prec);
  Rat root(s);
  if (v >= 0) return root * Rat(pk(p, v / 2));
  return root / Rat(pk(p, (-v) / 2));
}

namespace {

// Does the diagonal form d represent t over Q_p? Closed-form decision:
// one variable by square class, two by the Hilbert condition for the norm
// form, three unless the padded quaternary is the anisotropic one
// (square discriminant with strict-pair Hasse product -1 for odd p),
// four or more always.
bool diag_represents(const VecQ& d, const Rat& t, long p) {
  long k = static_cast<long>(d.size());
  if (k == 1) return same_class(d[0], t, p);
  if (k == 2) return hilbert_symbol(-d[0] * d[1], t * d[0], p) == 1;
  if (k >= 4) return true;
  VecQ q = d;
  q.push_back(-t);
  Rat disc(1);
  for (const Rat& v : q) disc *= v;
  if (!rat_is_padic_square(disc, p)) return true;
  int h0 = 1;
  for (long i = 0; i < 4; ++i)
    for (long j = i + 1; j < 4; ++j) h0 *= hilbert_symbol(q[i], q[j], p);
  return h0 != -1;
}

// Vector y with y^T diag(d) y = t + O(p^{v_p(t) + prec}).
VecQ represent_diag(const VecQ& d_in, const Rat& t_in, long p, long prec) {
  long k = static_cast<long>(d_in.size());
  ensure(k >= 1, "empty diagonal");
  // normalize by square scalings so every valuation is 0 or 1
  VecQ d(k);
  std::vector<long> dshift(k);
  for (long i = 0; i < k; ++i) {
    long v = vp_rat(d_in[i], p);
    long sh = (v >= 0 ? v / 2 : -((-v + 1) / 2));
    dshift[i] = sh;
    d[i] = sh >= 0 ? Rat(d_in[i] / Rat(pk(p, 2 * sh))) : Rat(d_in[i] * Rat(pk(p, -2 * sh)));
  }
  long vt = vp_rat(t_in, p);
  long tshift = (vt >= 0 ? vt / 2 : -((-vt + 1) / 2));
  Rat t = tshift >= 0 ? Rat(t_in / Rat(pk(p, 2 * tshift))) : Rat(t_in * Rat(pk(p, -2 * tshift)));

  auto unscale = [&](VecQ y) {
    for (long i = 0; i < k; ++i) {
      long sh = tshift - dshift[i];
      if (sh >= 0)
        y[i] *= Rat(pk(p, sh));
      else
        y[i] /= Rat(pk(p, -sh));
    }
    return y;
  };

  // single-coordinate branch
  for (long i = 0; i < k; ++i) {
    Rat r = t / d[i];
    if (rat_is_padic_square(r, p)) {
      VecQ y(k, Rat(0));
      y[i] = rat_padic_sqrt(r, p, prec);
      return unscale(y);
    }
  }
  // pair branches with escalating scan depth
  for (long depth : {3L, 5L}) {
    Int pd = pk(p, depth);
    long pdl = pd.get_si();
    for (long i = 0; i < k; ++i)
      for (long j = 0; j < k; ++j) {
        if (i == j) continue;
        for (long m = 0; m <= depth - 1; ++m) {
          Int pm = pk(p, m);
          for (long eta = 1; eta < pdl; ++eta) {
            if (eta % p == 0) continue;
            Rat yi(pm * eta);
            Rat r = (t - d[i] * yi * yi) / d[j];
            if (r == 0) {
              VecQ y(k, Rat(0));
              y[i] = yi;
              return unscale(y);
            }
            if (rat_is_padic_square(r, p)) {
              VecQ y(k, Rat(0));
              y[i] = yi;
              y[j] = rat_padic_sqrt(r, p, prec);
              return unscale(y);
            }
          }
        }
      }
    if (k < 3) continue;
    // triple branch: coarse scan on two coordinates, solve the third
    long coarse = std::min(depth - 1, 2L);
    Int pc = pk(p, coarse);
    long pcl = pc.get_si();
    for (long i = 0; i < k; ++i)
      for (long j = 0; j < k; ++j)
        for (long l = 0; l < k; ++l) {
          if (i == j || i == l || j == l) continue;
          for (long mi = 0; mi <= 1; ++mi)
            for (long ei = 1; ei < pcl; ++ei) {
              if (ei % p == 0) continue;
              Rat yi(pk(p, mi) * ei);
              Rat rem1 = t - d[i] * yi * yi;
              for (long mj = 0; mj <= 1; ++mj)
                for (long ej = 1; ej < pcl; ++ej) {
                  if (ej % p == 0) continue;
                  Rat yj(pk(p, mj) * ej);
                  Rat r = (rem1 - d[j] * yj * yj) / d[l];
                  if (r == 0) {
                    VecQ y(k, Rat(0));
                    y[i] = yi;
                    y[j] = yj;
                    return unscale(y);
                  }
                  if (rat_is_padic_square(r, p)) {
                    VecQ y(k, Rat(0));
                    y[i] = yi;
                    y[j] = yj;
                    y[l] = rat_padic_sqrt(r, p, prec);
                    return unscale(y);
                  }
                }
            }
        }
  }
  throw integrity_error("diagonal representation search exhausted");
}

MatQ diag_to_diag(const VecQ& da, const VecQ& db, long p, long prec);

MatQ sym_to_sym_core(const MatQ& A, const MatQ& B, long p, long prec) {
  auto [dA, pA] = diagonalize_congruence(A);
  auto [dB, pB] = diagonalize_congruence(B);
  long n = matq::rows(A);
  VecQ da(n), db(n);
  for (long i = 0; i < n; ++i) {
    da[i] = dA[i][i];
    db[i] = dB[i][i];
  }
  MatQ s = diag_to_diag(da, db, p, prec);
  return matq::mul(pA, matq::mul(s, matq::inverse(pB)));
}

MatQ diag_to_diag(const VecQ& da, const VecQ& db, long p, long prec) {
  long k = static_cast<long>(da.size());
  if (k == 0) return MatQ{};
  VecQ y = represent_diag(da, db[0], p, prec);
  if (k == 1) {
    MatQ s = matq::zero(1, 1);
    s[0][0] = y[0];
    return s;
  }
  // t = y. da y, pivot on the dominant coordinate
  Rat t(0);
  for (long i = 0; i < k; ++i) t += da[i] * y[i] * y[i];
  ensure(t != 0, "representation degenerated");
  long pivot = -1;
  long best_v = 0;
  for (long i = 0; i < k; ++i) {
    if (y[i] == 0) continue;
    long v = vp_rat(da[i] * y[i] * y[i], p);
    if (pivot < 0 || v < best_v) {
      pivot = i;
      best_v = v;
    }
  }
  ensure(pivot >= 0, "zero representation vector");
  // complement: project e_i (i != pivot) off y with respect to diag(da)
  std::vector<VecQ> basis;
  basis.push_back(y);
  for (long i = 0; i < k; ++i) {
    if (i == pivot) continue;
    VecQ w(k, Rat(0));
    w[i] = 1;
    Rat inner = da[i] * y[i];  // e_i . diag(da) . y
    Rat f = inner / t;
    for (long x = 0; x < k; ++x) w[x] -= f * y[x];
    basis.push_back(w);
  }
  // gram of the complement block
  MatQ gram = matq::zero(k - 1, k - 1);
  for (long a = 1; a < k; ++a)
    for (long b = 1; b < k; ++b) {
      Rat s(0);
      for (long x = 0; x < k; ++x) s += da[x] * basis[a][x] * basis[b][x];
      gram[a - 1][b - 1] = s;
    }
  MatQ sub_b = matq::zero(k - 1, k - 1);
  for (long i = 1; i < k; ++i) sub_b[i - 1][i - 1] = db[i];
  MatQ inner_s = sym_to_sym_core(gram, sub_b, p, prec);
  // assemble: columns = y, then complement combined by inner_s
  MatQ out = matq::zero(k, k);
  for (long x = 0; x < k; ++x) out[x][0] = y[x];
  for (long key = 0; key < k - 1; ++key)
    for (long x = 0; x < k; ++x) {
      Rat acc(0);
      for (long a = 0; a < k - 1; ++a) acc += basis[a + 1][x] * inner_s[a][key];
      out[x][key + 1] = acc;
    }
  return out;
}

bool congruent_mod(const MatQ& X, const MatQ& Y, long p, long N) {
  for (long i = 0; i < matq::rows(X); ++i)
    for (long j = 0; j < matq::cols(X); ++j) {
      Rat diff = X[i][j] - Y[i][j];
      if (diff == 0) continue;
      if (vp_rat(diff, p) < N) return false;
    }
  return true;
}

}  // namespace

MatQ congruence_transform(const MatQ& A, const MatQ& B, long p, long N) {
  require(p > 2 && p % 2 == 1, "p must be an odd prime");
  require(N >= 1, "precision must be positive");
  require(matq::is_symmetric(A) && matq::is_symmetric(B), "inputs must be symmetric");
  require(matq::rows(A) == matq::rows(B), "dimension mismatch");
  QFInvariants ia = invariants(A, p), ib = invariants(B, p);
  require(ia.disc == ib.disc && ia.hasse == ib.hasse,
          "invariant mismatch: no congruence transform exists");
  if (A == B) return matq::identity(matq::rows(A));
  for (long margin : {40L, 80L}) {
    MatQ pmat = sym_to_sym_core(A, B, p, N + margin);
    if (congruent_mod(matq::congruence(pmat, A), B, p, N)) return pmat;
  }
  throw integrity_error("congruence transform failed verification");
}

}  // namespace oiv::padic
