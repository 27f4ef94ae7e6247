#include "oiv/matq.hpp"

namespace oiv::matq {

MatQ zero(long r, long c) { return MatQ(r, VecQ(c, Rat(0))); }

MatQ identity(long n) {
  MatQ a = zero(n, n);
  for (long i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

long rows(const MatQ& a) { return static_cast<long>(a.size()); }

long cols(const MatQ& a) { return a.empty() ? 0 : static_cast<long>(a[0].size()); }

MatQ mul(const MatQ& a, const MatQ& b) {
  require(cols(a) == rows(b), "matrix dimension mismatch");
  MatQ r = zero(rows(a), cols(b));
  for (long i = 0; i < rows(a); ++i)
    for (long k = 0; k < cols(a); ++k) {
      if (a[i][k] == 0) continue;
      for (long j = 0; j < cols(b); ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

VecQ mul_vec(const MatQ& a, const VecQ& v) {
  require(cols(a) == static_cast<long>(v.size()), "matrix dimension mismatch");
  VecQ r(rows(a), Rat(0));
  for (long i = 0; i < rows(a); ++i)
    for (long j = 0; j < cols(a); ++j) r[i] += a[i][j] * v[j];
  return r;
}

MatQ transpose(const MatQ& a) {
  MatQ r = zero(cols(a), rows(a));
  for (long i = 0; i < rows(a); ++i)
    for (long j = 0; j < cols(a); ++j) r[j][i] = a[i][j];
  return r;
}

MatQ add(const MatQ& a, const MatQ& b) {
  require(rows(a) == rows(b) && cols(a) == cols(b), "matrix dimension mismatch");
  MatQ r = a;
  for (long i = 0; i < rows(a); ++i)
    for (long j = 0; j < cols(a); ++j) r[i][j] += b[i][j];
  return r;
}

MatQ sub(const MatQ& a, const MatQ& b) {
  require(rows(a) == rows(b) && cols(a) == cols(b), "matrix dimension mismatch");
  MatQ r = a;
  for (long i = 0; i < rows(a); ++i)
    for (long j = 0; j < cols(a); ++j) r[i][j] -= b[i][j];
  return r;
}

MatQ scaled(const MatQ& a, const Rat& s) {
  MatQ r = a;
  for (auto& row : r)
    for (Rat& v : row) v *= s;
  return r;
}

Rat det(MatQ a) {
  long n = rows(a);
  require(n == cols(a), "determinant of non-square matrix");
  Rat d(1);
  for (long i = 0; i < n; ++i) {
    long piv = -1;
    for (long r = i; r < n; ++r)
      if (a[r][i] != 0) { piv = r; break; }
    if (piv < 0) return Rat(0);
    if (piv != i) {
      std::swap(a[piv], a[i]);
      d = -d;
    }
    d *= a[i][i];
    Rat inv_p = Rat(1) / a[i][i];
    for (long r = i + 1; r < n; ++r) {
      if (a[r][i] == 0) continue;
      Rat f = a[r][i] * inv_p;
      for (long c = i; c < n; ++c) a[r][c] -= f * a[i][c];
    }
  }
  return d;
}

MatQ inverse(const MatQ& a) {
  long n = rows(a);
  require(n == cols(a), "inverse of non-square matrix");
  MatQ w = a;
  MatQ inv = identity(n);
  for (long i = 0; i < n; ++i) {
    long piv = -1;
    for (long r = i; r < n; ++r)
      if (w[r][i] != 0) { piv = r; break; }
    require(piv >= 0, "matrix not invertible");
    if (piv != i) {
      std::swap(w[piv], w[i]);
      std::swap(inv[piv], inv[i]);
    }
    Rat f = Rat(1) / w[i][i];
    for (long c = 0; c < n; ++c) {
      w[i][c] *= f;
      inv[i][c] *= f;
    }
    for (long r = 0; r < n; ++r) {
      if (r == i || w[r][i] == 0) continue;
      Rat g = w[r][i];
      for (long c = 0; c < n; ++c) {
        w[r][c] -= g * w[i][c];
        inv[r][c] -= g * inv[i][c];
      }
    }
  }
  return inv;
}

long rank(MatQ a) {
  long r = 0;
  long nr = rows(a), nc = cols(a);
  for (long c = 0; c < nc && r < nr; ++c) {
    long piv = -1;
    for (long i = r; i < nr; ++i)
      if (a[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    Rat f = Rat(1) / a[r][c];
    for (long j = c; j < nc; ++j) a[r][j] *= f;
    for (long i = 0; i < nr; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat g = a[i][c];
      for (long j = c; j < nc; ++j) a[i][j] -= g * a[r][j];
    }
    ++r;
  }
  return r;
}

bool is_symmetric(const MatQ& a) {
  if (rows(a) != cols(a)) return false;
  for (long i = 0; i < rows(a); ++i)
    for (long j = i + 1; j < cols(a); ++j)
      if (a[i][j] != a[j][i]) return false;
  return true;
}

MatQ congruence(const MatQ& p, const MatQ& a) { return mul(transpose(p), mul(a, p)); }

VecQ solve(MatQ a, VecQ b) {
  long n = rows(a);
  require(n == cols(a) && n == static_cast<long>(b.size()), "solve needs square system");
  for (long i = 0; i < n; ++i) {
    long piv = -1;
    for (long r = i; r < n; ++r)
      if (a[r][i] != 0) { piv = r; break; }
    require(piv >= 0, "singular linear system");
    if (piv != i) {
      std::swap(a[piv], a[i]);
      std::swap(b[piv], b[i]);
    }
    Rat f = Rat(1) / a[i][i];
    for (long c = i; c < n; ++c) a[i][c] *= f;
    b[i] *= f;
    for (long r = 0; r < n; ++r) {
      if (r == i || a[r][i] == 0) continue;
      Rat g = a[r][i];
      for (long c = i; c < n; ++c) a[r][c] -= g * a[i][c];
      b[r] -= g * b[i];
    }
  }
  return b;
}

}  // namespace oiv::matq
