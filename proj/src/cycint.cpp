#include "oiv/cycint.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace oiv {

namespace {

// Exact division of polynomials over Z, divisor monic.
std::vector<Int> poly_divexact(const std::vector<Int>& num, const std::vector<Int>& den) {
  std::vector<Int> rem = num;
  long dn = static_cast<long>(num.size()) - 1;
  long dd = static_cast<long>(den.size()) - 1;
  ensure(dd >= 0 && den[dd] == 1, "divisor must be monic");
  ensure(dn >= dd, "degree underflow in exact division");
  std::vector<Int> quot(dn - dd + 1, Int(0));
  for (long i = dn; i >= dd; --i) {
    Int coef = rem[i];
    if (coef == 0) continue;
    quot[i - dd] = coef;
    for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= coef * den[j];
  }
  for (const Int& r : rem) ensure(r == 0, "inexact polynomial division");
  return quot;
}

std::vector<Int> cyclotomic_compute(long N, std::map<long, std::vector<Int>>& cache);

const std::vector<Int>& cyclotomic_cached(long N, std::map<long, std::vector<Int>>& cache) {
  auto it = cache.find(N);
  if (it == cache.end()) it = cache.emplace(N, cyclotomic_compute(N, cache)).first;
  return it->second;
}

std::vector<Int> cyclotomic_compute(long N, std::map<long, std::vector<Int>>& cache) {
  std::vector<Int> poly(N + 1, Int(0));  // x^N - 1
  poly[0] = -1;
  poly[N] = 1;
  for (long d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    poly = poly_divexact(poly, cyclotomic_cached(d, cache));
  }
  return poly;
}

}  // namespace

const std::vector<Int>& cyclotomic_poly(long N) {
  static std::mutex mu;
  static std::map<long, std::vector<Int>> cache;
  std::lock_guard<std::mutex> lock(mu);
  require(N >= 1, "order must be positive");
  return cyclotomic_cached(N, cache);
}

CycInt CycInt::from_int(long N, const Int& v) {
  CycInt r(N);
  r.c_[0] = v;
  return r;
}

CycInt CycInt::zeta(long N, long j) {
  CycInt r(N);
  j %= N;
  if (j < 0) j += N;
  r.c_[j] = 1;
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  require(N_ == o.N_, "cyclotomic order mismatch");
  for (long i = 0; i < N_; ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  require(N_ == o.N_, "cyclotomic order mismatch");
  for (long i = 0; i < N_; ++i) c_[i] -= o.c_[i];
  return *this;
}

CycInt CycInt::operator+(const CycInt& o) const {
  CycInt r = *this;
  r += o;
  return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
  CycInt r = *this;
  r -= o;
  return r;
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (Int& v : r.c_) v = -v;
  return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
  require(N_ == o.N_, "cyclotomic order mismatch");
  CycInt r(N_);
  for (long i = 0; i < N_; ++i) {
    if (c_[i] == 0) continue;
    for (long j = 0; j < N_; ++j) {
      if (o.c_[j] == 0) continue;
      long idx = i + j;
      if (idx >= N_) idx -= N_;
      r.c_[idx] += c_[i] * o.c_[j];
    }
  }
  return r;
}

CycInt& CycInt::operator*=(const CycInt& o) {
  *this = *this * o;
  return *this;
}

CycInt CycInt::scaled(const Int& s) const {
  CycInt r = *this;
  for (Int& v : r.c_) v *= s;
  return r;
}

CycInt CycInt::galois(long t) const {
  t %= N_;
  if (t < 0) t += N_;
  require(std::gcd(t, N_) == 1, "galois exponent not coprime to order");
  CycInt r(N_);
  for (long i = 0; i < N_; ++i) {
    if (c_[i] == 0) continue;
    r.c_[(i * t) % N_] += c_[i];
  }
  return r;
}

CycInt CycInt::conj() const { return N_ == 1 ? *this : galois(N_ - 1); }

std::vector<Int> CycInt::canonical() const {
  const std::vector<Int>& phi = cyclotomic_poly(N_);
  long deg = static_cast<long>(phi.size()) - 1;
  std::vector<Int> rem = c_;
  for (long i = N_ - 1; i >= deg; --i) {
    Int coef = rem[i];
    if (coef == 0) continue;
    for (long j = 0; j <= deg; ++j) rem[i - deg + j] -= coef * phi[j];
  }
  rem.resize(deg > 0 ? deg : 1);
  return rem;
}

bool CycInt::is_zero() const {
  for (const Int& v : canonical())
    if (v != 0) return false;
  return true;
}

bool CycInt::operator==(const CycInt& o) const {
  require(N_ == o.N_, "cyclotomic order mismatch");
  return (*this - o).is_zero();
}

bool CycInt::is_integer() const {
  std::vector<Int> can = canonical();
  for (size_t i = 1; i < can.size(); ++i)
    if (can[i] != 0) return false;
  return true;
}

Int CycInt::to_integer() const {
  std::vector<Int> can = canonical();
  for (size_t i = 1; i < can.size(); ++i)
    ensure(can[i] == 0, "value is not a rational integer");
  return can[0];
}

CycInt CycInt::div_exact(const Int& d) const {
  ensure(d != 0, "division by zero");
  std::vector<Int> can = canonical();
  CycInt r(N_);
  for (size_t i = 0; i < can.size(); ++i) {
    ensure(mpz_divisible_p(can[i].get_mpz_t(), d.get_mpz_t()), "inexact cyclotomic division");
    mpz_divexact(r.c_[i].get_mpz_t(), can[i].get_mpz_t(), d.get_mpz_t());
  }
  return r;
}

std::complex<double> CycInt::approx() const {
  static const double kTau = 6.283185307179586476925286766559;
  std::complex<double> acc(0.0, 0.0);
  for (long j = 0; j < N_; ++j) {
    if (c_[j] == 0) continue;
    double ang = kTau * static_cast<double>(j) / static_cast<double>(N_);
    acc += c_[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

CycInt char_value(const ff::TorusChar& lam, const ff::FFElem& x) {
  return CycInt::zeta(lam.order_N(), lam.value_exponent(x));
}

}  // namespace oiv
