#include "oiv/finitefield.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace oiv::ff {

namespace {

constexpr long kFieldCap = 100000000;   // largest q we agree to construct
constexpr long kDlogCap = 10000000;     // spec'd discrete-log bound
constexpr long kDlogTableCap = 100000;  // below this, store the full table

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long checked_pow(long b, long e, long cap) {
  long r = 1;
  for (long i = 0; i < e; ++i) {
    if (r > cap / b) throw precondition_error("field too large");
    r *= b;
  }
  return r;
}

using Poly = std::vector<int>;  // dense, index = degree, entries in [0,p)

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, long p) {
  long k = static_cast<long>(mod.size()) - 1;
  std::vector<long> prod(2 * k - 1 > 0 ? 2 * k - 1 : 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] += static_cast<long>(a[i]) * b[j];
  }
  for (long i = static_cast<long>(prod.size()) - 1; i >= k; --i) {
    long coef = prod[i] % p;
    if (!coef) continue;
    for (long j = 0; j < k; ++j) prod[i - k + j] -= coef * mod[j];
    prod[i] = 0;
  }
  Poly r(k);
  for (long i = 0; i < k; ++i) r[i] = static_cast<int>(((prod[i] % p) + p) % p);
  return r;
}

Poly poly_powmod(Poly base, Int e, const Poly& mod, long p) {
  long k = static_cast<long>(mod.size()) - 1;
  Poly r(k, 0);
  r[0] = 1;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = poly_mulmod(r, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// gcd of a with the (monic) candidate modulus, over F_p.
Poly poly_gcd(Poly a, Poly b, long p) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    // a mod b
    long db = static_cast<long>(b.size()) - 1;
    long inv_lead = 1;
    {
      long lead = b[db], t = 1;
      for (long x = 1; x < p; ++x)
        if (lead * x % p == 1) { t = x; break; }
      inv_lead = t;
    }
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
      long da = static_cast<long>(a.size()) - 1;
      long coef = a[da] * inv_lead % p;
      for (long j = 0; j <= db; ++j) {
        long idx = da - db + j;
        a[idx] = static_cast<int>(((a[idx] - coef * b[j]) % p + p) % p);
      }
      a = poly_trim(std::move(a));
    }
    std::swap(a, b);
  }
  return a;
}

bool poly_irreducible(const Poly& mod, long p) {
  long k = static_cast<long>(mod.size()) - 1;
  if (k == 1) return true;
  Poly x(k, 0);
  x[1 % k] = 1;
  // x^{p^k} == x, and gcd(x^{p^{k/l}} - x, mod) trivial for prime l | k.
  Poly fr = x;
  std::vector<Poly> stages(k + 1);
  stages[0] = x;
  for (long j = 1; j <= k; ++j) {
    fr = poly_powmod(fr, Int(p), mod, p);
    stages[j] = fr;
  }
  if (stages[k] != x) return false;
  for (long l = 2; l <= k; ++l) {
    if (k % l != 0) continue;
    bool lp = true;
    for (long d = 2; d * d <= l; ++d)
      if (l % d == 0) { lp = false; break; }
    if (!lp) continue;
    Poly diff = stages[k / l];
    for (long i = 0; i < k; ++i)
      diff[i] = static_cast<int>(((diff[i] - x[i]) % p + p) % p);
    Poly g = poly_gcd(diff, mod, p);
    if (static_cast<long>(poly_trim(g).size()) > 1) return false;
  }
  return true;
}

}  // namespace

bool FFElem::is_zero() const {
  for (int v : c)
    if (v) return false;
  return true;
}

bool FFElem::is_one() const {
  if (c.empty() || c[0] != 1) return false;
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i]) return false;
  return true;
}

long FFElem::code() const {
  long r = 0;
  for (int v : c) r = r * F->p + v;  // c[0] contributes the top digit
  return r;
}

FFElem operator+(const FFElem& a, const FFElem& b) { return a.F->add(a, b); }
FFElem operator-(const FFElem& a, const FFElem& b) { return a.F->sub(a, b); }
FFElem operator-(const FFElem& a) { return a.F->neg(a); }
FFElem operator*(const FFElem& a, const FFElem& b) { return a.F->mul(a, b); }

const FF* FF::get(long p, long k) {
  static std::mutex mu;
  static std::map<std::pair<long, long>, std::unique_ptr<FF>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second.get();

  require(p > 2 && p % 2 == 1, "characteristic must be an odd prime");
  require(is_prime(p), "characteristic must be an odd prime");
  require(k >= 1, "extension degree must be positive");
  long q = checked_pow(p, k, kFieldCap);

  auto F = std::unique_ptr<FF>(new FF());
  F->p = p;
  F->k = k;
  F->q = q;
  // Scan non-leading coefficient tuples in code order (constant term most
  // significant) for the first irreducible monic polynomial.
  long tuples = q;
  for (long code = 0; code < tuples; ++code) {
    Poly mod(k + 1, 0);
    mod[k] = 1;
    long rest = code;
    for (long i = k - 1; i >= 0; --i) {  // c[k-1] is the least significant digit
      mod[i] = static_cast<int>(rest % p);
      rest /= p;
    }
    if (poly_irreducible(mod, p)) {
      F->modulus = mod;
      break;
    }
  }
  ensure(!F->modulus.empty(), "no irreducible modulus found");
  const FF* out = F.get();
  cache[key] = std::move(F);
  return out;
}

FFElem FF::zero() const { return FFElem{this, std::vector<int>(k, 0)}; }

FFElem FF::one() const { return from_int(1); }

FFElem FF::gen() const {
  FFElem e = zero();
  if (k == 1) {
    // residue of x modulo the degree-1 modulus x + c0: the scan always finds
    // x itself (c0 = 0), so the generator is 0; callers of gen() on prime
    // fields get the canonical root of the modulus.
    e.c[0] = static_cast<int>(((-modulus[0]) % p + p) % p);
  } else {
    e.c[1] = 1;
  }
  return e;
}

FFElem FF::from_int(long a) const {
  FFElem e = zero();
  e.c[0] = static_cast<int>(((a % p) + p) % p);
  return e;
}

FFElem FF::from_coeffs(std::vector<int> cs) const {
  require(static_cast<long>(cs.size()) == k, "coefficient vector length mismatch");
  for (int& v : cs) v = ((v % static_cast<int>(p)) + static_cast<int>(p)) % static_cast<int>(p);
  return FFElem{this, std::move(cs)};
}

FFElem FF::from_code(long code) const {
  require(code >= 0 && code < q, "element code out of range");
  std::vector<int> cs(k);
  for (long i = k - 1; i >= 0; --i) {
    cs[i] = static_cast<int>(code % p);
    code /= p;
  }
  return FFElem{this, std::move(cs)};
}

FFElem FF::add(const FFElem& a, const FFElem& b) const {
  require(a.F == this && b.F == this, "parent field mismatch");
  FFElem r = a;
  for (long i = 0; i < k; ++i) r.c[i] = static_cast<int>((r.c[i] + b.c[i]) % p);
  return r;
}

FFElem FF::sub(const FFElem& a, const FFElem& b) const {
  require(a.F == this && b.F == this, "parent field mismatch");
  FFElem r = a;
  for (long i = 0; i < k; ++i) r.c[i] = static_cast<int>(((r.c[i] - b.c[i]) % p + p) % p);
  return r;
}

FFElem FF::neg(const FFElem& a) const {
  require(a.F == this, "parent field mismatch");
  FFElem r = a;
  for (long i = 0; i < k; ++i) r.c[i] = static_cast<int>(((-r.c[i]) % p + p) % p);
  return r;
}

FFElem FF::mul(const FFElem& a, const FFElem& b) const {
  require(a.F == this && b.F == this, "parent field mismatch");
  Poly r = poly_mulmod(a.c, b.c, modulus, p);
  return FFElem{this, std::move(r)};
}

FFElem FF::inv(const FFElem& a) const {
  require(a.F == this, "parent field mismatch");
  require(!a.is_zero(), "inversion of zero");
  return pow(a, Int(q - 2));
}

FFElem FF::pow(const FFElem& a, const Int& e) const {
  require(a.F == this, "parent field mismatch");
  if (a.is_zero()) {
    require(e > 0, "zero to a non-positive power");
    return zero();
  }
  Int ee = e % (q - 1);
  if (ee < 0) ee += q - 1;
  Poly r = poly_powmod(a.c, ee, modulus, p);
  return FFElem{this, std::move(r)};
}

FFElem FF::frobenius(const FFElem& a, long j) const {
  require(j >= 0, "negative frobenius power");
  Int e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(j));
  if (a.is_zero()) return zero();
  return pow(a, e);
}

FFElem FF::trace_to(const FFElem& a, long d) const {
  require(d >= 1 && k % d == 0, "subfield degree must divide extension degree");
  FFElem acc = a, cur = a;
  for (long i = 1; i < k / d; ++i) {
    cur = frobenius(cur, d);
    acc = add(acc, cur);
  }
  return acc;
}

FFElem FF::norm_to(const FFElem& a, long d) const {
  require(d >= 1 && k % d == 0, "subfield degree must divide extension degree");
  FFElem acc = a, cur = a;
  for (long i = 1; i < k / d; ++i) {
    cur = frobenius(cur, d);
    acc = mul(acc, cur);
  }
  return acc;
}

bool FF::in_subfield(const FFElem& a, long d) const {
  require(d >= 1 && k % d == 0, "subfield degree must divide extension degree");
  return frobenius(a, d) == a;
}

bool FF::is_square(const FFElem& a) const {
  require(!a.is_zero(), "square test of zero");
  return pow(a, Int((q - 1) / 2)).is_one();
}

void FF::ensure_prim() const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  if (prim_ready_) return;
  q1_primes_.clear();
  long m = q - 1;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      q1_primes_.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) q1_primes_.push_back(m);
  for (long code = 1; code < q; ++code) {
    FFElem cand = from_code(code);
    if (cand.is_zero()) continue;
    bool ok = true;
    for (long l : q1_primes_) {
      if (pow(cand, Int((q - 1) / l)).is_one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      prim_ = cand;
      prim_ready_ = true;
      return;
    }
  }
  throw integrity_error("no primitive root found");
}

FFElem FF::primitive_root() const {
  ensure_prim();
  return prim_;
}

long FF::mult_order(const FFElem& a) const {
  require(!a.is_zero(), "order of zero");
  ensure_prim();
  long o = q - 1;
  for (long l : q1_primes_) {
    while (o % l == 0 && pow(a, Int(o / l)).is_one()) o /= l;
  }
  return o;
}

long FF::dlog(const FFElem& x) const {
  require(x.F == this, "parent field mismatch");
  require(!x.is_zero(), "discrete log of zero");
  require(q <= kDlogCap, "field too large for discrete log");
  ensure_prim();
  if (q <= kDlogTableCap) {
    std::lock_guard<std::mutex> lock(cache_mu_);
    if (dlog_table_.empty()) {
      dlog_table_.assign(q, -1);
      FFElem cur = one();
      for (long e = 0; e < q - 1; ++e) {
        dlog_table_[cur.code()] = e;
        cur = mul(cur, prim_);
      }
    }
    long r = dlog_table_[x.code()];
    ensure(r >= 0, "discrete log table miss");
    return r;
  }
  return dlog_bsgs(x);
}

long FF::dlog_bsgs(const FFElem& x) const {
  ensure_prim();
  long n = q - 1;
  long m = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::unordered_map<long, long> baby;
  baby.reserve(static_cast<size_t>(m) * 2);
  FFElem cur = one();
  for (long j = 0; j < m; ++j) {
    baby.emplace(cur.code(), j);
    cur = mul(cur, prim_);
  }
  FFElem giant = pow(prim_, Int(-m));
  FFElem gamma = x;
  for (long i = 0; i < m + 1; ++i) {
    auto it = baby.find(gamma.code());
    if (it != baby.end()) {
      long e = (i * m + it->second) % n;
      return e;
    }
    gamma = mul(gamma, giant);
  }
  throw integrity_error("baby-step giant-step failed");
}

SubfieldMap::SubfieldMap(const FF* sub, const FF* big) : sub_(sub), big_(big) {
  require(sub->p == big->p, "characteristic mismatch");
  require(big->k % sub->k == 0, "subfield degree must divide");
  require(big->q <= 1000000, "embedding root scan cap exceeded");
  require(sub->q <= 100000, "subfield enumeration cap exceeded");
  bool found = false;
  for (long code = 0; code < big->q; ++code) {
    FFElem y = big->from_code(code);
    // Horner evaluation of the subfield modulus at y.
    FFElem acc = big->from_int(sub->modulus[sub->k]);
    for (long i = sub->k - 1; i >= 0; --i)
      acc = big->add(big->mul(acc, y), big->from_int(sub->modulus[i]));
    if (acc.is_zero()) {
      root_ = y;
      found = true;
      break;
    }
  }
  ensure(found, "no root of subfield modulus");
  for (long code = 0; code < sub->q; ++code) {
    FFElem a = sub->from_code(code);
    back_[embed(a).code()] = code;
  }
}

FFElem SubfieldMap::embed(const FFElem& a) const {
  require(a.F == sub_, "parent field mismatch");
  FFElem acc = big_->zero();
  for (long i = sub_->k - 1; i >= 0; --i)
    acc = big_->add(big_->mul(acc, root_), big_->from_int(a.c[i]));
  return acc;
}

bool SubfieldMap::in_image(const FFElem& y) const {
  require(y.F == big_, "parent field mismatch");
  return back_.count(y.code()) > 0;
}

FFElem SubfieldMap::section(const FFElem& y) const {
  require(y.F == big_, "parent field mismatch");
  auto it = back_.find(y.code());
  require(it != back_.end(), "element not in subfield image");
  return sub_->from_code(it->second);
}

TorusChar::TorusChar(const FF* E, long n, long m) : E_(E), n_(n) {
  require(n >= 1 && E->k % n == 0, "factor count must divide field degree");
  N_ = E->q - 1;
  q_ = 1;
  for (long i = 0; i < E->k / n; ++i) q_ *= E->p;
  m_ = ((m % N_) + N_) % N_;
}

long TorusChar::value_exponent(const FFElem& x) const {
  require(x.F == E_, "parent field mismatch");
  require(!x.is_zero(), "character of zero");
  Int e = Int(m_) * Int(E_->dlog(x));
  e %= N_;
  return e.get_si();
}

int TorusChar::at_minus_one() const { return m_ % 2 == 0 ? 1 : -1; }

bool TorusChar::is_regular() const {
  std::vector<long> orbit;
  Int cur(m_);
  for (long i = 0; i < n_; ++i) {
    long v = cur.get_si();
    if (std::find(orbit.begin(), orbit.end(), v) != orbit.end()) break;
    orbit.push_back(v);
    cur = cur * q_ % N_;
  }
  return static_cast<long>(orbit.size()) == n_;
}

}  // namespace oiv::ff
