#include "opg/padic.hpp"

#include <stdexcept>

namespace opg {

namespace {

bool small_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint64_t checked_pow(int64_t p, int k) {
  uint64_t m = 1;
  for (int i = 0; i < k; ++i) {
    if (m > (uint64_t(1) << 62) / static_cast<uint64_t>(p))
      throw std::overflow_error("Padic: p^prec exceeds 2^62");
    m *= static_cast<uint64_t>(p);
  }
  return m;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// inverse of a unit mod p^k by extended Euclid
uint64_t invmod(uint64_t a, uint64_t m) {
  int64_t t = 0, nt = 1;
  int64_t r = static_cast<int64_t>(m), nr = static_cast<int64_t>(a % m);
  while (nr != 0) {
    int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw std::domain_error("Padic: inverse of a non-unit");
  if (t < 0) t += static_cast<int64_t>(m);
  return static_cast<uint64_t>(t);
}

void require_same_prime(const Padic& a, const Padic& b) {
  if (a.prime() != b.prime())
    throw std::invalid_argument("Padic: prime mismatch");
}

} // namespace

Padic::Padic(int64_t prime, int64_t value, int prec) : p_(prime), prec_(prec) {
  if (prime == 2) throw std::invalid_argument("Padic: p = 2 is not supported");
  if (!small_prime(prime)) throw std::invalid_argument("Padic: p must be an odd prime");
  if (prec < 1) throw std::invalid_argument("Padic: precision must be >= 1");
  mod_ = checked_pow(prime, prec);
  int64_t r = value % static_cast<int64_t>(mod_);
  if (r < 0) r += static_cast<int64_t>(mod_);
  v_ = static_cast<uint64_t>(r);
}

int64_t Padic::signed_value() const {
  if (v_ > mod_ / 2) return static_cast<int64_t>(v_) - static_cast<int64_t>(mod_);
  return static_cast<int64_t>(v_);
}

Padic Padic::truncated(int k) const {
  if (k < 1 || k > prec_) throw std::invalid_argument("Padic::truncated: bad precision");
  if (k == prec_) return *this;
  Padic r;
  r.p_ = p_;
  r.prec_ = k;
  r.mod_ = checked_pow(p_, k);
  r.v_ = v_ % r.mod_;
  return r;
}

Padic Padic::operator+(const Padic& o) const {
  require_same_prime(*this, o);
  Padic r = prec_ <= o.prec_ ? truncated(prec_) : truncated(o.prec_);
  r.v_ = (v_ % r.mod_ + o.v_ % r.mod_) % r.mod_;
  return r;
}

Padic Padic::operator-(const Padic& o) const { return *this + (-o); }

Padic Padic::operator-() const {
  Padic r = *this;
  r.v_ = v_ == 0 ? 0 : mod_ - v_;
  return r;
}

Padic Padic::operator*(const Padic& o) const {
  require_same_prime(*this, o);
  Padic r = prec_ <= o.prec_ ? truncated(prec_) : truncated(o.prec_);
  r.v_ = mulmod(v_ % r.mod_, o.v_ % r.mod_, r.mod_);
  return r;
}

std::string Padic::str() const {
  return std::to_string(signed_value()) + " (mod " + std::to_string(p_) + "^" +
         std::to_string(prec_) + ")";
}

Padic inv_unit(const Padic& a) {
  if (!a.is_unit()) throw std::domain_error("inv_unit: argument has positive valuation");
  return Padic(a.prime(), static_cast<int64_t>(invmod(a.value(), a.modulus())), a.prec());
}

int valuation(const Padic& a) {
  if (a.is_zero()) return a.prec();
  int v = 0;
  uint64_t x = a.value();
  while (x % static_cast<uint64_t>(a.prime()) == 0) {
    x /= static_cast<uint64_t>(a.prime());
    ++v;
  }
  return v;
}

Padic divide_exact(const Padic& a, const Padic& b) {
  require_same_prime(a, b);
  int v = valuation(b);
  if (v >= b.prec()) throw std::domain_error("divide_exact: division by zero");
  if (!a.is_zero() && valuation(a) < v)
    throw std::domain_error("divide_exact: operands not divisible");
  int prec = std::min(a.prec(), b.prec()) - v;
  if (prec < 1) throw std::domain_error("divide_exact: precision exhausted");
  uint64_t pv = 1;
  for (int i = 0; i < v; ++i) pv *= static_cast<uint64_t>(a.prime());
  uint64_t mod = Padic(a.prime(), 0, prec).modulus();
  uint64_t num = (a.value() / pv) % mod;
  uint64_t den = (b.value() / pv) % mod;
  return Padic(a.prime(), static_cast<int64_t>(mulmod(num, invmod(den, mod), mod)), prec);
}

Padic pow_int(const Padic& u, int64_t m) {
  Padic base = u;
  if (m < 0) base = inv_unit(u);
  uint64_t e = m < 0 ? static_cast<uint64_t>(-(m + 1)) + 1 : static_cast<uint64_t>(m);
  return Padic(u.prime(), static_cast<int64_t>(powmod(base.value(), e, u.modulus())),
               u.prec());
}

Unit1::Unit1(const Padic& u) : u_(u) {
  if (u.value() % static_cast<uint64_t>(u.prime()) != 1)
    throw std::invalid_argument("Unit1: value is not 1 mod p");
}

Unit1 pow_padic(const Unit1& u, const Padic& lambda) {
  if (u.prime() != lambda.prime()) throw std::invalid_argument("pow_padic: prime mismatch");
  int k = std::min(u.prec(), lambda.prec() + 1);
  Padic base = u.padic().truncated(k);
  // u = 1 mod p, so u^{p^{k-1}} = 1 mod p^k: any integer representative of
  // lambda mod p^{k-1} gives the same power.
  uint64_t e = lambda.value() % Padic(u.prime(), 0, k > 1 ? k - 1 : 1).modulus();
  if (k == 1) e = 0; // mod p every principal unit power is 1
  return Unit1(pow_int(base, static_cast<int64_t>(e)));
}

namespace {

// geometric sum 1 + u + ... + u^{m-1} by binary splitting, m >= 0
Padic geom_sum(const Padic& u, uint64_t m) {
  if (m == 0) return Padic(u.prime(), 0, u.prec());
  if (m == 1) return Padic(u.prime(), 1, u.prec());
  Padic half = geom_sum(u, m / 2);
  Padic uh = pow_int(u, static_cast<int64_t>(m / 2));
  Padic s = half + uh * half; // S(2k) = S(k) + u^k S(k)
  if (m & 1) s = s + pow_int(u, static_cast<int64_t>(m - 1));
  return s;
}

} // namespace

Padic qint(const Unit1& u, int64_t m) {
  if (m >= 0) return geom_sum(u.padic(), static_cast<uint64_t>(m));
  // (u^m - 1)/(u - 1) = -u^m * S(-m)
  Padic um = pow_int(u.padic(), m);
  return -(um * geom_sum(u.padic(), static_cast<uint64_t>(-m)));
}

Padic qint(const Unit1& u, const Padic& lambda) {
  Padic den = u.padic() - Padic(u.prime(), 1, u.prec());
  if (den.is_zero())
    throw std::domain_error("qint: u = 1 at full precision and exponent not an integer");
  Padic num = pow_padic(u, lambda).padic() - Padic(u.prime(), 1, u.prec());
  return divide_exact(num, den);
}

Padic log1p_unit(const Unit1& u) {
  const int64_t p = u.prime();
  const int prec = u.prec();
  // Series sum (-1)^{k+1} x^k / k with x = u - 1. Dividing by k eats
  // val_p(k) digits, so run at prec + guard digits and truncate back: the
  // result mod p^prec depends only on u mod p^prec because dlog(u) = du/u.
  const int guard = prec / (static_cast<int>(p) - 1) + 2;
  const int w = prec + guard;
  Padic x = Padic(p, static_cast<int64_t>(u.padic().value()), w) - Padic(p, 1, w);
  if (x.is_zero()) return Padic(p, 0, prec);
  const int vx = valuation(x);
  Padic acc(p, 0, w);
  Padic term = x; // x^k, exact at precision w
  for (int k = 1; k * vx < w; ++k) {
    int64_t kk = k;
    int vk = 0;
    while (kk % p == 0) {
      kk /= p;
      ++vk;
    }
    Padic contrib = term;
    for (int i = 0; i < vk; ++i)
      contrib = divide_exact(contrib, Padic(p, p, contrib.prec()));
    contrib = contrib * inv_unit(Padic(p, kk, contrib.prec()));
    // zero-extend back to w; the fabricated digits sit above prec
    Padic lifted(p, static_cast<int64_t>(contrib.value()), w);
    acc = (k % 2 == 1) ? acc + lifted : acc - lifted;
    term = term * x;
  }
  return acc.truncated(prec);
}

Padic dlog(const Unit1& u, const Unit1& base) {
  if (base.is_one()) throw std::domain_error("dlog: base = 1");
  Padic lu = log1p_unit(u);
  Padic lb = log1p_unit(base);
  if (!lu.is_zero() && valuation(lu) < valuation(lb))
    throw std::domain_error("dlog: u is not a power of base at this precision");
  return divide_exact(lu, lb);
}

} // namespace opg
