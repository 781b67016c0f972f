#pragma once

#include <cstdint>
#include <string>

namespace opg {

// Truncated p-adic integers for a fixed odd prime p.
//
// A Padic is a residue mod p^prec together with its precision prec >= 1;
// precision is a property of the value, not of a global context. Binary
// operations require equal primes and return min precision. Operations
// that genuinely lose digits (divide_exact, qint, dlog) say so in their
// contracts. p = 2 is rejected everywhere.
class Padic {
public:
  Padic() = default;
  Padic(int64_t prime, int64_t value, int prec);

  int64_t prime() const { return p_; }
  int prec() const { return prec_; }
  uint64_t modulus() const { return mod_; }
  // canonical residue in [0, p^prec)
  uint64_t value() const { return v_; }
  // representative in (-p^prec/2, p^prec/2], convenient for printing
  int64_t signed_value() const;

  bool is_zero() const { return v_ == 0; }
  bool is_unit() const { return v_ % static_cast<uint64_t>(p_) != 0; }

  // same residue, lower precision k <= prec
  Padic truncated(int k) const;

  Padic operator+(const Padic& o) const;
  Padic operator-(const Padic& o) const;
  Padic operator-() const;
  Padic operator*(const Padic& o) const;
  bool operator==(const Padic& o) const = default;

  std::string str() const;

private:
  int64_t p_ = 0;
  int prec_ = 0;
  uint64_t mod_ = 0; // p^prec
  uint64_t v_ = 0;
};

Padic inv_unit(const Padic& a);

// Largest v < prec with p^v | a, or prec itself when a = 0 (the ">= prec"
// marker: zero and p^prec·unit are indistinguishable here).
int valuation(const Padic& a);

// a / b where valuation(a) >= valuation(b) = v < prec; the quotient loses
// v digits of precision.
Padic divide_exact(const Padic& a, const Padic& b);

// u^m, exact at the precision of u; m < 0 requires u a unit.
Padic pow_int(const Padic& u, int64_t m);

// Principal units 1 + pZ_p; the value type of orientations.
class Unit1 {
public:
  Unit1() = default;
  explicit Unit1(const Padic& u);
  Unit1(int64_t prime, int64_t value, int prec) : Unit1(Padic(prime, value, prec)) {}

  const Padic& padic() const { return u_; }
  int64_t prime() const { return u_.prime(); }
  int prec() const { return u_.prec(); }
  bool is_one() const { return u_.value() == 1; }

  bool operator==(const Unit1& o) const = default;

private:
  Padic u_;
};

// u^lambda for a p-adic exponent. Well defined mod p^k from lambda mod
// p^{k-1} because u = 1 mod p; result precision min(u.prec, lambda.prec+1).
Unit1 pow_padic(const Unit1& u, const Padic& lambda);

// q-integer (u^lambda - 1)/(u - 1). For an integer exponent this is the
// exact geometric sum 1 + u + ... + u^{m-1} (no precision loss); for a
// p-adic exponent it goes through pow_padic and divide_exact, losing
// valuation(u - 1) digits.
Padic qint(const Unit1& u, int64_t m);
Padic qint(const Unit1& u, const Padic& lambda);

// Iwasawa logarithm of a principal unit, truncated series with internal
// guard digits; exact at the precision of u (p odd).
Padic log1p_unit(const Unit1& u);

// Discrete log: lambda with base^lambda = u, requires base != 1 and
// valuation(base-1) <= valuation(u-1); loses valuation(base-1) digits.
Padic dlog(const Unit1& u, const Unit1& base);

} // namespace opg
