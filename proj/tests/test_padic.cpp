#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "opg/padic.hpp"

using namespace opg;

namespace {

Padic trunc_to(const Padic& a, int k) { return a.truncated(std::min(a.prec(), k)); }

bool congruent(const Padic& a, const Padic& b) {
  int k = std::min(a.prec(), b.prec());
  return trunc_to(a, k) == trunc_to(b, k);
}

} // namespace

TEST_CASE("ring arithmetic examples") {
  Padic m2(3, -2, 4);
  CHECK((m2 * m2 * m2).value() == 73); // (1-p)^3 = -8 = 73 mod 81

  CHECK(inv_unit(Padic(3, 1, 4)).value() == 1);
  CHECK(inv_unit(Padic(3, 4, 2)).value() == 7); // 4*7 = 28 = 1 mod 9
  CHECK_THROWS_AS(inv_unit(Padic(3, 6, 3)), std::domain_error);
  CHECK_THROWS_AS(Padic(3, 1, 2) + Padic(5, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Padic(2, 1, 2), std::invalid_argument);
}

TEST_CASE("valuation") {
  CHECK(valuation(Padic(3, 45, 4)) == 2); // 9*5
  CHECK(valuation(Padic(3, 0, 4)) == 4);  // the ">= prec" marker
  CHECK(valuation(Padic(3, 7, 4)) == 0);
}

TEST_CASE("divide_exact") {
  Padic q = divide_exact(Padic(3, 9, 4), Padic(3, 3, 4));
  CHECK(q.value() == 3);
  CHECK(q.prec() == 3);

  Padic a(3, 47, 4);
  Padic d = divide_exact(a, Padic(3, 1, 4));
  CHECK(d == a);

  Padic z = divide_exact(Padic(3, 0, 4), Padic(3, 3, 4));
  CHECK(z.is_zero());
  CHECK(z.prec() == 3);

  CHECK_THROWS_AS(divide_exact(Padic(3, 1, 4), Padic(3, 3, 4)), std::domain_error);
  CHECK_THROWS_AS(divide_exact(Padic(3, 1, 4), Padic(3, 0, 4)), std::domain_error);
}

TEST_CASE("pow_int") {
  CHECK(pow_int(Padic(3, 1 - 3, 4), 3).value() == 73);
  CHECK(pow_int(Padic(3, 47, 4), 0).value() == 1);
  Padic u(3, 1 - 3, 5);
  CHECK(valuation(pow_int(u, 3) - Padic(3, 1, 5)) == 2); // (1-p)^p - 1 ~ p^2
  CHECK(pow_int(Padic(3, 5, 3), -1) == inv_unit(Padic(3, 5, 3)));
  CHECK_THROWS_AS(pow_int(Padic(3, 6, 3), -2), std::domain_error);
}

TEST_CASE("pow_padic") {
  Unit1 u(3, 7, 4);
  CHECK(pow_padic(u, Padic(3, 0, 4)).padic().value() == 1);
  CHECK(congruent(pow_padic(u, Padic(3, 1, 4)).padic(), u.padic()));

  Unit1 v(3, 1 - 3, 4);
  Padic lam(3, 3, 4);
  CHECK(pow_padic(v, lam).padic() == pow_int(v.padic(), 3).truncated(4));
}

TEST_CASE("pow_padic depends only on lambda mod p^(k-1)") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    int64_t p = (i % 2 == 0) ? 3 : 5;
    int prec = 2 + static_cast<int>(rng() % 4);
    Unit1 u(p, 1 + p * static_cast<int64_t>(rng() % 50), prec);
    Padic lam(p, static_cast<int64_t>(rng() % 1000), prec);
    Unit1 a = pow_padic(u, lam);
    int k = a.prec();
    uint64_t shift = 1;
    for (int j = 0; j < k - 1; ++j) shift *= static_cast<uint64_t>(p);
    Padic lam2 = lam + Padic(p, static_cast<int64_t>(shift), prec);
    Unit1 b = pow_padic(u, lam2);
    CHECK(congruent(a.padic(), b.padic()));
  }
}

TEST_CASE("qint examples") {
  Unit1 u(3, 1 + 3 * 5, 4);
  CHECK(qint(u, int64_t{1}).value() == 1);

  // numerator (1-p)^p - 1 has valuation 2, denominator valuation 1
  Unit1 v(3, 1 - 3, 5);
  CHECK(valuation(qint(v, Padic(3, 3, 5))) == 1);
}

TEST_CASE("qint equals the geometric sum, m <= 200") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int64_t p = (trial % 2 == 0) ? 3 : 5;
    int prec = 3 + static_cast<int>(rng() % 3);
    Unit1 u(p, 1 + p * static_cast<int64_t>(rng() % 40), prec);
    int64_t m = static_cast<int64_t>(rng() % 201);
    Padic sum(p, 0, prec);
    Padic pw(p, 1, prec);
    for (int64_t i = 0; i < m; ++i) {
      sum = sum + pw;
      pw = pw * u.padic();
    }
    CHECK(qint(u, m) == sum);
  }
}

TEST_CASE("qint cocycle identity") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    int64_t p = (trial % 3 == 0) ? 5 : 3;
    int prec = 4 + static_cast<int>(rng() % 3);
    Unit1 u(p, 1 + p * (1 + static_cast<int64_t>(rng() % 30)), prec);
    if (u.is_one()) continue; // the q-integer needs u != 1 at this precision
    Padic lam(p, static_cast<int64_t>(rng() % 500), prec);
    Padic mu(p, static_cast<int64_t>(rng() % 500), prec);
    Padic lhs = qint(u, lam + mu);
    Padic rhs = qint(u, lam) + pow_padic(u, lam).padic() * qint(u, mu);
    CHECK(congruent(lhs, rhs));
  }
}

TEST_CASE("ring axioms on random triples, precision 1..6") {
  std::mt19937_64 rng(17);
  int cases = 0;
  for (int64_t p : {3, 5, 7}) {
    for (int prec = 1; prec <= 6; ++prec) {
      for (int trial = 0; trial < 30; ++trial) {
        Padic a(p, static_cast<int64_t>(rng() % 10000), prec);
        Padic b(p, static_cast<int64_t>(rng() % 10000), prec);
        Padic c(p, static_cast<int64_t>(rng() % 10000), prec);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a + (-a) == Padic(p, 0, prec));
        ++cases;
      }
    }
  }
  CHECK(cases >= 500);
}

TEST_CASE("valuation is additive under multiplication") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 500; ++trial) {
    int64_t p = 3;
    int prec = 6;
    Padic a(p, static_cast<int64_t>(rng() % 700), prec);
    Padic b(p, static_cast<int64_t>(rng() % 700), prec);
    if (a.is_zero() || b.is_zero()) continue;
    int va = valuation(a), vb = valuation(b);
    if (va + vb < prec) CHECK(valuation(a * b) == va + vb);
  }
}

TEST_CASE("log1p and dlog") {
  CHECK(log1p_unit(Unit1(3, 1, 5)).is_zero());

  Unit1 u0(3, 1 + 3 * 4, 5);
  CHECK(dlog(Unit1(pow_int(u0.padic(), 2)), u0).value() == 2);
  CHECK_THROWS_AS(dlog(u0, Unit1(3, 1, 5)), std::domain_error);

  // round trip over random exponents: dlog(u0^lam, u0) = lam mod 3^4
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    Padic lam(3, static_cast<int64_t>(rng() % 2000), 5);
    Unit1 u = pow_padic(u0, lam);
    Padic back = dlog(u, u0);
    CHECK(congruent(back, lam));
    // and the documented contract the other way
    CHECK(congruent(pow_padic(u0, back).padic(), u.padic()));
  }
}

TEST_CASE("log1p is additive") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    int64_t p = (trial % 2 == 0) ? 3 : 7;
    int prec = 3 + static_cast<int>(rng() % 4);
    Unit1 u(p, 1 + p * static_cast<int64_t>(rng() % 60), prec);
    Unit1 v(p, 1 + p * static_cast<int64_t>(rng() % 60), prec);
    Padic lhs = log1p_unit(Unit1(u.padic() * v.padic()));
    Padic rhs = log1p_unit(u) + log1p_unit(v);
    CHECK(congruent(lhs, rhs));
  }
}

TEST_CASE("dlog of a unit whose log valuation is too small") {
  // base - 1 has valuation 2 but u - 1 has valuation 1
  Unit1 base(3, 1 + 9, 5);
  Unit1 u(3, 1 + 3, 5);
  CHECK_THROWS_AS(dlog(u, base), std::domain_error);
}
