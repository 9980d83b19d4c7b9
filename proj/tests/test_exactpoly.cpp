#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "skein/errors.hpp"
#include "skein/laurent_poly.hpp"
#include "skein/rational_fn.hpp"

using skein::LaurentPoly;
using skein::RationalFn;

namespace {
LaurentPoly A(int k) { return LaurentPoly::A(k); }
}  // namespace

TEST_CASE("laurent: small identities") {
  CHECK(A(2) + (-A(-2)) == A(2) - A(-2));
  CHECK((A(1) + A(-1)) * (A(1) - A(-1)) == A(2) - A(-2));
  CHECK((A(2) - A(2)).is_zero());
  CHECK(LaurentPoly(0).is_zero());
  CHECK((A(3) * LaurentPoly(0)).is_zero());
}

TEST_CASE("laurent: square of the loop value against schoolbook product") {
  const LaurentPoly d = -A(2) - A(-2);
  const auto expected = oracle::mul(oracle::from(d), oracle::from(d));
  CHECK(d.pow(2) == oracle::to(expected));
  CHECK(d.pow(2) == A(4) + LaurentPoly(2) + A(-4));
  CHECK(d.pow(0) == LaurentPoly(1));
}

TEST_CASE("laurent: printing") {
  CHECK((-A(2) - A(-2)).str() == "-A^2 - A^-2");
  CHECK((LaurentPoly(2) * A(4)).str() == "2*A^4");
  CHECK(LaurentPoly(0).str() == "0");
  CHECK((A(1) - LaurentPoly(1)).str() == "A - 1");
  CHECK((A(2) - A(-2)).latex() == "A^{2} - A^{-2}");
}

TEST_CASE("laurent: exact division") {
  CHECK(skein::divide_exact(A(4) - A(-4), A(2) - A(-2)) == A(2) + A(-2));
  CHECK(skein::divide_exact(A(8) - LaurentPoly(1), A(4) - LaurentPoly(1)) == A(4) + LaurentPoly(1));
  CHECK(skein::divide_exact(LaurentPoly(1), A(2)) == A(-2));
  CHECK_THROWS_AS(skein::divide_exact(A(2) + LaurentPoly(1), A(1) + LaurentPoly(2)), skein::NotDivisible);
  CHECK_THROWS_AS(skein::divide_exact(A(2), LaurentPoly(0)), skein::DivisionByZero);
  CHECK_THROWS_AS(skein::divide_exact(LaurentPoly(3), LaurentPoly(2)), skein::NotDivisible);
}

TEST_CASE("laurent: ring axioms and division on random inputs") {
  std::mt19937_64 rng(12345);
  for (int it = 0; it < 300; ++it) {
    const auto pa = oracle::random_poly(rng), pb = oracle::random_poly(rng), pc = oracle::random_poly(rng);
    const LaurentPoly a = oracle::to(pa), b = oracle::to(pb), c = oracle::to(pc);
    CHECK(a * b == oracle::to(oracle::mul(pa, pb)));
    CHECK(a + b == oracle::to(oracle::add(pa, pb)));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    LaurentPoly acc = c;
    acc.add_product(a, b);
    CHECK(acc == c + a * b);
    if (!b.is_zero()) CHECK(skein::divide_exact(a * b, b) == a);
  }
}

TEST_CASE("laurent: gcd divides both and cofactors are coprime") {
  std::mt19937_64 rng(777);
  for (int it = 0; it < 150; ++it) {
    const LaurentPoly g = oracle::to(oracle::random_poly(rng, 3, 3, 5));
    const LaurentPoly a = oracle::to(oracle::random_poly(rng, 4, 4, 7)) * g;
    const LaurentPoly b = oracle::to(oracle::random_poly(rng, 4, 4, 7)) * g;
    if (a.is_zero() || b.is_zero()) continue;
    const LaurentPoly h = skein::gcd(a, b);
    REQUIRE(skein::try_divide_exact(a, h).has_value());
    REQUIRE(skein::try_divide_exact(b, h).has_value());
    CHECK(skein::try_divide_exact(h, g).has_value());
    CHECK(skein::gcd(skein::divide_exact(a, h), skein::divide_exact(b, h)) == LaurentPoly(1));
    CHECK(h.low_degree() == 0);
    CHECK(h.leading_coeff() > 0);
  }
}

TEST_CASE("rational: inverse of the loop value is canonical") {
  const RationalFn d = -A(2) - A(-2);
  const RationalFn inv = d.inverse();
  CHECK(inv.num() == -A(2));
  CHECK(inv.den() == A(4) + LaurentPoly(1));
  CHECK(d * inv == RationalFn(1));
  CHECK_THROWS_AS(RationalFn().inverse(), skein::DivisionByZero);
  CHECK_THROWS_AS(RationalFn(A(1), LaurentPoly(0)), skein::DivisionByZero);
}

TEST_CASE("rational: common factors cancel") {
  const RationalFn r(A(4) - LaurentPoly(1), A(2) - LaurentPoly(1));
  CHECK(r == RationalFn(A(2) + LaurentPoly(1)));
  CHECK(r.is_polynomial());
  const RationalFn half(LaurentPoly(2), LaurentPoly(4));
  CHECK(half.num() == LaurentPoly(1));
  CHECK(half.den() == LaurentPoly(2));
  CHECK(RationalFn(A(3), A(5)) == RationalFn(A(-2)));
  CHECK(RationalFn(LaurentPoly(1), -A(2) - LaurentPoly(1)).den() == A(2) + LaurentPoly(1));
}

TEST_CASE("rational: field operations agree with evaluation and cross-multiplication") {
  std::mt19937_64 rng(4242);
  const mpq_class points[] = {mpq_class(2), mpq_class(3, 2), mpq_class(-5, 3)};
  for (int it = 0; it < 120; ++it) {
    const LaurentPoly n1 = oracle::to(oracle::random_poly(rng, 3, 3, 5));
    const LaurentPoly d1 = oracle::to(oracle::random_poly(rng, 3, 3, 5));
    const LaurentPoly n2 = oracle::to(oracle::random_poly(rng, 3, 3, 5));
    const LaurentPoly d2 = oracle::to(oracle::random_poly(rng, 3, 3, 5));
    if (d1.is_zero() || d2.is_zero()) continue;
    const RationalFn x(n1, d1), y(n2, d2);
    bool usable = true;
    for (const auto& p : points)
      if (oracle::eval(oracle::from(d1), p) == 0 || oracle::eval(oracle::from(d2), p) == 0) usable = false;
    if (!usable) continue;
    CHECK((x + (-x)).is_zero());
    CHECK(RationalFn(x.num(), x.den()) == x);  // canonical form is a fixed point
    CHECK(x.num() * d1 == n1 * x.den());
    for (const auto& p : points) {
      const mpq_class vx = oracle::eval(oracle::from(n1), p) / oracle::eval(oracle::from(d1), p);
      const mpq_class vy = oracle::eval(oracle::from(n2), p) / oracle::eval(oracle::from(d2), p);
      CHECK(oracle::eval(x + y, p) == vx + vy);
      CHECK(oracle::eval(x * y, p) == vx * vy);
      CHECK(oracle::eval(x - y, p) == vx - vy);
      if (!y.is_zero() && vy != 0) CHECK(oracle::eval(x / y, p) == vx / vy);
    }
    CHECK(((x == y) == (x.num() * y.den() == y.num() * x.den())));
  }
}
