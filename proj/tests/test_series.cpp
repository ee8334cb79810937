#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qlab/series.hpp"

using namespace qlab;

namespace {

// Uniformly random Laurent series: offset in [-5, 5], small rational
// coefficients, order 60. Nonzero leading coefficient by construction.
LaurentSeries random_series(std::mt19937& rng, long order = 60) {
  std::uniform_int_distribution<long> off_dist(-5, 5);
  std::uniform_int_distribution<int> num_dist(-6, 6), den_dist(1, 4);
  long offset = off_dist(rng);
  LaurentSeries s = LaurentSeries::zero(order);
  for (long e = offset; e <= order; ++e) {
    int num = num_dist(rng);
    if (e == offset && num == 0) num = 1;
    if (num != 0) s = add(s, LaurentSeries::monomial(Rational(num, den_dist(rng)), e, order));
  }
  return s;
}

}  // namespace

TEST_CASE("monomial and zero canonicalization") {
  auto one = LaurentSeries::monomial(1, 0, 10);
  CHECK(one.offset() == 0);
  CHECK(one.coeff_at(0) == 1);
  CHECK(one.coeff_at(10) == 0);

  auto neg = LaurentSeries::monomial(-1, -1, 5);
  CHECK(neg.offset() == -1);
  CHECK(neg.coeff_at(-1) == -1);

  auto beyond = LaurentSeries::monomial(Rational(3, 2), 7, 5);
  CHECK(beyond.is_zero());
  CHECK(beyond.order() == 5);
}

TEST_CASE("add and cancellation") {
  auto s = add(LaurentSeries::binomial(1, 10), LaurentSeries::monomial(1, 1, 10));
  CHECK(equal_to_order(s, LaurentSeries::one(10), 10));

  auto z = add(LaurentSeries::monomial(1, -1, 5), LaurentSeries::monomial(-1, -1, 5));
  CHECK(z.is_zero());

  std::mt19937 rng(7);
  auto t = random_series(rng);
  CHECK(equal_to_order(add(t, LaurentSeries::zero(60)), t, 60));
}

TEST_CASE("mul basics") {
  auto a = LaurentSeries::binomial(1, 20);                                   // 1 - q
  auto b = add(LaurentSeries::one(20), LaurentSeries::monomial(1, 1, 20));   // 1 + q
  auto p = mul(a, b);
  CHECK(p.coeff_at(0) == 1);
  CHECK(p.coeff_at(1) == 0);
  CHECK(p.coeff_at(2) == -1);

  auto inv_off = mul(LaurentSeries::monomial(1, -1, 5), LaurentSeries::monomial(1, 1, 5));
  CHECK(equal_to_order(inv_off, LaurentSeries::one(4), 4));

  auto geo = invert(LaurentSeries::binomial(1, 30));
  CHECK(equal_to_order(mul(LaurentSeries::binomial(1, 30), geo), LaurentSeries::one(30), 30));
}

TEST_CASE("invert of 1 - q^(-1) is forced to -q - q^2 - ...") {
  auto s = invert(add(LaurentSeries::one(10), LaurentSeries::monomial(-1, -1, 10)));
  CHECK(s.offset() == 1);
  for (long e = 1; e <= s.order(); ++e) CHECK(s.coeff_at(e) == -1);
  CHECK_THROWS_AS(invert(LaurentSeries::zero(5)), std::domain_error);
}

TEST_CASE("coeff_at refuses unknown coefficients") {
  auto s = LaurentSeries::binomial(2, 10);
  CHECK(s.coeff_at(2) == -1);
  CHECK(s.coeff_at(1) == 0);
  CHECK_THROWS_AS(s.coeff_at(11), std::out_of_range);
}

TEST_CASE("first_mismatch window semantics") {
  auto one = LaurentSeries::one(10);
  auto bumped = add(LaurentSeries::one(10), LaurentSeries::monomial(1, 5, 10));
  CHECK(equal_to_order(one, bumped, 4));
  auto mm = first_mismatch(one, bumped, 5);
  REQUIRE(mm.has_value());
  CHECK(mm->exponent == 5);
  CHECK(mm->lhs == 0);
  CHECK(mm->rhs == 1);
  CHECK_THROWS_AS(equal_to_order(one, bumped, 11), std::invalid_argument);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 220; ++trial) {
    auto a = random_series(rng);
    auto b = random_series(rng);
    auto c = random_series(rng);

    long add_ord = 60;
    CHECK(equal_to_order(add(add(a, b), c), add(a, add(b, c)), add_ord));
    CHECK(equal_to_order(add(a, b), add(b, a), add_ord));

    auto ab = mul(a, b);
    auto ba = mul(b, a);
    long mul_ord = std::min(ab.order(), ba.order());
    CHECK(equal_to_order(ab, ba, mul_ord));

    auto lhs = mul(a, add(b, c));
    auto rhs = add(mul(a, b), mul(a, c));
    CHECK(equal_to_order(lhs, rhs, std::min(lhs.order(), rhs.order())));

    auto abc1 = mul(mul(a, b), c);
    auto abc2 = mul(a, mul(b, c));
    CHECK(equal_to_order(abc1, abc2, std::min(abc1.order(), abc2.order())));
  }
}

TEST_CASE("inverse laws on random series") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_series(rng);
    auto inv = invert(a);
    auto prod = mul(a, inv);
    CHECK(equal_to_order(prod, LaurentSeries::one(prod.order()), prod.order()));

    auto b = random_series(rng);
    auto back = div(mul(a, b), b);
    CHECK(equal_to_order(back, a.truncated(back.order()), back.order()));
  }
}

TEST_CASE("scale, negate, truncated") {
  std::mt19937 rng(5);
  auto a = random_series(rng);
  CHECK(equal_to_order(add(a, negate(a)), LaurentSeries::zero(60), 60));
  CHECK(equal_to_order(scale(a, Rational(2)), add(a, a), 60));
  auto t = a.truncated(30);
  CHECK(t.order() == 30);
  CHECK(equal_to_order(t, a, 30));
}
