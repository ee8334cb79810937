#include <random>
#include <vector>

#include "doctest.h"
#include "qlab/qproducts.hpp"

using namespace qlab;

namespace {

// Minimal independent integer-polynomial oracle: dense vectors over long long,
// no LaurentSeries involvement. Only nonnegative exponents.
using Poly = std::vector<long long>;

Poly poly_mul(const Poly& a, const Poly& b, long order) {
  Poly c(order + 1, 0);
  for (long i = 0; i <= order && i < static_cast<long>(a.size()); ++i)
    if (a[i])
      for (long j = 0; i + j <= order && j < static_cast<long>(b.size()); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Poly poly_binom(long e, long order) {
  Poly p(order + 1, 0);
  p[0] = 1;
  if (e <= order) p[e] -= 1;
  return p;
}

Poly poly_poch_inf(long start, long step, long order) {
  Poly p(order + 1, 0);
  p[0] = 1;
  for (long e = start; e <= order; e += step) p = poly_mul(p, poly_binom(e, order), order);
  return p;
}

}  // namespace

TEST_CASE("poch_finite basics") {
  CHECK(equal_to_order(poch_finite(2, 2, 0, 10), LaurentSeries::one(10), 10));

  auto s = poch_finite(2, 2, 2, 10);  // (1-q^2)(1-q^4)
  CHECK(s.coeff_at(0) == 1);
  CHECK(s.coeff_at(2) == -1);
  CHECK(s.coeff_at(4) == -1);
  CHECK(s.coeff_at(6) == 1);
  CHECK(s.coeff_at(8) == 0);

  auto neg = poch_finite(-1, 2, 2, 10);  // (1-q^-1)(1-q) = 2 - q^-1 - q
  CHECK(neg.offset() == -1);
  CHECK(neg.coeff_at(-1) == -1);
  CHECK(neg.coeff_at(0) == 2);
  CHECK(neg.coeff_at(1) == -1);
  CHECK(neg.coeff_at(2) == 0);
}

TEST_CASE("poch_infinite against the independent polynomial oracle") {
  for (auto [start, step] : {std::pair<long, long>{2, 2}, {1, 1}, {1, 2}, {3, 2}, {5, 3}}) {
    long order = 48;
    auto s = poch_infinite(start, step, order);
    Poly p = poly_poch_inf(start, step, order);
    for (long e = 0; e <= order; ++e)
      CHECK(s.coeff_at(e) == Rational(static_cast<long>(p[e])));
  }
  // Euler product opening: 1 - q - q^2 + q^5 + q^7 - q^12 - ...
  auto euler = poch_infinite(1, 1, 15);
  CHECK(euler.coeff_at(1) == -1);
  CHECK(euler.coeff_at(2) == -1);
  CHECK(euler.coeff_at(3) == 0);
  CHECK(euler.coeff_at(5) == 1);
  CHECK(euler.coeff_at(7) == 1);
  CHECK(euler.coeff_at(12) == -1);
  // factors entirely beyond truncation
  CHECK(equal_to_order(poch_infinite(21, 1, 20), LaurentSeries::one(20), 20));
}

TEST_CASE("partition generating function via inverted Euler product") {
  auto p = invert(poch_infinite(1, 1, 20));
  const long pn[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
  for (long e = 0; e <= 20; ++e) CHECK(p.coeff_at(e) == pn[e]);
}

TEST_CASE("poch_quotient") {
  auto one = poch_quotient({}, {}, 10);
  CHECK(equal_to_order(one, LaurentSeries::one(10), 10));

  auto cancel = poch_quotient({inf_poch(-1, 2)}, {inf_poch(-1, 2)}, 12);
  CHECK(equal_to_order(cancel, LaurentSeries::one(12), 12));

  auto theta = poch_quotient({inf_poch(2, 2), inf_poch(2, 2)}, {inf_poch(1, 2), inf_poch(1, 2)}, 10);
  const long expected[] = {1, 2, 1, 2, 2, 0, 3, 2, 0, 2, 2};
  for (long e = 0; e <= 10; ++e) CHECK(theta.coeff_at(e) == expected[e]);
}

TEST_CASE("splitting and tail laws, randomized") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long> start_dist(-5, 8), step_dist(1, 4), len_dist(0, 5),
      ord_dist(10, 40);
  for (int trial = 0; trial < 100; ++trial) {
    long start = start_dist(rng), step = step_dist(rng);
    long m = len_dist(rng), n = len_dist(rng), ord = ord_dist(rng);
    long work = ord + 64;
    auto split_lhs = poch_finite(start, step, n + m, work);
    auto split_rhs =
        mul(poch_finite(start, step, m, work), poch_finite(start + m * step, step, n, work));
    CHECK(equal_to_order(split_lhs, split_rhs, ord));

    auto tail_lhs = poch_infinite(start, step, work);
    auto tail_rhs =
        mul(poch_finite(start, step, n, work), poch_infinite(start + n * step, step, work));
    CHECK(equal_to_order(tail_lhs, tail_rhs, ord));
  }
}
