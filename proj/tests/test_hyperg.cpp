#include <stdexcept>

#include "doctest.h"
#include "qlab/hyperg.hpp"

using namespace qlab;

TEST_CASE("phi21 degenerate and frozen openings") {
  // a = 1 makes every n >= 1 term vanish
  auto one = phi21_truncated({0, 1, 4, 2, 2}, 20);
  CHECK(equal_to_order(one, LaurentSeries::one(20), 20));

  // (q^-1, q; q^4; q^2, q^2): 1 - q + 2q^2 + ...
  auto s = phi21_truncated({-1, 1, 4, 2, 2}, 2);
  CHECK(s.coeff_at(0) == 1);
  CHECK(s.coeff_at(1) == -1);
  CHECK(s.coeff_at(2) == 2);

  // argument beyond the truncation order: only the n = 0 term survives
  auto trivial = phi21_truncated({3, 1, 6, 2, 25}, 20);
  CHECK(equal_to_order(trivial, LaurentSeries::one(20), 20));
}

TEST_CASE("phi21 cutoff is stable under extra terms") {
  Phi21Params p{-3, 3, 4, 2, 2};
  auto base = phi21_truncated(p, 40);
  auto padded = phi21_truncated(p, 40, 5);
  CHECK(equal_to_order(base, padded, 40));
}

TEST_CASE("phi21 parameter validation") {
  CHECK_THROWS_AS(phi21_truncated({1, 1, 4, 2, 0}, 10), std::invalid_argument);   // z_exp < 1
  CHECK_THROWS_AS(phi21_truncated({1, 1, 0, 2, 2}, 10), std::invalid_argument);   // c hits 1
  CHECK_THROWS_AS(phi21_truncated({1, 1, -4, 2, 2}, 10), std::invalid_argument);  // c*Q^2 hits 1
}

TEST_CASE("heine instances") {
  auto [l1, r1] = heine_instance(1, {3, 1, 6, 2, 4}, 40);
  CHECK(equal_to_order(l1, r1, 40));

  auto [l2, r2] = heine_instance(2, {-1, 1, 4, 2, 2}, 40);
  CHECK(equal_to_order(l2, r2, 40));

  auto [l3, r3] = heine_instance(1, {0, 1, 6, 2, 2}, 20);
  CHECK(equal_to_order(l3, LaurentSeries::one(20), 20));
  CHECK(equal_to_order(r3, LaurentSeries::one(20), 20));

  CHECK_THROWS_AS(heine_instance(3, {3, 1, 6, 2, 4}, 10), std::invalid_argument);
}

TEST_CASE("q-binomial instances") {
  auto [l1, r1] = qbinomial_instance(3, 1, 2, 30);
  CHECK(equal_to_order(l1, r1, 30));

  auto [l2, r2] = qbinomial_instance(0, 2, 2, 30);  // a = 1 degenerates both sides to 1
  CHECK(equal_to_order(l2, r2, 30));
  CHECK(equal_to_order(l2, LaurentSeries::one(30), 30));

  auto [l3, r3] = qbinomial_instance(-2, 5, 2, 30);  // terminating: (q^-2;q^2)_n = 0 for n >= 2
  CHECK(equal_to_order(l3, r3, 30));
}

TEST_CASE("contiguous relation instances") {
  auto [l1, r1] = contiguous_instance({-1, 1, 4, 2, 2}, 40);
  CHECK(equal_to_order(l1, r1, 40));

  auto [l2, r2] = contiguous_instance({-3, 3, 4, 2, 2}, 40);
  CHECK(equal_to_order(l2, r2, 40));

  auto [l3, r3] = contiguous_instance({0, 1, 4, 2, 2}, 20);  // (1-a) = 0: both sides vanish
  CHECK(equal_to_order(l3, LaurentSeries::zero(20), 20));
  CHECK(equal_to_order(r3, LaurentSeries::zero(20), 20));
}

TEST_CASE("lambert_theta opening") {
  auto s = lambert_theta(10);
  const long expected[] = {1, 2, 1, 2, 2, 0, 3, 2, 0, 2, 2};
  for (long e = 0; e <= 10; ++e) CHECK(s.coeff_at(e) == expected[e]);
}
