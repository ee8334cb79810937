#include "qlab/qproducts.hpp"

#include <stdexcept>

namespace qlab {

namespace {

void validate(const PochhammerSpec& spec) {
  if (spec.step < 1) throw std::invalid_argument("PochhammerSpec: step must be >= 1");
  if (spec.length && *spec.length < 0)
    throw std::invalid_argument("PochhammerSpec: negative length");
}

// Sum of the negative exponents among start + j*step (finite because step >= 1,
// bounded by the finite length when present). Zero or negative.
long negative_exponent_sum(const PochhammerSpec& spec) {
  long sum = 0;
  long e = spec.start_exp;
  long j = 0;
  while (e < 0 && (!spec.length || j < *spec.length)) {
    sum += e;
    e += spec.step;
    ++j;
  }
  return sum;
}

// Product of the spec's factors, computed at working order K. Each factor is
// a binomial built at order K, so the min-order contract leaves the result
// exact to at least K + 2 * (sum of negative factor exponents).
LaurentSeries product_at(const PochhammerSpec& spec, long K) {
  LaurentSeries p = LaurentSeries::one(K);
  long e = spec.start_exp;
  long j = 0;
  while ((!spec.length || j < *spec.length) && (spec.length || e <= K)) {
    p = mul(p, LaurentSeries::binomial(e, K));
    if (p.is_zero() && !spec.length) break;  // a vanishing factor kills the product
    e += spec.step;
    ++j;
  }
  return p;
}

}  // namespace

LaurentSeries poch_series(const PochhammerSpec& spec, long order) {
  validate(spec);
  long neg = negative_exponent_sum(spec);
  long K = order - 2 * neg;
  return detail::exact_to(product_at(spec, K), order);
}

LaurentSeries poch_finite(long start_exp, long step, long n, long order) {
  return poch_series(fin_poch(start_exp, step, n), order);
}

LaurentSeries poch_infinite(long start_exp, long step, long order) {
  return poch_series(inf_poch(start_exp, step), order);
}

LaurentSeries poch_quotient(const std::vector<PochhammerSpec>& numerators,
                            const std::vector<PochhammerSpec>& denominators,
                            long order) {
  long neg_num = 0, neg_den = 0;
  for (const auto& spec : numerators) {
    validate(spec);
    neg_num += negative_exponent_sum(spec);
  }
  for (const auto& spec : denominators) {
    validate(spec);
    neg_den += negative_exponent_sum(spec);
  }
  // Generous working order; exact_to at the end certifies it sufficed.
  long K = order - 2 * neg_num - 2 * neg_den;
  LaurentSeries num = LaurentSeries::one(K);
  for (const auto& spec : numerators) num = mul(num, product_at(spec, K));
  LaurentSeries den = LaurentSeries::one(K);
  for (const auto& spec : denominators) den = mul(den, product_at(spec, K));
  return detail::exact_to(div(num, den), order);
}

}  // namespace qlab
