#include "qlab/hyperg.hpp"

#include <stdexcept>

#include "qlab/qproducts.hpp"

namespace qlab {

namespace {

// Sum of the negative exponents among e + j*step, j >= 0 (finite; zero when
// e >= 0). This is how far a Pochhammer numerator can push valuations down.
long cneg(long e, long step) {
  long sum = 0;
  while (e < 0) {
    sum += e;
    e += step;
  }
  return sum;
}

}  // namespace

void validate_phi21(const Phi21Params& p) {
  if (p.step < 1) throw std::invalid_argument("phi21: step must be >= 1");
  if (p.z_exp < 1) throw std::invalid_argument("phi21: argument exponent must be >= 1");
  // (c;Q)_n must never contain a vanishing factor 1 - q^0.
  if (p.c_exp <= 0 && p.c_exp % p.step == 0)
    throw std::invalid_argument("phi21: denominator parameter hits q^0");
}

LaurentSeries phi21_truncated(const Phi21Params& p, long order, long extra_terms) {
  validate_phi21(p);
  long neg = cneg(p.a_exp, p.step) + cneg(p.b_exp, p.step);
  long K = order - 4 * neg + 2;
  LaurentSeries term = LaurentSeries::one(K);
  LaurentSeries sum = LaurentSeries::zero(K);
  long n = 0;
  long extra = extra_terms;
  while (true) {
    bool within = n * p.z_exp + neg <= order;
    if (!within && extra == 0) {
      // Guard against an off-by-one in the valuation bound: the first
      // discarded term must lie entirely beyond the reported order.
      if (!term.is_zero() && term.offset() <= order)
        throw std::logic_error("phi21: cutoff bound violated");
      break;
    }
    if (!within) --extra;
    sum = add(sum, term);
    term = mul(term, LaurentSeries::binomial(p.a_exp + n * p.step, K));
    term = mul(term, LaurentSeries::binomial(p.b_exp + n * p.step, K));
    term = mul(term, LaurentSeries::monomial(1, p.z_exp, K));
    term = div(term, LaurentSeries::binomial((n + 1) * p.step, K));
    term = div(term, LaurentSeries::binomial(p.c_exp + n * p.step, K));
    ++n;
  }
  return detail::exact_to(sum, order);
}

std::pair<LaurentSeries, LaurentSeries> heine_instance(int kind, const Phi21Params& p,
                                                       long order) {
  validate_phi21(p);
  if (kind != 1 && kind != 2) throw std::invalid_argument("heine_instance: kind must be 1 or 2");
  Phi21Params t{};
  std::vector<PochhammerSpec> num, den;
  if (kind == 1) {
    // phi(a,b;c;z) = (b, az; Q)inf / (c, z; Q)inf * phi(c/b, z; az; Q, b)
    num = {inf_poch(p.b_exp, p.step), inf_poch(p.a_exp + p.z_exp, p.step)};
    den = {inf_poch(p.c_exp, p.step), inf_poch(p.z_exp, p.step)};
    t = Phi21Params{p.c_exp - p.b_exp, p.z_exp, p.a_exp + p.z_exp, p.step, p.b_exp};
  } else {
    // phi(a,b;c;z) = (c/b, bz; Q)inf / (c, z; Q)inf * phi(abz/c, b; bz; Q, c/b)
    num = {inf_poch(p.c_exp - p.b_exp, p.step), inf_poch(p.b_exp + p.z_exp, p.step)};
    den = {inf_poch(p.c_exp, p.step), inf_poch(p.z_exp, p.step)};
    t = Phi21Params{p.a_exp + p.b_exp + p.z_exp - p.c_exp, p.b_exp, p.b_exp + p.z_exp, p.step,
                    p.c_exp - p.b_exp};
  }
  try {
    validate_phi21(t);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("heine_instance: instance not verifiable in truncated model");
  }
  long K = order + 32;  // slack for negative-exponent prefactors; certified below
  LaurentSeries lhs = phi21_truncated(p, order);
  LaurentSeries rhs = mul(poch_quotient(num, den, K), phi21_truncated(t, K));
  return {lhs, detail::exact_to(rhs, order)};
}

std::pair<LaurentSeries, LaurentSeries> qbinomial_instance(long a_exp, long z_exp, long step,
                                                           long order) {
  if (step < 1 || z_exp < 1) throw std::invalid_argument("qbinomial: need step >= 1 and z_exp >= 1");
  long neg = cneg(a_exp, step);
  long K = order - 4 * neg + 2;
  LaurentSeries term = LaurentSeries::one(K);
  LaurentSeries sum = LaurentSeries::zero(K);
  long n = 0;
  while (n * z_exp + neg <= order) {
    sum = add(sum, term);
    term = mul(term, LaurentSeries::binomial(a_exp + n * step, K));
    term = mul(term, LaurentSeries::monomial(1, z_exp, K));
    term = div(term, LaurentSeries::binomial((n + 1) * step, K));
    ++n;
  }
  if (!term.is_zero() && term.offset() <= order)
    throw std::logic_error("qbinomial: cutoff bound violated");
  LaurentSeries rhs = poch_quotient({inf_poch(a_exp + z_exp, step)}, {inf_poch(z_exp, step)}, order);
  return {detail::exact_to(sum, order), rhs};
}

std::pair<LaurentSeries, LaurentSeries> contiguous_instance(const Phi21Params& p, long order) {
  validate_phi21(p);
  Phi21Params shifted_z = p;
  shifted_z.z_exp = p.z_exp + p.step;
  LaurentSeries lhs = sub(phi21_truncated(p, order), phi21_truncated(shifted_z, order));
  Phi21Params up{p.a_exp + p.step, p.b_exp + p.step, p.c_exp + p.step, p.step, p.z_exp};
  validate_phi21(up);
  long K = order + 8;
  LaurentSeries factor = LaurentSeries::monomial(1, p.z_exp, K);
  factor = mul(factor, LaurentSeries::binomial(p.a_exp, K));
  factor = mul(factor, LaurentSeries::binomial(p.b_exp, K));
  factor = div(factor, LaurentSeries::binomial(p.c_exp, K));
  LaurentSeries rhs = mul(factor, phi21_truncated(up, K));
  return {lhs, detail::exact_to(rhs, order)};
}

LaurentSeries lambert_theta(long order) {
  if (order < 0) throw std::invalid_argument("lambert_theta: negative order");
  LaurentSeries sum = LaurentSeries::zero(order);
  for (long n = 0; n <= order; ++n) {
    LaurentSeries pos = div(LaurentSeries::monomial(1, n, order),
                            LaurentSeries::binomial(4 * n + 1, order));
    sum = add(sum, pos);
    LaurentSeries neg = div(LaurentSeries::monomial(1, 3 * n + 2, order),
                            LaurentSeries::binomial(4 * n + 3, order));
    sum = sub(sum, neg);
  }
  return sum;
}

}  // namespace qlab
