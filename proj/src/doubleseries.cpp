#include "qlab/doubleseries.hpp"

#include <stdexcept>

#include "qlab/qproducts.hpp"

namespace qlab {

namespace {

struct DoubleSeriesShape {
  long denom_start;  // D in (q^(2n+D); q^2)_k
  long n_coef;       // coefficient of n in the valuation
  long base;         // constant in the valuation
};

DoubleSeriesShape shape_of(SeriesId id) {
  switch (id) {
    case SeriesId::F1: return {3, 3, 1};
    case SeriesId::F2: return {5, 1, 2};
    case SeriesId::G: return {1, 5, 2};
  }
  throw std::invalid_argument("unknown SeriesId");
}

}  // namespace

std::string series_name(SeriesId id) {
  switch (id) {
    case SeriesId::F1: return "f1";
    case SeriesId::F2: return "f2";
    case SeriesId::G: return "g";
  }
  return "?";
}

LaurentSeries double_series(SeriesId id, long order) {
  if (order < 0) throw std::invalid_argument("double_series: negative order");
  const DoubleSeriesShape s = shape_of(id);
  LaurentSeries sum = LaurentSeries::zero(order);
  for (long n = 0; s.n_coef * n + s.base <= order; ++n) {
    // Incremental over k: term(k+1) = term(k) * (1-q^(2n+2+2k)) * q^2 / (1-q^(2n+D+2k)).
    LaurentSeries term = LaurentSeries::monomial(1, s.n_coef * n + s.base, order);
    for (long k = 0; 2 * k + s.n_coef * n + s.base <= order; ++k) {
      sum = add(sum, term);
      term = mul(term, LaurentSeries::binomial(2 * n + 2 + 2 * k, order));
      term = mul(term, LaurentSeries::monomial(1, 2, order));
      term = div(term, LaurentSeries::binomial(2 * n + s.denom_start + 2 * k, order));
      term = term.truncated(order);
    }
  }
  return sum;
}

LaurentSeries family_series(FamilyId id, long order) {
  if (id.m < 1) throw std::invalid_argument("family_series: m must be >= 1");
  if (order < 0) throw std::invalid_argument("family_series: negative order");
  const long m = id.m;
  auto term_at = [&](long n) {
    long pref;
    std::vector<PochhammerSpec> num, den;
    switch (id.family) {
      case Family::A:
        pref = m * n;
        num = {inf_poch(2 * n + 2, 2), inf_poch(2 * n + 4, 2)};
        den = {inf_poch(2 * n - 1, 2), inf_poch(2 * n + 1, 2)};
        break;
      case Family::APrime:
        pref = m * (n + 1);
        num = {inf_poch(2 * n + 2, 2), inf_poch(2 * n + 6, 2)};
        den = {inf_poch(2 * n + 1, 2), inf_poch(2 * n + 3, 2)};
        break;
      case Family::B:
        pref = m * n;
        num = {inf_poch(2 * n + 2, 2), inf_poch(2 * n + 4, 2)};
        den = {inf_poch(2 * n - 3, 2), inf_poch(2 * n + 3, 2)};
        break;
      case Family::BPrime:
        pref = m * (n + 1);
        num = {inf_poch(2 * n + 2, 2), inf_poch(2 * n + 6, 2)};
        den = {inf_poch(2 * n - 1, 2), inf_poch(2 * n + 5, 2)};
        break;
      default:
        throw std::invalid_argument("unknown family");
    }
    return mul(LaurentSeries::monomial(1, pref, order),
               poch_quotient(num, den, order));
  };
  auto valuation_lb = [&](long n) {
    return (id.family == Family::A || id.family == Family::B) ? m * n : m * (n + 1);
  };
  LaurentSeries sum = LaurentSeries::zero(order);
  long n = 0;
  for (; valuation_lb(n) <= order; ++n) sum = add(sum, term_at(n));
  // Guarded cutoff: the first discarded term must vanish up to `order`.
  LaurentSeries next = term_at(n);
  if (!next.is_zero() && next.offset() <= order)
    throw std::logic_error("family_series: cutoff bound violated");
  return sum;
}

}  // namespace qlab
