#include "qlab/closedforms.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

#include "qlab/qproducts.hpp"

namespace qlab {

namespace {

// numerator polynomial (exponent, coefficient pairs) over a product of
// (1 - q^e) denominator factors.
LaurentSeries rat(const std::vector<std::pair<long, long>>& numerator,
                  const std::vector<long>& denominator_factors, long order) {
  LaurentSeries s = LaurentSeries::zero(order);
  for (const auto& [e, c] : numerator)
    s = add(s, LaurentSeries::monomial(c, e, order));
  for (long e : denominator_factors) s = div(s, LaurentSeries::binomial(e, order));
  return s;
}

// Guarded-cutoff sum over n >= 0: terms are summed while valuation_lb(n)
// stays within order, and the first discarded term is checked to vanish
// up to order.
LaurentSeries guarded_sum(long order, const std::function<long(long)>& valuation_lb,
                          const std::function<LaurentSeries(long)>& term_at) {
  LaurentSeries sum = LaurentSeries::zero(order);
  long n = 0;
  for (; valuation_lb(n) <= order; ++n) sum = add(sum, term_at(n));
  LaurentSeries next = term_at(n);
  if (!next.is_zero() && next.offset() <= order)
    throw std::logic_error("closed_form: cutoff bound violated");
  return sum;
}

LaurentSeries theta(long order) {
  return poch_quotient({inf_poch(2, 2), inf_poch(2, 2)}, {inf_poch(1, 2), inf_poch(1, 2)}, order);
}

// q^n (q^(2n+2); q^2)_inf / (q^(2n+3); q^2)_inf summed over n; shared by the
// help-id-1 and help-2-double-1 builders.
LaurentSeries infinite_quotient_sum(long order) {
  return guarded_sum(
      order, [](long n) { return n; },
      [order](long n) {
        return mul(LaurentSeries::monomial(1, n, order),
                   poch_quotient({inf_poch(2 * n + 2, 2)}, {inf_poch(2 * n + 3, 2)}, order));
      });
}

long require_m(const ClosedFormId& id, long min_m) {
  if (!id.m) throw std::invalid_argument("closed_form: tag requires parameter m");
  if (*id.m < min_m)
    throw std::invalid_argument("closed_form: m must be >= " + std::to_string(min_m));
  return *id.m;
}

}  // namespace

bool closed_form_takes_m(ClosedFormTag tag) {
  switch (tag) {
    case ClosedFormTag::A2M:
    case ClosedFormTag::APrime1:
    case ClosedFormTag::APrime2:
    case ClosedFormTag::B2M:
    case ClosedFormTag::BPrime:
      return true;
    default:
      return false;
  }
}

std::string closed_form_name(ClosedFormTag tag) {
  switch (tag) {
    case ClosedFormTag::ThmF1: return "thm-f1";
    case ClosedFormTag::ThmF2: return "thm-f2";
    case ClosedFormTag::ThmG: return "thm-g";
    case ClosedFormTag::A2: return "a2";
    case ClosedFormTag::A2M: return "a2m";
    case ClosedFormTag::APrime1: return "aprime1";
    case ClosedFormTag::APrime2: return "aprime2";
    case ClosedFormTag::B2: return "b2";
    case ClosedFormTag::B2M: return "b2m";
    case ClosedFormTag::BPrime: return "bprime-sum";
    case ClosedFormTag::HelpId1: return "help-id-1";
    case ClosedFormTag::Help2Double1: return "help-2-double-1";
    case ClosedFormTag::Theta: return "theta";
    case ClosedFormTag::BoundF1: return "bound-f1";
    case ClosedFormTag::BoundF2: return "bound-f2";
    case ClosedFormTag::BoundG: return "bound-g";
  }
  return "?";
}

const std::vector<ClosedFormTag>& all_closed_form_tags() {
  static const std::vector<ClosedFormTag> tags = {
      ClosedFormTag::ThmF1,   ClosedFormTag::ThmF2,        ClosedFormTag::ThmG,
      ClosedFormTag::A2,      ClosedFormTag::A2M,          ClosedFormTag::APrime1,
      ClosedFormTag::APrime2, ClosedFormTag::B2,           ClosedFormTag::B2M,
      ClosedFormTag::BPrime,  ClosedFormTag::HelpId1,      ClosedFormTag::Help2Double1,
      ClosedFormTag::Theta,   ClosedFormTag::BoundF1,      ClosedFormTag::BoundF2,
      ClosedFormTag::BoundG};
  return tags;
}

std::optional<ClosedFormTag> closed_form_from_name(const std::string& name) {
  for (ClosedFormTag tag : all_closed_form_tags())
    if (closed_form_name(tag) == name) return tag;
  return std::nullopt;
}

LaurentSeries closed_form(const ClosedFormId& id, long order) {
  if (order < 0) throw std::invalid_argument("closed_form: negative order");
  switch (id.tag) {
    case ClosedFormTag::Theta:
      return theta(order);

    case ClosedFormTag::ThmF1:
      // Theta / (1-q^2) - (1+q^2)/((1-q)(1-q^3))
      return sub(div(theta(order), LaurentSeries::binomial(2, order)),
                 rat({{0, 1}, {2, 1}}, {1, 3}, order));

    case ClosedFormTag::ThmF2:
      // q(1-q^3)/((1-q)(1-q^2)) * Theta - q(1+q^2)/(1-q)^2
      return sub(mul(rat({{1, 1}, {4, -1}}, {1, 2}, order), theta(order)),
                 rat({{1, 1}, {3, 1}}, {1, 1}, order));

    case ClosedFormTag::ThmG:
      // q^3/((1+q)(1-q^3)) * Theta - q^2(1-q)(-1+q^3+q^4+q^5)/((1-q^3)^2(1-q^5))
      // with 1/(1+q) written as (1-q)/(1-q^2); the second numerator expands to
      // -q^2 + q^3 + q^5 - q^8.
      return sub(mul(rat({{3, 1}, {4, -1}}, {2, 3}, order), theta(order)),
                 rat({{2, -1}, {3, 1}, {5, 1}, {8, -1}}, {3, 3, 5}, order));

    case ClosedFormTag::A2:
      return rat({{1, -1}, {3, -1}}, {1, 1, 3}, order);

    case ClosedFormTag::A2M: {
      long m = require_m(id, 2);
      LaurentSeries s = guarded_sum(
          order, [](long n) { return n + 1; },
          [&](long n) {
            return div(mul(LaurentSeries::monomial(1, n + 1, order),
                           poch_finite(2 * n + 2, 2, m - 1, order)),
                       poch_finite(2 * n + 3, 2, m - 2, order));
          });
      return negate(div(div(s, LaurentSeries::binomial(1, order)),
                        LaurentSeries::binomial(1, order)));
    }

    case ClosedFormTag::APrime1: {
      long m = require_m(id, 1);
      LaurentSeries s = guarded_sum(
          order, [&](long n) { return n + 2 * m; },
          [&](long n) {
            return div(mul(LaurentSeries::monomial(1, n + 2 * m, order),
                           poch_finite(2 * n + 2, 2, m - 1, order)),
                       poch_finite(2 * n + 5, 2, m - 1, order));
          });
      return div(s, LaurentSeries::binomial(3, order));
    }

    case ClosedFormTag::APrime2: {
      long m = require_m(id, 1);
      LaurentSeries s = guarded_sum(
          order, [&](long n) { return 3 * n + 2 * m; },
          [&](long n) {
            return div(mul(LaurentSeries::monomial(1, 3 * n + 2 * m, order),
                           poch_finite(2 * n + 2, 2, m - 1, order)),
                       poch_finite(2 * n + 3, 2, m - 1, order));
          });
      return div(s, LaurentSeries::binomial(1, order));
    }

    case ClosedFormTag::B2:
      // -q^3(1-q^3-q^4-q^5)/((1-q^3)^2(1-q^5)) = (-q^3+q^6+q^7+q^8)/(...)
      return rat({{3, -1}, {6, 1}, {7, 1}, {8, 1}}, {3, 3, 5}, order);

    case ClosedFormTag::B2M: {
      long m = require_m(id, 2);
      LaurentSeries s = guarded_sum(
          order, [](long n) { return 3 * n + 4; },
          [&](long n) {
            return div(mul(LaurentSeries::monomial(1, 3 * n + 4, order),
                           poch_finite(2 * n + 2, 2, m - 1, order)),
                       poch_finite(2 * n + 1, 2, m - 2, order));
          });
      return div(div(s, LaurentSeries::binomial(1, order)),
                 LaurentSeries::binomial(3, order));
    }

    case ClosedFormTag::BPrime: {
      long m = require_m(id, 1);
      LaurentSeries s = guarded_sum(
          order, [&](long n) { return 5 * n + 2 * m + 1; },
          [&](long n) {
            return div(mul(LaurentSeries::monomial(1, 5 * n + 2 * m + 1, order),
                           poch_finite(2 * n + 2, 2, m - 1, order)),
                       poch_finite(2 * n + 1, 2, m - 1, order));
          });
      return negate(div(s, LaurentSeries::binomial(1, order)));
    }

    case ClosedFormTag::HelpId1:
      // -q/(1-q)^2 * sum_n q^n (q^(2n+2);q^2)inf / (q^(2n+3);q^2)inf
      return negate(mul(rat({{1, 1}}, {1, 1}, order), infinite_quotient_sum(order)));

    case ClosedFormTag::Help2Double1:
      return infinite_quotient_sum(order);

    case ClosedFormTag::BoundF1:
      return rat({{1, 1}, {3, 1}}, {3}, order);

    case ClosedFormTag::BoundF2:
      // q(1+q+q^2) + q^5(1+q)/(1-q^3)
      return add(rat({{1, 1}, {2, 1}, {3, 1}}, {}, order), rat({{5, 1}, {6, 1}}, {3}, order));

    case ClosedFormTag::BoundG:
      return rat({{2, 1}}, {5}, order);
  }
  throw std::invalid_argument("closed_form: unknown tag");
}

}  // namespace qlab
