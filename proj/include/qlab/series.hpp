#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qlab {

// Exact arbitrary-precision rational coefficient type.
using Rational = mpq_class;

std::string to_string(const Rational& r);

/// Truncated formal Laurent series with exact rational coefficients.
///
/// A series stores the coefficients of q^e for e in [offset, order]; nothing
/// above `order` is ever claimed, everything below `offset` is zero. The
/// canonical zero series has empty storage and offset == order + 1. A nonzero
/// series always has a nonzero coefficient at its offset.
class LaurentSeries {
 public:
  static LaurentSeries zero(long order);
  static LaurentSeries monomial(const Rational& c, long e, long order);
  static LaurentSeries one(long order);
  /// 1 - q^e (the ubiquitous Pochhammer factor; e may be negative, e == 0
  /// gives the zero series).
  static LaurentSeries binomial(long e, long order);

  long offset() const { return offset_; }
  long order() const { return order_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of q^e. Throws std::out_of_range if e > order: that
  /// coefficient is unknown, never silently zero.
  const Rational& coeff_at(long e) const;

  /// True when every stored coefficient has denominator 1.
  bool is_integral() const;

  /// Same series with the truncation order lowered to new_order.
  LaurentSeries truncated(long new_order) const;

  std::string to_string(std::size_t max_terms = 16) const;

  std::size_t nonzero_count() const;

  friend LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries div(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries scale(const LaurentSeries& a, const Rational& c);
  friend LaurentSeries negate(const LaurentSeries& a);

 private:
  LaurentSeries(long offset, long order, std::vector<Rational> coeffs);
  void normalize();

  long offset_;
  long order_;
  std::vector<Rational> coeffs_;  // coeffs_[i] holds the coefficient of q^(offset_+i)
};

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b);

// Cauchy product. The result order is min(a.order + b.offset,
// b.order + a.offset): exactly the window determined by the operands'
// known coefficients (for offset-0 operands this is min(a.order, b.order)).
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);

// Long division; throws std::domain_error on a zero divisor.
LaurentSeries div(const LaurentSeries& a, const LaurentSeries& b);

// Multiplicative inverse, exact to order a.order - 2*a.offset.
LaurentSeries invert(const LaurentSeries& a);

LaurentSeries scale(const LaurentSeries& a, const Rational& c);
LaurentSeries negate(const LaurentSeries& a);

inline LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return sub(a, b); }
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, b); }
inline LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return div(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a) { return negate(a); }

struct Mismatch {
  long exponent;
  Rational lhs;
  Rational rhs;
};

/// Compares all coefficients of exponent <= order. Throws std::invalid_argument
/// when order exceeds either operand's truncation order. Returns the smallest
/// mismatching exponent with both coefficients, or nullopt on agreement.
std::optional<Mismatch> first_mismatch(const LaurentSeries& a, const LaurentSeries& b, long order);

bool equal_to_order(const LaurentSeries& a, const LaurentSeries& b, long order);

namespace detail {
// Asserts s is exact at least to `order` (internal truncation-bookkeeping
// check) and returns s truncated there.
LaurentSeries exact_to(const LaurentSeries& s, long order);
}  // namespace detail

}  // namespace qlab
