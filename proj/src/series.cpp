#include "qlab/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qlab {

namespace {
const Rational kZero = 0;
}

std::string to_string(const Rational& r) { return r.get_str(); }

LaurentSeries::LaurentSeries(long offset, long order, std::vector<Rational> coeffs)
    : offset_(offset), order_(order), coeffs_(std::move(coeffs)) {
  normalize();
}

void LaurentSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    offset_ = order_ + 1;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    offset_ += static_cast<long>(lead);
  }
}

LaurentSeries LaurentSeries::zero(long order) { return LaurentSeries(order + 1, order, {}); }

LaurentSeries LaurentSeries::monomial(const Rational& c, long e, long order) {
  if (c == 0 || e > order) return zero(order);
  std::vector<Rational> coeffs(static_cast<std::size_t>(order - e + 1));
  coeffs[0] = c;
  // mpq_class(num, den) construction does not reduce to lowest terms;
  // everything downstream assumes canonical rationals.
  coeffs[0].canonicalize();
  return LaurentSeries(e, order, std::move(coeffs));
}

LaurentSeries LaurentSeries::one(long order) { return monomial(1, 0, order); }

LaurentSeries LaurentSeries::binomial(long e, long order) {
  if (e == 0) return zero(order);
  long off = std::min(0L, e);
  if (off > order) return zero(order);
  std::vector<Rational> coeffs(static_cast<std::size_t>(order - off + 1));
  coeffs[static_cast<std::size_t>(0 - off)] = 1;
  if (e <= order) coeffs[static_cast<std::size_t>(e - off)] = -1;
  return LaurentSeries(off, order, std::move(coeffs));
}

const Rational& LaurentSeries::coeff_at(long e) const {
  if (e > order_) throw std::out_of_range("coeff_at: exponent beyond truncation order");
  if (is_zero() || e < offset_) return kZero;
  return coeffs_[static_cast<std::size_t>(e - offset_)];
}

bool LaurentSeries::is_integral() const {
  for (const Rational& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

LaurentSeries LaurentSeries::truncated(long new_order) const {
  if (new_order > order_) throw std::logic_error("truncated: cannot extend truncation order");
  if (is_zero() || new_order < offset_) return zero(new_order);
  std::vector<Rational> coeffs(coeffs_.begin(),
                               coeffs_.begin() + (new_order - offset_ + 1));
  return LaurentSeries(offset_, new_order, std::move(coeffs));
}

std::size_t LaurentSeries::nonzero_count() const {
  std::size_t n = 0;
  for (const Rational& c : coeffs_)
    if (c != 0) ++n;
  return n;
}

std::string LaurentSeries::to_string(std::size_t max_terms) const {
  if (is_zero()) return "0 + O(q^" + std::to_string(order_ + 1) + ")";
  std::ostringstream out;
  std::size_t printed = 0;
  for (long e = offset_; e <= order_ && printed < max_terms; ++e) {
    const Rational& c = coeff_at(e);
    if (c == 0) continue;
    if (printed > 0) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    Rational a = abs(c);
    if (a != 1 || e == 0) out << a.get_str();
    if (e != 0) {
      if (a != 1) out << "*";
      out << "q";
      if (e != 1) out << "^" << e;
    }
    ++printed;
  }
  out << " + O(q^" << order_ + 1 << ")";
  return out.str();
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
  long ord = std::min(a.order_, b.order_);
  if (a.is_zero()) return b.truncated(ord);
  if (b.is_zero()) return a.truncated(ord);
  long off = std::min(a.offset_, b.offset_);
  if (off > ord) return LaurentSeries::zero(ord);
  std::vector<Rational> coeffs(static_cast<std::size_t>(ord - off + 1));
  for (long e = std::max(off, a.offset_); e <= std::min(ord, a.order_); ++e)
    coeffs[static_cast<std::size_t>(e - off)] = a.coeffs_[static_cast<std::size_t>(e - a.offset_)];
  for (long e = std::max(off, b.offset_); e <= std::min(ord, b.order_); ++e)
    coeffs[static_cast<std::size_t>(e - off)] += b.coeffs_[static_cast<std::size_t>(e - b.offset_)];
  return LaurentSeries(off, ord, std::move(coeffs));
}

LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b) { return add(a, negate(b)); }

LaurentSeries negate(const LaurentSeries& a) {
  LaurentSeries r = a;
  for (Rational& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries scale(const LaurentSeries& a, const Rational& c) {
  if (c == 0) return LaurentSeries::zero(a.order());
  Rational factor = c;
  factor.canonicalize();  // see monomial
  LaurentSeries r = a;
  for (Rational& x : r.coeffs_) x *= factor;
  return r;
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(std::min(a.order_, b.order_));
  long off = a.offset_ + b.offset_;
  long ord = std::min(a.order_ + b.offset_, b.order_ + a.offset_);
  if (ord < off) return LaurentSeries::zero(ord);
  std::vector<Rational> coeffs(static_cast<std::size_t>(ord - off + 1));
  // Iterate the sparser operand on the outside; its zero coefficients cost
  // nothing (Pochhammer factors are mostly binomials).
  const LaurentSeries& s = a.nonzero_count() <= b.nonzero_count() ? a : b;
  const LaurentSeries& d = (&s == &a) ? b : a;
  Rational tmp;
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
    const Rational& x = s.coeffs_[i];
    if (x == 0) continue;
    long base = s.offset_ + static_cast<long>(i) + d.offset_ - off;
    if (base > ord - off) break;
    std::size_t jmax = std::min(d.coeffs_.size() - 1,
                                static_cast<std::size_t>(ord - off - base));
    for (std::size_t j = 0; j <= jmax; ++j) {
      const Rational& y = d.coeffs_[j];
      if (y == 0) continue;
      tmp = x * y;
      coeffs[static_cast<std::size_t>(base) + j] += tmp;
    }
  }
  return LaurentSeries(off, ord, std::move(coeffs));
}

LaurentSeries div(const LaurentSeries& a, const LaurentSeries& b) {
  if (b.is_zero()) throw std::domain_error("division by zero series");
  long ord = std::min(a.order_ - b.offset_, b.order_ + a.offset_ - 2 * b.offset_);
  if (a.is_zero()) return LaurentSeries::zero(ord);
  long off = a.offset_ - b.offset_;
  if (ord < off) return LaurentSeries::zero(ord);
  std::size_t len = static_cast<std::size_t>(ord - off + 1);
  // Long division on the unit parts: c[i] = (a'[i] - sum b'[j] c[i-j]) / b'[0].
  std::vector<std::pair<long, const Rational*>> bnz;
  for (std::size_t j = 1; j < b.coeffs_.size(); ++j)
    if (b.coeffs_[j] != 0) bnz.emplace_back(static_cast<long>(j), &b.coeffs_[j]);
  const Rational& b0 = b.coeffs_[0];
  std::vector<Rational> c(len);
  Rational acc, tmp;
  for (std::size_t i = 0; i < len; ++i) {
    acc = (i < a.coeffs_.size()) ? a.coeffs_[i] : kZero;
    for (const auto& [j, bj] : bnz) {
      if (j > static_cast<long>(i)) break;
      tmp = (*bj) * c[i - static_cast<std::size_t>(j)];
      acc -= tmp;
    }
    c[i] = acc / b0;
  }
  return LaurentSeries(off, ord, std::move(c));
}

LaurentSeries invert(const LaurentSeries& a) {
  if (a.is_zero()) throw std::domain_error("division by zero series");
  return div(LaurentSeries::one(a.order() - a.offset()), a);
}

std::optional<Mismatch> first_mismatch(const LaurentSeries& a, const LaurentSeries& b, long order) {
  if (order > a.order() || order > b.order())
    throw std::invalid_argument("first_mismatch: requested order exceeds an operand's truncation order");
  long lo = std::min(a.is_zero() ? order + 1 : a.offset(),
                     b.is_zero() ? order + 1 : b.offset());
  for (long e = lo; e <= order; ++e) {
    const Rational& x = a.coeff_at(e);
    const Rational& y = b.coeff_at(e);
    if (x != y) return Mismatch{e, x, y};
  }
  return std::nullopt;
}

bool equal_to_order(const LaurentSeries& a, const LaurentSeries& b, long order) {
  return !first_mismatch(a, b, order).has_value();
}

namespace detail {
LaurentSeries exact_to(const LaurentSeries& s, long order) {
  if (s.order() < order)
    throw std::logic_error("internal truncation bookkeeping error: series exact only to " +
                           std::to_string(s.order()) + ", need " + std::to_string(order));
  return s.truncated(order);
}
}  // namespace detail

}  // namespace qlab
