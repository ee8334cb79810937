#pragma once

#include <optional>
#include <vector>

#include "qlab/series.hpp"

namespace qlab {

/// Symbolic description of the product prod_j (1 - q^(start_exp + j*step)),
/// finite (length = n) or infinite (length = nullopt). start_exp may be
/// negative; step must be >= 1.
struct PochhammerSpec {
  long start_exp = 0;
  long step = 1;
  std::optional<long> length;  // nullopt means infinite
};

inline PochhammerSpec inf_poch(long start_exp, long step) {
  return PochhammerSpec{start_exp, step, std::nullopt};
}
inline PochhammerSpec fin_poch(long start_exp, long step, long n) {
  return PochhammerSpec{start_exp, step, n};
}

/// (q^start; q^step)_n, exact to `order`.
LaurentSeries poch_finite(long start_exp, long step, long n, long order);

/// (q^start; q^step)_infty, exact to `order`. Factors beyond the derived
/// cutoff are 1 + O(q^(order+1)) and are skipped; negative-exponent factors
/// widen the internal working order so the guarantee still holds.
LaurentSeries poch_infinite(long start_exp, long step, long order);

LaurentSeries poch_series(const PochhammerSpec& spec, long order);

/// Product of numerator specs divided by product of denominator specs,
/// exact to `order`. Throws std::domain_error if a denominator vanishes.
LaurentSeries poch_quotient(const std::vector<PochhammerSpec>& numerators,
                            const std::vector<PochhammerSpec>& denominators,
                            long order);

}  // namespace qlab
