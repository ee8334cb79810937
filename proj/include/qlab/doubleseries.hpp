#pragma once

#include <string>

#include "qlab/series.hpp"

namespace qlab {

/// The three weighted-partition double series.
enum class SeriesId { F1, F2, G };

/// The four auxiliary one-parameter families with free positive integer m.
enum class Family { A, APrime, B, BPrime };

struct FamilyId {
  Family family;
  long m;  // m >= 1
};

std::string series_name(SeriesId id);

/// Sum over (k, n) >= (0, 0) of
///   (q^(2n+2); q^2)_k / (q^(2n+D); q^2)_k * q^V
/// with (D, V) = (3, 2k+3n+1) for F1, (5, 2k+n+2) for F2, (1, 2k+5n+2) for G;
/// exact to `order`. Every term has valuation exactly V, so the enumeration
/// {V <= order} is complete.
LaurentSeries double_series(SeriesId id, long order);

/// Sum over n >= 0 of the family's infinite-product quotient term
/// (Definition-3.1 shape), exact to `order`. Small-n denominators contain
/// negative-exponent factors; their inverses have positive valuation, so
/// term n still has valuation >= m*n (A, B) resp. m*(n+1) (A', B'); the
/// first discarded term is asserted to lie beyond `order`.
LaurentSeries family_series(FamilyId id, long order);

}  // namespace qlab
