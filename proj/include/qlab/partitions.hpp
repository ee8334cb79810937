#pragma once

#include <vector>

#include "qlab/doubleseries.hpp"

namespace qlab {

/// One decorated monomial contribution of a double series: indices (k, n), a
/// set of distinct even parts from the signed window, and a multiset of odd
/// parts from the repeatable window. sign = (-1)^(number of evens).
struct Representation {
  long k = 0;
  long n = 0;
  std::vector<long> evens;  // strictly increasing
  std::vector<long> odds;   // non-decreasing
  int sign = 1;
};

/// Signed count of all representations of N for the given series, computed by
/// direct recursive enumeration (no series arithmetic on this code path).
long long representation_count(SeriesId id, long N);

/// Full signed representation list, ordered lexicographically in
/// (n, k, evens, odds).
std::vector<Representation> enumerate_representations(SeriesId id, long N);

/// Independent second oracle for F1 only: scans every partition of N and
/// counts it with weight (-1)^(#even parts) iff it passes the prose
/// membership test (n ones, odd largest part L = 2n+2k+1, distinct evens in
/// [2n+2, L-1], other odds in [2n+3, L]; the partition {1} is the special
/// (k,n) = (0,0) case).
long long f1_partition_scan(long N);

}  // namespace qlab
