#include "qlab/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qlab {

namespace {

struct Windows {
  long V;                    // weight exponent of the bare (k, n) term
  long even_lo, even_hi;     // distinct signed evens, step 2 (empty when hi < lo)
  long odd_lo, odd_hi;       // repeatable odds, step 2
};

Windows windows_of(SeriesId id, long k, long n) {
  switch (id) {
    case SeriesId::F1:
      return {2 * k + 3 * n + 1, 2 * n + 2, 2 * n + 2 * k, 2 * n + 3, 2 * n + 2 * k + 1};
    case SeriesId::F2:
      return {2 * k + n + 2, 2 * n + 2, 2 * n + 2 * k, 2 * n + 5, 2 * n + 2 * k + 3};
    case SeriesId::G:
      return {2 * k + 5 * n + 2, 2 * n + 2, 2 * n + 2 * k, 2 * n + 1, 2 * n + 2 * k - 1};
  }
  throw std::invalid_argument("unknown SeriesId");
}

long base_valuation_step(SeriesId id) {
  // coefficient of n in V, used to bound the n loop
  switch (id) {
    case SeriesId::F1: return 3;
    case SeriesId::F2: return 1;
    case SeriesId::G: return 5;
  }
  return 1;
}

long base_valuation_const(SeriesId id) {
  switch (id) {
    case SeriesId::F1: return 1;
    case SeriesId::F2:
    case SeriesId::G: return 2;
  }
  return 0;
}

// Recursively decorates one (k, n) cell: distinct evens first (ascending),
// then a non-decreasing odd multiset, both pruned on the remaining size.
template <typename Visit>
void decorate(const Windows& w, long k, long n, long remaining, Visit&& visit) {
  std::vector<long> evens, odds;
  std::function<void(long, long)> choose_odds = [&](long from, long budget) {
    if (budget == 0) {
      Representation rep{k, n, evens, odds, evens.size() % 2 == 0 ? 1 : -1};
      visit(rep);
      return;
    }
    for (long v = from; v <= w.odd_hi && v <= budget; v += 2) {
      odds.push_back(v);
      choose_odds(v, budget - v);
      odds.pop_back();
    }
  };
  std::function<void(long, long)> choose_evens = [&](long from, long budget) {
    choose_odds(w.odd_lo, budget);
    for (long v = from; v <= w.even_hi && v <= budget; v += 2) {
      evens.push_back(v);
      choose_evens(v + 2, budget - v);
      evens.pop_back();
    }
  };
  choose_evens(w.even_lo, remaining);
}

template <typename Visit>
void enumerate_all(SeriesId id, long N, Visit&& visit) {
  if (N < 1) throw std::invalid_argument("representation oracle: N must be >= 1");
  long c = base_valuation_step(id);
  long e0 = base_valuation_const(id);
  for (long n = 0; c * n + e0 <= N; ++n) {
    for (long k = 0; 2 * k + c * n + e0 <= N; ++k) {
      Windows w = windows_of(id, k, n);
      decorate(w, k, n, N - w.V, visit);
    }
  }
}

}  // namespace

long long representation_count(SeriesId id, long N) {
  long long count = 0;
  enumerate_all(id, N, [&](const Representation& rep) { count += rep.sign; });
  return count;
}

std::vector<Representation> enumerate_representations(SeriesId id, long N) {
  std::vector<Representation> reps;
  enumerate_all(id, N, [&](const Representation& rep) { reps.push_back(rep); });
  // The enumeration above emits odd multisets before evens-heavy variants;
  // normalize to the documented (n, k, evens, odds) lexicographic order.
  std::sort(reps.begin(), reps.end(), [](const Representation& a, const Representation& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.k != b.k) return a.k < b.k;
    if (a.evens != b.evens) return a.evens < b.evens;
    return a.odds < b.odds;
  });
  return reps;
}

long long f1_partition_scan(long N) {
  if (N < 1) throw std::invalid_argument("f1_partition_scan: N must be >= 1");
  long long count = 0;
  std::vector<long> parts;  // non-increasing
  auto qualifies = [&]() -> bool {
    if (parts.size() == 1 && parts[0] == 1) return true;  // the (k,n)=(0,0) term
    long n = 0;
    for (long p : parts)
      if (p == 1) ++n;
    long L = parts[0];
    if (L % 2 == 0 || L < 2 * n + 1) return false;
    long k = (L - 2 * n - 1) / 2;
    if (k < 0) return false;
    bool mandatory_seen = false;
    long prev_even = -1;
    for (long p : parts) {
      if (p == 1) continue;
      if (p == L && !mandatory_seen) {
        mandatory_seen = true;
        continue;
      }
      if (p % 2 == 0) {
        if (p == prev_even) return false;  // repeated even part
        if (p < 2 * n + 2 || p > L - 1) return false;
        prev_even = p;
      } else {
        if (p < 2 * n + 3 || p > L) return false;
      }
    }
    return mandatory_seen;
  };
  std::function<void(long, long)> gen = [&](long remaining, long max_part) {
    if (remaining == 0) {
      if (qualifies()) {
        long evens = 0;
        for (long p : parts)
          if (p % 2 == 0) ++evens;
        count += (evens % 2 == 0) ? 1 : -1;
      }
      return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      gen(remaining - p, p);
      parts.pop_back();
    }
  };
  gen(N, N);
  return count;
}

}  // namespace qlab
