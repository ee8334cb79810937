#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlab/series.hpp"

namespace qlab {

enum class Severity { Hard, Info };
enum class Status { Pass, Fail, Error };

std::string to_string(Severity s);
std::string to_string(Status s);

struct VerificationReport {
  std::string id;
  long order = 0;
  Status status = Status::Error;
  Severity severity = Severity::Hard;
  std::optional<long> first_mismatch;
  std::optional<Rational> lhs_coeff;
  std::optional<Rational> rhs_coeff;
  long wall_ms = 0;
  std::string message;  // populated on Error and informational failures
};

/// A named verifiable identity: a check callable at any order plus metadata.
/// The check reports PASS/FAIL with first-mismatch data; it never throws
/// (builder exceptions become ERROR reports).
struct IdentityRecord {
  std::string id;
  std::string anchor;      // human-readable source reference
  long default_order = 100;
  Severity severity = Severity::Hard;
  std::function<VerificationReport(long order)> check;
};

using SeriesBuilder = std::function<LaurentSeries(long order)>;

/// Orders above this are refused with an ERROR report (accidental
/// multi-hour exact-arithmetic runs).
inline constexpr long kOrderSafetyCap = 2000;

class Registry {
 public:
  void add(IdentityRecord record);

  const std::vector<IdentityRecord>& records() const { return records_; }
  const IdentityRecord* find(const std::string& id) const;

  /// Runs one record at `order` (its default when absent). Unknown ids and
  /// orders beyond the safety cap yield ERROR reports, not crashes.
  VerificationReport verify(const std::string& id, std::optional<long> order = std::nullopt) const;

  /// Runs every record in catalog order; `jobs` > 1 verifies concurrently,
  /// reports are still aggregated deterministically in catalog order.
  std::vector<VerificationReport> verify_all(std::optional<long> order = std::nullopt,
                                             int jobs = 1) const;

 private:
  std::vector<IdentityRecord> records_;
  std::map<std::string, std::size_t> index_;
};

/// Record constructors. Equality records also assert that both sides have
/// integer coefficients throughout (a sanity property of every identity in
/// the catalog).
IdentityRecord make_equality(std::string id, std::string anchor, long default_order,
                             Severity severity, SeriesBuilder lhs, SeriesBuilder rhs);

/// Positivity record: FAIL reports the first negative coefficient.
IdentityRecord make_nonnegative(std::string id, std::string anchor, long default_order,
                                Severity severity, SeriesBuilder builder);

/// Property record backed by an arbitrary check body.
IdentityRecord make_property(std::string id, std::string anchor, long default_order,
                             Severity severity,
                             std::function<VerificationReport(long)> body);

/// The full built-in identity catalog.
const Registry& identity_registry();

bool any_hard_failure(const std::vector<VerificationReport>& reports);

}  // namespace qlab
