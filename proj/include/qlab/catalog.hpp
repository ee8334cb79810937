#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlab/series.hpp"

namespace qlab {

/// One expandable named series: the double series f1/f2/g, the families
/// a/aprime/b/bprime (these require m), theta's Lambert form "lambert", and
/// every closed-form tag by its name.
struct ExpandableName {
  std::string name;
  bool takes_m;
};

const std::vector<ExpandableName>& expandable_names();

/// Resolves `name` (with optional family / closed-form parameter m) and
/// expands it to `order`. Throws std::invalid_argument on unknown names,
/// missing or extraneous m, or m out of range.
LaurentSeries expand_named(const std::string& name, std::optional<long> m, long order);

}  // namespace qlab
