#include "qlab/catalog.hpp"

#include <stdexcept>

#include "qlab/closedforms.hpp"
#include "qlab/doubleseries.hpp"
#include "qlab/hyperg.hpp"

namespace qlab {

namespace {

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "a") return Family::A;
  if (name == "aprime") return Family::APrime;
  if (name == "b") return Family::B;
  if (name == "bprime") return Family::BPrime;
  return std::nullopt;
}

std::optional<SeriesId> double_from_name(const std::string& name) {
  if (name == "f1") return SeriesId::F1;
  if (name == "f2") return SeriesId::F2;
  if (name == "g") return SeriesId::G;
  return std::nullopt;
}

}  // namespace

const std::vector<ExpandableName>& expandable_names() {
  static const std::vector<ExpandableName> names = [] {
    std::vector<ExpandableName> v = {{"f1", false}, {"f2", false},     {"g", false},
                                     {"a", true},   {"aprime", true},  {"b", true},
                                     {"bprime", true}, {"lambert", false}};
    for (ClosedFormTag tag : all_closed_form_tags())
      v.push_back({closed_form_name(tag), closed_form_takes_m(tag)});
    return v;
  }();
  return names;
}

LaurentSeries expand_named(const std::string& name, std::optional<long> m, long order) {
  auto reject_m = [&] {
    if (m) throw std::invalid_argument("series '" + name + "' takes no parameter m");
  };
  if (auto id = double_from_name(name)) {
    reject_m();
    return double_series(*id, order);
  }
  if (auto fam = family_from_name(name)) {
    if (!m) throw std::invalid_argument("family '" + name + "' requires --m");
    if (*m < 1) throw std::invalid_argument("family parameter m must be >= 1");
    return family_series({*fam, *m}, order);
  }
  if (name == "lambert") {
    reject_m();
    return lambert_theta(order);
  }
  if (auto tag = closed_form_from_name(name)) {
    if (closed_form_takes_m(*tag)) {
      if (!m) throw std::invalid_argument("closed form '" + name + "' requires --m");
      return closed_form(ClosedFormId{*tag, *m}, order);
    }
    reject_m();
    return closed_form(*tag, order);
  }
  throw std::invalid_argument("unknown series name: " + name);
}

}  // namespace qlab
