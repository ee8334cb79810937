#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlab/series.hpp"

namespace qlab {

/// Right-hand sides appearing in the theorems, lemma evaluations, proof-chain
/// identities, and corollary lower bounds. Tags with an m parameter require
/// it; A2M and B2M additionally need m >= 2.
enum class ClosedFormTag {
  ThmF1,
  ThmF2,
  ThmG,
  A2,
  A2M,
  APrime1,
  APrime2,
  B2,
  B2M,
  BPrime,
  HelpId1,
  Help2Double1,
  Theta,
  BoundF1,
  BoundF2,
  BoundG,
};

struct ClosedFormId {
  ClosedFormTag tag;
  std::optional<long> m;
};

bool closed_form_takes_m(ClosedFormTag tag);
std::string closed_form_name(ClosedFormTag tag);
std::optional<ClosedFormTag> closed_form_from_name(const std::string& name);
const std::vector<ClosedFormTag>& all_closed_form_tags();

/// The cited expression as a truncated series. Rational functions are entered
/// as explicit numerator polynomials over (1-q^e) factors; the one-parameter
/// tags are guarded-cutoff sums over n with finite Pochhammer factors.
LaurentSeries closed_form(const ClosedFormId& id, long order);

inline LaurentSeries closed_form(ClosedFormTag tag, long order) {
  return closed_form(ClosedFormId{tag, std::nullopt}, order);
}
inline LaurentSeries closed_form(ClosedFormTag tag, long m, long order) {
  return closed_form(ClosedFormId{tag, m}, order);
}

}  // namespace qlab
