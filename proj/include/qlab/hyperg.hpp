#pragma once

#include <utility>

#include "qlab/series.hpp"

namespace qlab {

/// Parameters of a 2phi1 basic hypergeometric series whose parameters are
/// monomials: a = q^a_exp, b = q^b_exp, c = q^c_exp, base q^step, argument
/// z = q^z_exp. z_exp >= 1 keeps term valuations growing so the truncated
/// summation provably terminates; c_exp + j*step must never hit 0.
struct Phi21Params {
  long a_exp;
  long b_exp;
  long c_exp;
  long step;
  long z_exp;
};

void validate_phi21(const Phi21Params& p);

/// Sum_{n>=0} (a;Q)_n (b;Q)_n / ((Q;Q)_n (c;Q)_n) z^n with Q = q^step,
/// exact to `order`. `extra_terms` adds iterations past the provable cutoff
/// (they must not change anything; exposed for cutoff-stability tests).
LaurentSeries phi21_truncated(const Phi21Params& p, long order, long extra_terms = 0);

/// Both sides of Heine's first (kind = 1) or second (kind = 2) transformation
/// applied to p. Throws std::invalid_argument when the transformed parameter
/// set is not verifiable in the truncated model.
std::pair<LaurentSeries, LaurentSeries> heine_instance(int kind, const Phi21Params& p, long order);

/// Both sides of the q-binomial theorem:
/// sum (a;Q)_n / (Q;Q)_n z^n  =  (az;Q)_inf / (z;Q)_inf.
std::pair<LaurentSeries, LaurentSeries> qbinomial_instance(long a_exp, long z_exp, long step,
                                                           long order);

/// Both sides of the contiguous relation
/// phi(z) - phi(Qz) = z (1-a)(1-b)/(1-c) * phi(Qa, Qb; Qc; z).
std::pair<LaurentSeries, LaurentSeries> contiguous_instance(const Phi21Params& p, long order);

/// Sum_{n>=0} [ q^n/(1-q^(4n+1)) - q^(3n+2)/(1-q^(4n+3)) ], the rearranged
/// one-sided form of the 1psi1 application; term n has valuation >= n.
LaurentSeries lambert_theta(long order);

}  // namespace qlab
