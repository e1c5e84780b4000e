#pragma once

#include <Eigen/Core>

#include "banach/exponent.hpp"

namespace banach {

using Vector = Eigen::VectorXd;

// A family f_1, ..., f_n of i.i.d. symmetric three-valued random variables on
// the uniform probability space {-1, 0, +1}^n, taking values {-amp, 0, +amp}
// with P(f_j = ±amp) = atom_prob/2, chosen so that
//   E|f_j|^p = 1          (each f_j is p-norm one)  and
//   E f_j^2  = 1 / v^2    (L2 norm exactly 1/v).
// That forces amp = v^{-2/(2-p)} and atom_prob = v^{2p/(2-p)}.  For v = 1 the
// zero atom has probability 0 and the family degenerates to signs (amp = 1);
// zero-probability atoms are pruned from every enumeration.
struct ThreeValuedSystem {
  int n = 0;            // number of functions
  Exponent p;           // p in (1, 2)  (v = 1 also allows the sign case)
  double v = 1.0;       // L2 calibration, v in (0, 1]
  double amplitude = 1.0;
  double atom_prob = 1.0;   // probability of {+amp} plus {-amp}
  bool prune_zero = true;   // true iff atom_prob == 1
};

// Validates (n, p, v) and computes the atom layout.  Requires 1 < p < 2 and
// 0 < v <= 1 (p = 2 would make the exponents blow up).
ThreeValuedSystem three_valued_system(int n, const Exponent& p, double v);

// r-th moment norm (E |sum_j a_j f_j|^r)^{1/r} of a coefficient vector a,
// computed by exact enumeration of the atoms over the support of a.
// The support is canonicalized first (|a_j| sorted decreasing, zeros dropped),
// so the value is bit-for-bit invariant under permutations and sign flips of
// a; in particular all k-element subsets of an indicator vector give the exact
// same double.  Supports up to 12 nonzero coefficients (3^12 atoms).
double fspan_moment(const ThreeValuedSystem& sys, const Vector& a, double r);

// The span norm ||sum a_j f_j||_p, i.e. fspan_moment with r = p.
double fspan_norm(const ThreeValuedSystem& sys, const Vector& a);

// ||f_1 + ... + f_k||_p (the fundamental function at k).
double fspan_norm_indicator(const ThreeValuedSystem& sys, int k);

// Coordinates of sum a_j f_j inside l_p^{3^n}: one coordinate per atom, equal
// to value * probability^{1/p}.  The plain l_p norm of this vector reproduces
// fspan_norm(a); the embedding realizes the span isometrically.  Requires
// n <= 12.
Vector fspan_embed(const ThreeValuedSystem& sys, const Vector& a);

// Diagnostics used by the verification suites (all computed by enumeration
// with compensated summation):
double total_probability(const ThreeValuedSystem& sys);        // should be 1
// max over pairs (i,j) and value pairs of |P(f_i=s, f_j=t) - P(s) P(t)|.
double pairwise_independence_error(const ThreeValuedSystem& sys);

}  // namespace banach
