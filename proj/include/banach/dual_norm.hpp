#pragma once

#include <Eigen/Core>

#include "banach/exponent.hpp"

namespace banach {

using Vector = Eigen::VectorXd;

// Euclidean projection onto the l_q ball of the given radius.  q = 1 uses
// soft-thresholding, q = 2 rescaling, q = inf clamping; 1 < q < inf solves
// the KKT system u + lambda*q*u^{q-1} = |y_i| per coordinate (safeguarded
// Newton) with an outer bisection on lambda until ||u||_q = radius.
Vector project_lp_ball(const Vector& y, const Exponent& q, double radius,
                       double tol = 1e-12);

struct DualNormOptions {
  int max_iter = 600;          // alternating-minimization / ascent budget
  double gap_tol_rel = 1e-6;   // required relative certified gap
  double feas_tol = 1e-10;     // feasibility slack for primal witnesses
  bool throw_on_gap = true;    // SolverError if the gap contract fails
};

// Certified evaluation of the dual norm of max(||.||_{p'}, v ||.||_2),
//   ||y||_* = sup { <x, y> : ||x||_{p'} <= 1 and v ||x||_2 <= 1 }
//           = min { ||y1||_p + ||y2||_2 / v : y1 + y2 = y },
// where p is the conjugate of p'.  The two formulas are evaluated by
// independent routes: the sup by projected ascent over the intersection of
// the two balls (Dykstra alternating projections, plus a KKT fixed-point
// sweep on the l_2 multiplier), the min by alternating minimization over
// splits (proximal steps on the l_2 part).  primal_lower is attained by an
// exactly feasible x, dual_upper by an exact split, so
// primal_lower <= ||y||_* <= dual_upper always holds; value is the midpoint.
struct DualNormResult {
  double value = 0.0;
  double primal_lower = 0.0;
  double dual_upper = 0.0;
  double gap = 0.0;
  Vector witness;    // primal maximizer (feasible)
  Vector split_lp;   // y1 of the best split
  Vector split_l2;   // y2 of the best split
  int iterations = 0;
};

DualNormResult emax_dual_norm(const Vector& y, const Exponent& p_prime,
                              double v, const DualNormOptions& opt = {});

// argmax of <x, z> over the unit l_p ball (returns x with ||x||_p = 1 and
// <x, z> = ||z||_{p'}).  Deterministic tie-breaking at p = 1 (first largest
// coordinate) and p = inf (zeros get sign +1).
Vector lp_ball_argmax(const Vector& z, const Exponent& p);

// Gradient of the l_p norm at r != 0 (p finite, > 1); ||g||_{p'} = 1.
Vector lp_norm_gradient(const Vector& r, const Exponent& p);

}  // namespace banach
