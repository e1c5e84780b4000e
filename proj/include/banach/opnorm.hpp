#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "banach/exponent.hpp"

namespace banach {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// A certified bracket for an operator norm ||A: l_p -> l_q||.
//   lower  is witness-backed: ||A w||_q / ||w||_p reproduces it exactly,
//   upper  is a sound upper certificate (closed form, factorization through
//          exact anchors, or interpolation between exact anchors),
//   value  always equals lower (never a midpoint): it is the certified,
//          attained part of the bracket.
struct NormEstimate {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::string method;
  int restarts = 0;
  Vector witness;
};

struct OpNormOptions {
  int restarts = 64;        // random multistarts on top of the deterministic ones
  int max_iter = 200;       // power-iteration sweeps per start
  std::uint64_t seed = 1;
  int sign_enum_limit = 12; // enumerate all +-1 patterns when cols <= limit
  std::vector<Vector> extra_starts;  // user-supplied additional start points
};

// Closed forms: (1, q) max column q-norm, (p, inf) max row p'-norm,
// (2, 2) largest singular value.  nullopt for other pairs.
std::optional<double> op_norm_exact(const Matrix& A, const Exponent& p,
                                    const Exponent& q);

// Sound upper certificate: minimum over closed forms (on A and on A^T via
// duality), factorizations through exact anchor pairs with identity-map
// costs, and interpolation curves between exact anchors.  Always finite.
double op_norm_upper(const Matrix& A, const Exponent& p, const Exponent& q);

// Generalized power iteration (alternating duality maps) from many starts:
// every coordinate vector, all sign patterns when cols <= sign_enum_limit,
// plus the requested random starts.  The objective ||A x||_q is monotone
// along the iteration, so the best witness certifies the lower bound.
NormEstimate op_norm_estimate(const Matrix& A, const Exponent& p,
                              const Exponent& q, const OpNormOptions& opt = {});

// Independent cross-check for small matrices (cols <= 4): exhaustive
// magnitude-composition grid on the l_p sphere times sign patterns, followed
// by local grid refinement with a shrinking window.  No shared code with the
// power-iteration path.
double op_norm_bruteforce(const Matrix& A, const Exponent& p,
                          const Exponent& q, int refine_rounds = 26);

}  // namespace banach
