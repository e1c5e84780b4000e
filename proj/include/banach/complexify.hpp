#pragma once

#include <functional>

#include <Eigen/Core>

#include "banach/exponent.hpp"
#include "banach/opnorm.hpp"

namespace banach {

using NormFn = std::function<double(const Vector&)>;

// Certified evaluation of the complexified norm
//   N_C(x + i y) = sup_phi N(x cos(phi) + y sin(phi))
// for a real norm N: grid scan over [0, 2pi) plus golden-section refinement
// around the best cell (both only raise the attained lower bound), with the
// sound Lipschitz cover
//   N_C <= grid max + (N(x) + N(y)) * h / 2        (h = grid step)
// since |f(a) - f(b)| <= (N(x) + N(y)) |a - b| for f(phi) = N(...).
struct ComplexNormResult {
  double value = 0.0;  // the certified attained supremum (= lower)
  double lower = 0.0;
  double upper = 0.0;
  double phi = 0.0;  // angle attaining the lower bound
};

ComplexNormResult complex_vector_norm(const NormFn& norm, const Vector& x,
                                      const Vector& y, int grid = 1024);

// The real 2m x 2n block matrix [[R, -S], [S, R]] representing the complex
// operator R + iS acting on x + iy.
Matrix complexify_operator(const Matrix& R, const Matrix& S);
Matrix complexify_operator(const Matrix& R);  // S = 0

// Certified bracket for ||T_C|| where T is real and both spaces carry the
// complexified l_p norms: ascent over stacked pairs (x, y) scoring with a
// coarse grid, then a fine-grid certified ratio at the best pair.  The upper
// field is the exact real-norm certificate (complexification of a real
// operator never increases the norm).
struct ComplexOpNormResult {
  double value = 0.0;  // midpoint of the fine-grid ratio bracket at the witness
  double lower = 0.0;  // num_lower / den_upper at the witness pair (certified)
  double upper = 0.0;  // sound upper for the supremum
  Vector witness_x;
  Vector witness_y;
};

ComplexOpNormResult complex_op_norm(const Matrix& T, const Exponent& dom,
                                    const Exponent& cod,
                                    const OpNormOptions& opt = {});

}  // namespace banach
