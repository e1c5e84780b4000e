#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "banach/exponent.hpp"
#include "banach/opnorm.hpp"
#include "banach/spaces.hpp"

namespace banach {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Walsh matrices by doubling: H_1 = [1], H_{l+1} = [[H_l, H_l], [H_l, -H_l]].
// H_l is 2^{l-1} x 2^{l-1} with +-1 entries and H_l^2 = 2^{l-1} I (exact in
// integer arithmetic).  Levels up to 14 (8192 x 8192).
IntMatrix hadamard(int level);

// 2^{-(l-1)/r'} H_l: a norm-one operator l_r -> l_{r'} for 1 <= r <= 2.
Matrix scaled_hadamard(int level, const Exponent& r);

// Data of U = scaled_hadamard(level, p) and its inverse:
//   delta            = ||U^{-1}||_{2,2} via the exact closed form
//                      2^{(l-1)(1/p' - 1/2)}
//   delta_svd        = the same norm from a singular value decomposition
//   max_column_p_norm  max_j ||U^{-1} e_j||_p  (equals 1 exactly)
//   perturb_threshold  (2 * max_column_p_norm)^{-1}
struct HadamardInverseMetrics {
  double delta = 0.0;
  double delta_svd = 0.0;
  double max_column_p_norm = 0.0;
  double perturb_threshold = 0.0;
};
HadamardInverseMetrics hadamard_inverse_metrics(int level, const Exponent& p);

// A finite set of unit directions u_1..u_k in R^n with a certified constant
// c > 1/2 such that max_i |<u_i, x>| >= c ||x||_2 for every x.  Realized for
// n = 1..4: {e1}; three coplanar directions at 60 degrees (c = cos(pi/6));
// the coordinate axes (c = 3^{-1/2}); the axes plus the eight normalized
// half-diagonals (1,+-1,+-1,+-1)/2 (c certified by exhaustive sign
// enumeration against the exact frame pseudoinverse).
struct ThetaEmbedding {
  Matrix directions;               // k x n, rows are unit vectors
  double verified_lower_constant;  // certified c
};
ThetaEmbedding theta_embedding(int n);

// max_i |<u_i, x>| (the sup-recovery functional of the net).
double theta_apply(const ThetaEmbedding& net, const Vector& x);

// Norm of the formal identity (coefficient-wise) between two spaces with the
// same coordinate count.  Exact closed form for lp -> lq (n^{(1/q-1/p)_+});
// otherwise a certified-from-below multistart ratio ascent.
NormEstimate formal_identity_norm(const SpaceSpec& dom, const SpaceSpec& cod,
                                  const OpNormOptions& opt = {});

// Norm of the block-diagonal formal identity between blocksum spaces that
// share the block layout.  When the domain outer exponent does not exceed
// the codomain one, the total equals max over blocks of the single-block
// norms (single-block witnesses are global witnesses).
struct BlockIdentityNorm {
  std::vector<NormEstimate> per_block;
  double total = 0.0;
};
BlockIdentityNorm block_formal_identity(const SpaceSpec& dom,
                                        const SpaceSpec& cod,
                                        const OpNormOptions& opt = {});

}  // namespace banach
