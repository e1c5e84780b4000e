#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "banach/constructions.hpp"
#include "banach/snumbers.hpp"
#include "banach/spaces.hpp"

namespace banach {

struct TruncationOptions {
  std::uint64_t seed = 1;
  int restarts = 16;
};

// Smallest N such that every vector of span(E) keeps at most a delta
// fraction of its norm past coordinate N:
//   sup_{c != 0} ||Tail_N(E c)|| / ||E c|| <= delta,
// where Tail_N zeroes coordinates 1..N.  The ratio is nonincreasing in N for
// 1-unconditional norms, so a linear scan from N = 0 finds the minimum.  For
// l_2 the ratio is an exact singular value (of the tail of the orthonormal
// factor of E); otherwise a multistart ratio ascent evaluates it.
int min_truncation_index(const Matrix& E, const SpaceSpec& space, double delta,
                         const TruncationOptions& opt = {});

// Quantitative "truncation keeps the operator bounded below" certificate.
// Given T with ||T E c||_q >= eps ||E c||_p on span(E) (verified first), finds
// the largest gamma with
//   eps / (1 + gamma) - ||T||_upper * gamma / (1 - gamma) >= delta,
// sets N = min_truncation_index(E, gamma), and certifies the achieved lower
// bound of T on the truncated subspace S_N(span E) directly.
struct TruncationCertificate {
  int index = 0;            // N
  double gamma = 0.0;       // truncation budget used
  double eps_verified = 0.; // measured inf of ||T E c|| / ||E c||
  double norm_upper = 0.0;  // certified upper bound of ||T|| used in gamma
  double certified_delta = 0.0;  // measured inf of ||T S_N E c|| / ||S_N E c||
};

TruncationCertificate truncation_preserves_lower_bound(
    const OperatorSpec& T, const Matrix& E, double eps, double delta,
    const TruncationOptions& opt = {});

// Exact rank of an integer matrix via fraction-free (Bareiss) elimination in
// 128-bit arithmetic; no floating-point thresholds involved.
int exact_rank(const IntMatrix& M);

// dim(span E), dim(span Z), dim(span E + span Z) and
// dim(span E cap span Z) = dimE + dimZ - dimSum, all over exact integer
// arithmetic (columns are the spanning vectors).
struct SubspaceIntersection {
  int dim_e = 0;
  int dim_z = 0;
  int dim_sum = 0;
  int dim_intersection = 0;
};

SubspaceIntersection subspace_intersection(const IntMatrix& E,
                                           const IntMatrix& Z);

}  // namespace banach
