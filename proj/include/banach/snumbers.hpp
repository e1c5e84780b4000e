#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "banach/exponent.hpp"
#include "banach/opnorm.hpp"

namespace banach {

// A dense operator together with the l_p / l_q norms it maps between.
struct OperatorSpec {
  Matrix A;
  Exponent dom_p;
  Exponent cod_q;
};

struct SNumberOptions {
  int restarts = 24;       // random frame starts
  int outer_iters = 60;    // frame hill-climb budget
  std::uint64_t seed = 1;
};

// n-th Bernstein-type width: the largest lower norm bound T keeps on some
// n-dimensional subspace,
//   b_n(T) = sup over orthonormal frames V (dim x n) of
//            inf_{c != 0} ||A V c||_q / ||V c||_p.
// value/lower report the inner infimum at the best frame found (on l_2 -> l_2
// that infimum is an exact smallest singular value and b_n equals the n-th
// singular value of A; on other pairs it is a numerical minimization, so the
// value is an estimate rather than a one-sided certificate).  upper is the
// certified operator-norm upper bound (valid since b_n <= b_1 = ||T||).
NormEstimate bernstein_number(const OperatorSpec& T, int n,
                              const SNumberOptions& opt = {});

// n-th approximation-type width: the residual norm after the best rank-n
// correction,
//   a_n(T) = inf over n-dim subspaces V of the codomain of
//            sup_{||x||_p <= 1} min_c ||T x - V c||_q.
// (a_0 = ||T||; a_n = 0 once n >= rank T.)  For any frame V the linear
// correction c(x) = V^+ T x gives the sound upper certificate
// ||(I - V V^+) T||_{p,q}; the reported value is the witness-backed inner
// supremum at the best frame.  On l_2 -> l_2 this equals sigma_{n+1}(A).
NormEstimate cosingularity_number(const OperatorSpec& T, int n,
                                  const SNumberOptions& opt = {});

}  // namespace banach
