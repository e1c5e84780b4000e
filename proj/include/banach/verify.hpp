#pragma once

#include <cstdint>
#include <vector>

#include "banach/report.hpp"

namespace banach {

// ---------------------------------------------------------------------------
// Verification suites.  Each builds a VerificationReport whose records are
// inequality checks with explicit absolute tolerances; random draws are keyed
// by (seed, stream) so reports serialize byte-identically regardless of the
// thread budget.  Default parameters are the reference grids the acceptance
// runner uses.
// ---------------------------------------------------------------------------

// Walsh-matrix identities and norms: H^2 = 2^{l-1} I in exact integer
// arithmetic, ||H||_{2,2} = 2^{(l-1)/2}, max |entry| = 1, and the
// interpolation bound ||H||_{r,r'} <= 2^{(l-1)/r'} for 1 <= r <= 2.
struct HadamardSuiteParams {
  int max_level = 10;
  std::vector<double> interpolation_rs = {1.25, 1.5, 1.8};
  int interpolation_max_level = 6;
  int restarts = 64;
  std::uint64_t seed = 1;
};
VerificationReport verify_hadamard_suite(const HadamardSuiteParams& p = {});

// Span norm vs. coefficient dual norm: for a three-valued system (p, v) and
// every coefficient vector a,
//   || sum a_j f_j ||_p <= ||a||_*,
// where ||.||_* is the dual norm of max(||.||_{p'}, v ||.||_2); the reverse
// inequality holds up to a constant, which the suite infers as an implied
// constant per (p, v).
struct Eq4Params {
  std::vector<double> ps = {1.3, 1.5, 1.8};
  std::vector<double> vs = {0.25, 0.5, 1.0};
  std::vector<int> ns = {1, 2, 3, 4, 5};
  int samples = 500;  // random coefficient vectors per (p, v, n)
  std::uint64_t seed = 1;
};
VerificationReport verify_eq4(const Eq4Params& p = {});

// Fundamental-function bounds: phi(k) <= min(k^{1/p}, sqrt(k)/v), with exact
// exchangeability over supports (every k-subset with arbitrary signs gives
// the same double), and the reverse constant inferred per (p, v).
struct Lemma1iiiParams {
  std::vector<double> ps = {1.3, 1.5, 1.8};
  std::vector<double> vs = {0.25, 0.5, 1.0};
  int max_n = 7;
  int subsets_per_k = 50;
  std::uint64_t seed = 1;
};
VerificationReport verify_lemma_1iii(const Lemma1iiiParams& p = {});

// Lower fundamental function of a block sum: with blocks n = 1..block_count
// of weights v_n = w(n) (w the standard weight sequence for p), and K the
// constant inferred from the subset-norm bounds on those same blocks,
//   lambda(k) >= j / (v_j K sqrt(2)),   j = floor(sqrt(k/2)),
// for every k up to the total basis size; beyond it the probe is recorded as
// out-of-range.  The DP evaluation of lambda is checked bit-for-bit against
// exhaustive subset enumeration on small block families.
struct Lemma3Params {
  double p = 1.5;
  int block_count = 6;
  int k_max = 40;
  std::uint64_t seed = 1;
};
VerificationReport verify_lemma3(const Lemma3Params& p = {});

// Flat-vector l_2 bounds: over the feasible set {||f||_F <= 1, ||f||_inf <=
// sigma} of a three-valued system with v = sigma^{1/p - 1/2}, the suite
// maximizes ||f||_2^q / (sigma^r ||f||_F^p) with r = min(q/2 - p/2,
// q/2 - q/p') and records the constants; for n = 1 they must not exceed 1.
struct Lemma5Params {
  std::vector<double> ps = {1.3, 1.5};
  std::vector<double> qs = {3.0, 4.0};
  std::vector<double> sigmas = {0.25, 0.5, 1.0};
  int max_n = 6;
  int restarts = 5;  // random pattern-search starts per combination
  std::uint64_t seed = 1;
};
VerificationReport verify_lemma5(const Lemma5Params& p = {});

// Factorization obstruction: U the scaled Walsh matrix (norm one from l_p to
// l_inf), delta = ||U^{-1}||_{2,2}.  Every factorization U = A B through l_r
// (B: l_p -> l_r, A: l_r -> l_inf) satisfies ||A|| ||B|| >= 1/delta, checked
// on structured and random factorizations via certified lower bounds; after
// a perturbation of exact (p, inf)-norm (2 max_j ||U^{-1} e_j||_p)^{-1}, the
// obstruction persists at half strength.
struct Prop52Params {
  int level = 4;
  double p = 1.5;
  double r = 2.0;
  int count = 50;         // random factorizations; sample 0 is the polar one
  int perturb_count = 20;
  int restarts = 64;
  std::uint64_t seed = 1;
};
VerificationReport verify_prop52(const Prop52Params& p = {});

// Complexified norms: the rotation-sup norm is sandwiched,
//   (N(x) + N(y)) / 2 <= N_C(x + i y) <= N(x) + N(y),
// and for real matrices the complexified operator norm agrees with the real
// one (checked within 2e-3 on random matrices).
struct ComplexifyParams {
  std::vector<double> ps = {1.5, 2.0, 3.0};  // vector-norm spaces
  int pairs = 1000;                          // (x, y) samples per space
  std::vector<double> op_ps = {1.5, 2.0};    // operator spaces l_p -> l_p
  int matrices = 50;
  int dim = 4;
  int grid = 1024;
  std::uint64_t seed = 1;
};
VerificationReport verify_complexification(const ComplexifyParams& p = {});

// Operator-norm cross-checks: duality ||A||_{p,q} = ||A^T||_{q',p'} on random
// matrices, witness reproduction, bracket sanity, exhaustive brute-force
// agreement on narrow matrices, and Bernstein / residual widths against
// exact singular values on l_2 -> l_2.
struct OpnormCrossParams {
  int duality_samples = 200;
  int svd_matrices = 10;
  std::uint64_t seed = 1;
};
VerificationReport verify_opnorm_crosschecks(const OpnormCrossParams& p = {});

// Weight-sequence and chain-subset checks: anchor values are exact, the
// sequence is nonincreasing inside (0, 1] and dominates n^{-eta}; the
// decay-comparison ratios v(sqrt(c n))/w(n) of the reference pair (v from
// all integers, w from the even ones) are strictly decreasing along w's
// anchors; chain subsets are nested with infinite differences and match the
// frozen leading elements.
struct SequencesParams {
  int weight_samples = 100;
  std::uint64_t chain_window = 200000;
  std::uint64_t seed = 1;
};
VerificationReport verify_sequences(const SequencesParams& p = {});

}  // namespace banach
