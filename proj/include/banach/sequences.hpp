#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "banach/exponent.hpp"
#include "banach/three_valued.hpp"

namespace banach {

// ---------------------------------------------------------------------------
// Weight sequences.
//
// Given an increasing set M = {m_1 < m_2 < ...} of positive integers and an
// exponent p in (1, 2) with eta = 1/p - 1/2, the weight sequence w takes the
// value 2^{-eta k} at the anchor index 2^{3^{m_k}} (and 1 at index 1), and is
// interpolated linearly in the raw index between consecutive anchors:
//     w(n) = A + rho (B - A),   rho = (n - n_a) / (n_b - n_a)
// evaluated in the log2-index plane with expm1/exp2 so that anchor values are
// exact and intermediate values carry >= 10 significant digits even though
// the anchor indices themselves are astronomically large (their base-2 logs,
// 3^{m_k}, are exact integers through m_k = 40 and long doubles beyond).
// Non-integer arguments t mean w_{floor(t)}; the floor is applied exactly
// while t <= 2^40 and skipped above, where it changes w by < 1e-12 relative.
// Values below index 1 are clamped to 1.
// ---------------------------------------------------------------------------

struct WeightAnchor {
  std::uint64_t m = 0;        // element of M: the anchor sits at index 2^{3^m}
  long double log2_index = 0; // 3^m, the base-2 log of the anchor index
  double value = 1.0;         // 2^{-eta k} for the k-th element of M
};

class WeightSeq {
 public:
  WeightSeq() = default;
  WeightSeq(Exponent p, std::vector<WeightAnchor> anchors);

  const Exponent& p() const { return p_; }
  double eta() const { return eta_; }
  const std::vector<WeightAnchor>& anchors() const { return anchors_; }

  // w at index n = 2^{log2n}.  log2n may be huge (indices far beyond 2^64).
  double eval_log2(double log2n) const;
  // w_n for directly representable n >= 1.
  double eval(double n) const;

 private:
  Exponent p_{1.5};
  double eta_ = 0.0;
  std::vector<WeightAnchor> anchors_;  // ascending m; a virtual leading
                                       // anchor (index 1, value 1) is implied
};

// Builds the weight sequence from the first elements of M (ascending).  At
// least one element beyond the largest index ever evaluated must be supplied;
// eval throws past the last anchor.
WeightSeq weight_seq(const std::vector<std::uint64_t>& m_elements,
                     const Exponent& p);

// v(sqrt(c n)) / w(n) evaluated at n = 2^{log2n}: the decay-comparison ratio
// of two weight sequences.  c > 0.
double weight_ratio(const WeightSeq& v, const WeightSeq& w, double c,
                    double log2n);

// ---------------------------------------------------------------------------
// Chain subsets: a strictly increasing family of integer sets indexed by
// decimal numbers r in (0, 1).  M_r is the image of the decimal fractions
// q = a / 10^d in [0, r) under an injection into the positive integers
// (Cantor pairing of the reduced fraction, plus one); r1 <= r2 implies
// M_{r1} subset of M_{r2}, with infinite difference whenever r1 < r2.
// Membership of z is decided by exact integer arithmetic.
// ---------------------------------------------------------------------------

class ChainSubset {
 public:
  // r as a decimal string, e.g. "0.3" (exact rational 3/10).
  explicit ChainSubset(const std::string& r_decimal);

  bool contains(std::uint64_t z) const;
  // All members in [1, limit].
  std::vector<std::uint64_t> window(std::uint64_t limit) const;
  // The first `count` members in increasing order.
  std::vector<std::uint64_t> first(int count) const;

  std::int64_t r_num() const { return num_; }
  std::int64_t r_den() const { return den_; }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// ---------------------------------------------------------------------------
// Fundamental functions of block spaces of three-valued systems.
// ---------------------------------------------------------------------------

// phi(k) = || f_1 + ... + f_k ||: the fundamental function of a single
// system.  (Equals the sup over supports of size <= k by 1-unconditionality,
// which fundamental_phi_bruteforce checks on small systems.)
double fundamental_phi(const ThreeValuedSystem& sys, int k);
// max over all supports A with |A| <= k of ||sum_{j in A} f_j||  (n <= 6).
double fundamental_phi_bruteforce(const ThreeValuedSystem& sys, int k);

// lambda(k) for the outer-l_p sum of the given blocks: the infimum over
// allocations (j_1, ..., j_B), sum j_b = k, 0 <= j_b <= n_b, of
//   ( sum_b phi_b(j_b)^p )^{1/p}       (max_b for p = inf),
// computed by dynamic programming over blocks in ascending order with the
// exact same accumulation arithmetic as the brute-force subset scan, so the
// two agree bit-for-bit.
double lower_fundamental_lambda(const std::vector<ThreeValuedSystem>& blocks,
                                const Exponent& outer, int k);
// Exhaustive check over all subsets of the union basis (total size <= 20).
double lower_fundamental_lambda_bruteforce(
    const std::vector<ThreeValuedSystem>& blocks, const Exponent& outer,
    int k);

}  // namespace banach
