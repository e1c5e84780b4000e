// Weight sequences, chain subsets and fundamental functions, pinned against
// hand-computable oracle values.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "banach/errors.hpp"
#include "banach/exponent.hpp"
#include "banach/sequences.hpp"
#include "banach/three_valued.hpp"

using banach::ChainSubset;
using banach::ConfigError;
using banach::Exponent;
using banach::ThreeValuedSystem;
using banach::three_valued_system;
using banach::Vector;
using banach::WeightSeq;
using banach::weight_ratio;
using banach::weight_seq;

namespace {
std::vector<std::uint64_t> iota_set(std::uint64_t count, std::uint64_t step) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 1; i <= count; ++i) out.push_back(i * step);
  return out;
}
}  // namespace

TEST_CASE("weight anchors: kth anchor sits at index 2^(3^m_k), value 2^(-k/6)") {
  // p = 3/2 gives eta = 1/p - 1/2 = 1/6.
  WeightSeq w = weight_seq(iota_set(8, 1), Exponent(1.5));
  CHECK(w.eta() == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  REQUIRE(w.anchors().size() >= 3);
  CHECK(w.anchors()[0].log2_index == 3.0L);
  CHECK(w.anchors()[1].log2_index == 9.0L);
  CHECK(w.anchors()[2].log2_index == 27.0L);
  // Anchor evaluations are exact (snap, no interpolation).
  CHECK(w.eval_log2(3.0) == std::exp2(-1.0 / 6.0));
  CHECK(w.eval_log2(9.0) == std::exp2(-2.0 / 6.0));
  CHECK(w.eval_log2(27.0) == std::exp2(-3.0 / 6.0));
  // Pinned decimal oracles.
  CHECK(w.eval_log2(3.0) == doctest::Approx(0.8908987181403393).epsilon(1e-15));
  CHECK(w.eval_log2(9.0) == doctest::Approx(0.7937005259840998).epsilon(1e-15));
}

TEST_CASE("weight interpolation is linear in the raw index with floors") {
  WeightSeq w = weight_seq(iota_set(8, 1), Exponent(1.5));
  double w8 = std::exp2(-1.0 / 6.0);
  // Between the virtual leading anchor (index 1, value 1) and index 8:
  // w(n) = 1 + (n - 1)/(8 - 1) * (w8 - 1).
  CHECK(w.eval(2.0) == doctest::Approx(1.0 + (w8 - 1.0) / 7.0).epsilon(1e-14));
  CHECK(w.eval(2.0) == doctest::Approx(0.9844141025914769).epsilon(1e-13));
  // Between indices 8 and 512: w(11) = w8 + 3/504 * (w512 - w8).
  double w512 = std::exp2(-2.0 / 6.0);
  CHECK(w.eval(11.0) ==
        doctest::Approx(w8 + 3.0 / 504.0 * (w512 - w8)).epsilon(1e-14));
  // Non-integer raw indices floor first: 2^3.5 = 11.31 evaluates at 11.
  CHECK(w.eval_log2(3.5) == w.eval(11.0));
  // At or below index 1 the weight clamps to 1.
  CHECK(w.eval_log2(0.0) == 1.0);
  CHECK(w.eval_log2(-4.0) == 1.0);
}

TEST_CASE("weight sequence is nonincreasing, in (0,1], above n^(-eta)") {
  WeightSeq w = weight_seq(iota_set(6, 1), Exponent(1.5));
  double last_log2 = static_cast<double>(w.anchors().back().log2_index);
  double prev = 1.0;
  for (int i = 0; i <= 400; ++i) {
    double x = last_log2 * i / 400.0;
    double val = w.eval_log2(x);
    CHECK(val <= prev + 1e-15);
    CHECK(val > 0.0);
    CHECK(val <= 1.0);
    // Envelope: w(2^x) >= (2^x)^(-eta) = 2^(-x/6).
    CHECK(val >= std::exp2(-x / 6.0) * (1.0 - 1e-12));
    prev = val;
  }
  // Evaluation beyond the final anchor is refused, not extrapolated.
  CHECK_THROWS_AS(w.eval_log2(last_log2 + 0.5), ConfigError);
}

TEST_CASE("weight evaluation stays exact at astronomically large anchors") {
  WeightSeq w = weight_seq(iota_set(41, 1), Exponent(1.5));
  // 3^20 = 3486784401 is exactly representable; the anchor value snaps to
  // exactly 2^(-20 eta) (with the library's double rounding of eta).
  double x20 = 3486784401.0;
  CHECK(w.eval_log2(x20) == std::exp2(-w.eta() * 20.0));
  CHECK(w.eval_log2(x20) == doctest::Approx(std::exp2(-20.0 / 6.0)));
  // Between anchors 3^20 and 3^21 the value interpolates monotonically.
  double a = w.eval_log2(x20 * 1.5);
  double b = w.eval_log2(x20 * 2.0);
  CHECK(a <= std::exp2(-w.eta() * 20.0));
  CHECK(b <= a);
  CHECK(b >= std::exp2(-w.eta() * 21.0));
}

TEST_CASE("thinned-index ratio ladder decreases strictly") {
  // v over all integers, w over the even integers, same p: at w's anchors
  // n_k = 2^(3^(2k)), the ratio v(sqrt(c n_k)) / w(n_k) must strictly
  // decrease in k for every c <= 1.
  WeightSeq v = weight_seq(iota_set(41, 1), Exponent(1.5));
  WeightSeq w = weight_seq(iota_set(41, 2), Exponent(1.5));

  // Hand-computed oracle for k = 1, c = 1: the midpoint index is
  // floor(2^4.5) = 22, interpolated between v-anchors at 8 and 512, and the
  // denominator is w's first anchor value 2^(-1/6).
  double v8 = std::exp2(-1.0 / 6.0), v512 = std::exp2(-2.0 / 6.0);
  double expected1 = (v8 + 14.0 / 504.0 * (v512 - v8)) / v8;
  CHECK(weight_ratio(v, w, 1.0, 9.0) ==
        doctest::Approx(expected1).epsilon(1e-14));
  CHECK(weight_ratio(v, w, 1.0, 9.0) ==
        doctest::Approx(0.9969694088372316).epsilon(1e-12));
  // For k = 1, c = 1/4 the midpoint floors to index 11.
  double expected_q = (v8 + 3.0 / 504.0 * (v512 - v8)) / v8;
  CHECK(weight_ratio(v, w, 0.25, 9.0) ==
        doctest::Approx(expected_q).epsilon(1e-14));

  for (double c : {0.25, 0.5, 1.0}) {
    std::vector<double> ratios;
    for (int k = 1; k <= 6; ++k) {
      long double g = 1.0L;
      for (int t = 0; t < 2 * k; ++t) g *= 3.0L;
      ratios.push_back(weight_ratio(v, w, c, static_cast<double>(g)));
    }
    for (size_t i = 1; i < ratios.size(); ++i)
      CHECK(ratios[i] < ratios[i - 1] - 1e-6);
    // Tail ratios approach 2^(-(k-1)/6) from k = 2 on.
    CHECK(ratios[1] == doctest::Approx(std::exp2(-1.0 / 6.0)).epsilon(1e-9));
    CHECK(ratios[5] == doctest::Approx(std::exp2(-5.0 / 6.0)).epsilon(1e-9));
  }
}

TEST_CASE("chain subset leading members, hand-enumerated") {
  // r = 0.3: fractions a/b in lowest terms with b a product of 2s and 5s and
  // a/b < 0.3, coded by f(a/b) = (a+b)(a+b+1)/2 + b + 1:
  //   0/1 -> 3, 1/4 -> 20, 1/5 -> 27, 1/8 -> 54, 1/10 -> 77.
  ChainSubset m3("0.3");
  CHECK(m3.first(5) == std::vector<std::uint64_t>{3, 20, 27, 54, 77});
  // r = 0.25 excludes 1/4 (strict inequality) and continues with 1/16 -> 170.
  ChainSubset m25("0.25");
  CHECK(m25.first(5) == std::vector<std::uint64_t>{3, 27, 54, 77, 170});
  // Membership probes, including non-codes.
  CHECK(m3.contains(20));
  CHECK_FALSE(m25.contains(20));
  CHECK_FALSE(m3.contains(4));   // 4 codes no fraction at all
  CHECK_FALSE(m3.contains(12));  // 12 codes 2/2, not in lowest terms
  // window() respects the bound and matches first().
  CHECK(m3.window(100) == m3.first(5));
}

TEST_CASE("chain subsets nest strictly when the ratios do") {
  ChainSubset small("0.25"), big("0.3");
  std::vector<std::uint64_t> sw = small.window(5000);
  for (std::uint64_t z : sw) CHECK(big.contains(z));
  CHECK(big.window(5000).size() > sw.size());
}

TEST_CASE("chain ratio parsing: decimals, fractions, rejects") {
  ChainSubset dec("0.3"), frac("3/10");
  CHECK(dec.first(8) == frac.first(8));
  CHECK(ChainSubset(".25").first(4) == ChainSubset("1/4").first(4));
  CHECK_THROWS_AS(ChainSubset("0"), ConfigError);
  CHECK_THROWS_AS(ChainSubset("1.0"), ConfigError);
  CHECK_THROWS_AS(ChainSubset("-0.2"), ConfigError);
  CHECK_THROWS_AS(ChainSubset("abc"), ConfigError);
  CHECK_THROWS_AS(ChainSubset("2/3x"), ConfigError);
}

TEST_CASE("fundamental function matches exhaustive subset search bitwise") {
  for (double v : {0.5, 1.0}) {
    ThreeValuedSystem sys = three_valued_system(5, Exponent(1.5), v);
    double prev = 0.0;
    for (int k = 0; k <= 5; ++k) {
      double phi = banach::fundamental_phi(sys, k);
      CHECK(phi == banach::fundamental_phi_bruteforce(sys, k));
      CHECK(phi >= prev);  // nondecreasing
      if (k >= 1) {
        double cap = std::min(std::pow(double(k), 1.0 / 1.5),
                              std::sqrt(double(k)) / v);
        CHECK(phi <= cap * (1.0 + 1e-9));
      }
      prev = phi;
    }
    CHECK(banach::fundamental_phi(sys, 0) == 0.0);
  }
}

TEST_CASE("block lower fundamental function: DP equals brute force bitwise") {
  for (double pouter : {1.5, 2.0}) {
    Exponent outer(pouter);
    std::vector<ThreeValuedSystem> blocks;
    double vb = 1.0;
    for (int n = 1; n <= 4; ++n) {
      blocks.push_back(three_valued_system(n, Exponent(1.5), vb));
      vb *= 0.9;
    }
    double prev = 0.0;
    for (int k = 0; k <= 10; ++k) {
      double dp = banach::lower_fundamental_lambda(blocks, outer, k);
      double brute =
          banach::lower_fundamental_lambda_bruteforce(blocks, outer, k);
      CHECK(dp == brute);
      CHECK(dp >= prev);
      prev = dp;
    }
    CHECK(banach::lower_fundamental_lambda(blocks, outer, 0) == 0.0);
  }
  // The sup-norm (max-block) accumulation agrees with brute force too.
  std::vector<ThreeValuedSystem> blocks;
  for (int n = 1; n <= 3; ++n)
    blocks.push_back(three_valued_system(n, Exponent(1.5), 1.0));
  Exponent inf = banach::exponent_inf();
  for (int k = 0; k <= 6; ++k)
    CHECK(banach::lower_fundamental_lambda(blocks, inf, k) ==
          banach::lower_fundamental_lambda_bruteforce(blocks, inf, k));
}

TEST_CASE("lambda argument validation") {
  std::vector<ThreeValuedSystem> blocks{
      three_valued_system(2, Exponent(1.5), 1.0)};
  CHECK_THROWS_AS(banach::lower_fundamental_lambda(blocks, Exponent(1.5), 3),
                  ConfigError);
  CHECK_THROWS_AS(banach::lower_fundamental_lambda(blocks, Exponent(1.5), -1),
                  ConfigError);
}
