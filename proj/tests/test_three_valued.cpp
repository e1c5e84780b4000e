// Three-valued independent systems: moment identities, exchangeability,
// isometric embedding and the probability layout.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "banach/errors.hpp"
#include "banach/exponent.hpp"
#include "banach/spaces.hpp"
#include "banach/three_valued.hpp"

using banach::ConfigError;
using banach::Exponent;
using banach::ThreeValuedSystem;
using banach::three_valued_system;
using banach::Vector;

TEST_CASE("atom layout: amplitude and probability, pinned at p=1.5, v=0.5") {
  ThreeValuedSystem sys = three_valued_system(1, Exponent(1.5), 0.5);
  // amp = v^(-2/(2-p)) = 0.5^-4 = 16; P(|f| = amp) = v^(2p/(2-p)) = 0.5^6.
  CHECK(sys.amplitude == doctest::Approx(16.0).epsilon(1e-15));
  CHECK(sys.atom_prob == doctest::Approx(1.0 / 64.0).epsilon(1e-15));
  CHECK_FALSE(sys.prune_zero);
  // v = 1 collapses to the sign case: amp = 1, no zero atom.
  ThreeValuedSystem sign = three_valued_system(1, Exponent(1.5), 1.0);
  CHECK(sign.amplitude == 1.0);
  CHECK(sign.atom_prob == 1.0);
  CHECK(sign.prune_zero);
}

TEST_CASE("moment identities: unit L_p norm and L_2 norm 1/v") {
  for (double p : {1.3, 1.5, 1.8}) {
    for (double v : {0.25, 0.5, 1.0}) {
      for (int n : {1, 3, 5, 7}) {
        ThreeValuedSystem sys = three_valued_system(n, Exponent(p), v);
        Vector e1 = Vector::Zero(n);
        e1[0] = 1.0;
        CHECK(banach::fspan_moment(sys, e1, p) ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(banach::fspan_moment(sys, e1, 2.0) ==
              doctest::Approx(1.0 / v).epsilon(1e-12));
        CHECK(banach::total_probability(sys) ==
              doctest::Approx(1.0).epsilon(1e-14));
        if (n >= 2)
          CHECK(banach::pairwise_independence_error(sys) <= 1e-15);
      }
    }
  }
}

TEST_CASE("L_2 moment of any combination is ||a||_2 / v") {
  std::mt19937_64 gen(42);
  std::normal_distribution<double> gauss;
  for (double p : {1.3, 1.5, 1.8}) {
    for (double v : {0.25, 0.5, 1.0}) {
      ThreeValuedSystem sys = three_valued_system(6, Exponent(p), v);
      for (int trial = 0; trial < 100; ++trial) {
        Vector a(6);
        for (int i = 0; i < 6; ++i) a[i] = gauss(gen);
        double lhs = banach::fspan_moment(sys, a, 2.0);
        double rhs = banach::lp_norm(a, Exponent(2.0)) / v;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("pinned span norms") {
  // p = 1.5, v = 1, a = (1,1): E|f_1 + f_2|^1.5 = (1/2) 2^1.5, so the norm
  // is 2^(1/3).
  ThreeValuedSystem sign = three_valued_system(2, Exponent(1.5), 1.0);
  Vector ones = Vector::Ones(2);
  CHECK(banach::fspan_norm(sign, ones) ==
        doctest::Approx(std::exp2(1.0 / 3.0)).epsilon(1e-14));
  // Single vector has norm exactly 1 for every admissible (p, v).
  ThreeValuedSystem sys = three_valued_system(1, Exponent(1.7), 0.3);
  CHECK(banach::fspan_norm(sys, Vector::Ones(1)) ==
        doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("moments are nondecreasing in the order (Lyapunov)") {
  ThreeValuedSystem sys = three_valued_system(5, Exponent(1.5), 0.5);
  std::mt19937_64 gen(7);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 20; ++trial) {
    Vector a(5);
    for (int i = 0; i < 5; ++i) a[i] = gauss(gen);
    double m1 = banach::fspan_moment(sys, a, 1.0);
    double mp = banach::fspan_moment(sys, a, 1.5);
    double m2 = banach::fspan_moment(sys, a, 2.0);
    CHECK(m1 <= mp * (1 + 1e-14));
    CHECK(mp <= m2 * (1 + 1e-14));
  }
}

TEST_CASE("exchangeability is bit-exact: permutations and sign flips") {
  ThreeValuedSystem sys = three_valued_system(6, Exponent(1.4), 0.6);
  Vector a(6);
  a << 0.3, -1.2, 0.0, 2.5, -0.7, 1.1;
  double base = banach::fspan_norm(sys, a);
  std::mt19937_64 gen(99);
  std::vector<int> idx{0, 1, 2, 3, 4, 5};
  for (int trial = 0; trial < 50; ++trial) {
    std::shuffle(idx.begin(), idx.end(), gen);
    Vector b(6);
    for (int i = 0; i < 6; ++i)
      b[i] = ((gen() & 1) ? 1.0 : -1.0) * a[idx[i]];
    CHECK(banach::fspan_norm(sys, b) == base);  // bitwise
  }
  // Indicator helper agrees bitwise with an explicit indicator vector placed
  // anywhere in the support.
  for (int k = 1; k <= 6; ++k) {
    Vector ind = Vector::Zero(6);
    for (int i = 0; i < k; ++i) ind[5 - i] = -1.0;
    CHECK(banach::fspan_norm_indicator(sys, k) == banach::fspan_norm(sys, ind));
  }
}

TEST_CASE("embedding into l_p is isometric") {
  for (double v : {0.5, 1.0}) {
    Exponent p(1.5);
    ThreeValuedSystem sys = three_valued_system(4, p, v);
    std::mt19937_64 gen(3);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 10; ++trial) {
      Vector a(4);
      for (int i = 0; i < 4; ++i) a[i] = gauss(gen);
      Vector img = banach::fspan_embed(sys, a);
      CHECK(banach::lp_norm(img, p) ==
            doctest::Approx(banach::fspan_norm(sys, a)).epsilon(1e-13));
    }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(three_valued_system(3, Exponent(2.0), 0.5), ConfigError);
  CHECK_THROWS_AS(three_valued_system(3, Exponent(1.0), 0.5), ConfigError);
  CHECK_THROWS_AS(three_valued_system(3, Exponent(1.5), 0.0), ConfigError);
  CHECK_THROWS_AS(three_valued_system(3, Exponent(1.5), 1.5), ConfigError);
  CHECK_THROWS_AS(three_valued_system(-1, Exponent(1.5), 0.5), ConfigError);
  ThreeValuedSystem sys = three_valued_system(13, Exponent(1.5), 0.5);
  CHECK_THROWS_AS(banach::fspan_moment(sys, Vector::Ones(13), 1.5),
                  ConfigError);
  CHECK_THROWS_AS(banach::fspan_moment(sys, Vector::Ones(13), 0.5),
                  ConfigError);
  CHECK_THROWS_AS(banach::fspan_norm_indicator(sys, 14), ConfigError);
}
