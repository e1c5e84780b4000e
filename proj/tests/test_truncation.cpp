// Truncation indices, lower-bound preservation certificates, and exact
// integer rank / intersection computations.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "banach/errors.hpp"
#include "banach/exponent.hpp"
#include "banach/spaces.hpp"
#include "banach/truncation.hpp"

using banach::Exponent;
using banach::IntMatrix;
using banach::Matrix;
using banach::OperatorSpec;
using banach::SpaceSpec;
using banach::TruncationOptions;
using banach::Vector;

namespace {

Matrix e1_plus_e5() {
  Matrix e = Matrix::Zero(6, 1);
  e(0, 0) = 1.0;
  e(4, 0) = 1.0;
  return e;
}

}  // namespace

TEST_CASE("minimal truncation index in l_2: exact tail ratios") {
  // span{e1 + e5} in l_2^6: the tail ratio is 1 for N = 0, 1/sqrt(2) for
  // N in 1..4 (only e5 survives), and 0 for N >= 5.
  Matrix e = e1_plus_e5();
  SpaceSpec l2 = SpaceSpec::make_lp(6, Exponent(2.0));
  CHECK(banach::min_truncation_index(e, l2, 0.8) == 1);
  CHECK(banach::min_truncation_index(e, l2, 0.71) == 1);
  CHECK(banach::min_truncation_index(e, l2, 0.5) == 5);
  CHECK(banach::min_truncation_index(e, l2, 1.0) == 0);
}

TEST_CASE("minimal truncation index in l_1.5 via the ratio search") {
  // Same span in l_1.5^6: the tail ratio for N in 1..4 is
  // 1 / 2^(2/3) ~ 0.63.
  Matrix e = e1_plus_e5();
  SpaceSpec l15 = SpaceSpec::make_lp(6, Exponent(1.5));
  CHECK(banach::min_truncation_index(e, l15, 0.7) == 1);
  CHECK(banach::min_truncation_index(e, l15, 0.62) == 5);
}

TEST_CASE("two-dimensional span needs the worst direction") {
  // span{e1, e6}: any delta < 1 forces truncating past coordinate 6 because
  // e6 alone survives every earlier cut at full norm.
  Matrix e = Matrix::Zero(6, 2);
  e(0, 0) = 1.0;
  e(5, 1) = 1.0;
  SpaceSpec l2 = SpaceSpec::make_lp(6, Exponent(2.0));
  CHECK(banach::min_truncation_index(e, l2, 0.9) == 6);
  // But span{e1 + 10 e2} dies after two coordinates.
  Matrix f = Matrix::Zero(6, 1);
  f(0, 0) = 1.0;
  f(1, 0) = 10.0;
  CHECK(banach::min_truncation_index(f, l2, 0.2) == 2);
}

TEST_CASE("lower-bound preservation: identity pins the gamma equation") {
  // T = identity on l_2^6, E = e1 + e5, eps = 1, delta = 0.9.  The budget
  // gamma solves 1/(1+g) - g/(1-g) = 0.9, i.e. g = (sqrt(4.04) - 2)/0.2.
  OperatorSpec t{Matrix::Identity(6, 6), Exponent(2.0), Exponent(2.0)};
  banach::TruncationCertificate cert =
      banach::truncation_preserves_lower_bound(t, e1_plus_e5(), 1.0, 0.9);
  double gamma_star = (std::sqrt(4.04) - 2.0) / 0.2;
  CHECK(cert.gamma == doctest::Approx(gamma_star).epsilon(1e-3));
  CHECK(cert.gamma < gamma_star + 1e-9);  // never overshoots the equation
  CHECK(cert.eps_verified == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(cert.norm_upper >= 1.0 - 1e-9);
  // The tail budget gamma ~ 0.05 < 1/sqrt(2) forces truncation at N = 5.
  CHECK(cert.index == 5);
  // The identity restricted to the truncated span still has lower bound 1.
  CHECK(cert.certified_delta >= 0.9);
}

TEST_CASE("lower-bound preservation for a genuine contraction") {
  // T scales coordinate 5 by 0.6: on span{e1 + e5} the measured eps is
  // sqrt(1 + 0.36) / sqrt(2).
  Matrix a = Matrix::Identity(6, 6);
  a(4, 4) = 0.6;
  OperatorSpec t{a, Exponent(2.0), Exponent(2.0)};
  double eps = std::sqrt(1.36 / 2.0);
  banach::TruncationCertificate cert =
      banach::truncation_preserves_lower_bound(t, e1_plus_e5(), eps * 0.999,
                                               0.7);
  CHECK(cert.eps_verified == doctest::Approx(eps).epsilon(1e-9));
  CHECK(cert.certified_delta >= 0.7);
  CHECK(cert.gamma > 0.0);
  // Demanding an unverifiable eps rejects the hypothesis as inconsistent.
  CHECK_THROWS_AS(banach::truncation_preserves_lower_bound(
                      t, e1_plus_e5(), 1.01, 0.7),
                  banach::ConfigError);
}

TEST_CASE("exact integer rank") {
  IntMatrix a(2, 2);
  a << 1, 2, 2, 4;
  CHECK(banach::exact_rank(a) == 1);
  CHECK(banach::exact_rank(IntMatrix::Identity(5, 5)) == 5);
  CHECK(banach::exact_rank(IntMatrix::Zero(3, 4)) == 0);
  IntMatrix b(3, 4);
  b << 1, 0, 2, 3,
       0, 1, 4, 5,
       1, 1, 6, 8;  // row3 = row1 + row2
  CHECK(banach::exact_rank(b) == 2);
  // Large entries that would round in double precision stay exact.
  IntMatrix c(2, 2);
  c << 1000000007, 1, 1, 1000000009;
  CHECK(banach::exact_rank(c) == 2);
  IntMatrix d(2, 2);
  std::int64_t big = 3037000499;  // floor(sqrt(2^63))
  d << big, big, big, big;
  CHECK(banach::exact_rank(d) == 1);
}

TEST_CASE("exact subspace intersection dimensions") {
  auto col = [](int n, int i) {
    IntMatrix m = IntMatrix::Zero(n, 1);
    m(i, 0) = 1;
    return m;
  };
  IntMatrix e(4, 2), z(4, 2);
  e << 1, 0, 0, 1, 0, 0, 0, 0;  // span{e1, e2}
  z << 0, 0, 1, 0, 0, 1, 0, 0;  // span{e2, e3}
  banach::SubspaceIntersection s = banach::subspace_intersection(e, z);
  CHECK(s.dim_e == 2);
  CHECK(s.dim_z == 2);
  CHECK(s.dim_sum == 3);
  CHECK(s.dim_intersection == 1);
  // Disjoint spans.
  banach::SubspaceIntersection s2 =
      banach::subspace_intersection(col(4, 0), col(4, 1));
  CHECK(s2.dim_intersection == 0);
  // Identical spans presented by different generators.
  IntMatrix g1(3, 2), g2(3, 2);
  g1 << 1, 0, 0, 1, 0, 0;
  g2 << 1, 1, 1, -1, 0, 0;
  banach::SubspaceIntersection s3 = banach::subspace_intersection(g1, g2);
  CHECK(s3.dim_intersection == 2);
  CHECK(s3.dim_sum == 2);
}
