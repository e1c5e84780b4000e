// l_p norms, the intersection-ball norm, space specifications and their JSON
// round trip.  The l_p oracle here recomputes norms in the log domain with
// long-double accumulation, independent of the library's scaling strategy.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "banach/errors.hpp"
#include "banach/exponent.hpp"
#include "banach/spaces.hpp"

using banach::Exponent;
using banach::exponent_inf;
using banach::lp_norm;
using banach::SpaceSpec;
using banach::Vector;

namespace {

// Log-domain l_p oracle: ||x||_p = M * (sum (|x_i|/M)^p)^(1/p) is avoided on
// purpose; instead exp((1/p) log sum exp(p log |x_i|)) with the max factored
// out, in long double.
double lp_oracle(const Vector& x, double p) {
  long double mx = 0.0L;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    mx = std::max(mx, static_cast<long double>(std::fabs(x[i])));
  if (mx == 0.0L) return 0.0;
  long double sum = 0.0L;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    long double t = static_cast<long double>(std::fabs(x[i])) / mx;
    if (t > 0.0L)
      sum += std::exp(static_cast<long double>(p) * std::log(t));
  }
  return static_cast<double>(mx * std::exp(std::log(sum) / p));
}

Vector random_vector(std::mt19937_64& gen, int n) {
  std::normal_distribution<double> gauss;
  Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = gauss(gen);
  return x;
}

}  // namespace

TEST_CASE("exponent conjugation is an exact involution") {
  Exponent p(1.5);
  CHECK(p.conjugate().value() == 3.0);
  CHECK(p.conjugate().conjugate().value() == 1.5);
  CHECK(Exponent(1.0).conjugate().is_inf());
  CHECK(exponent_inf().conjugate().value() == 1.0);
  CHECK(Exponent(2.0).conjugate().value() == 2.0);
  // 1/p + 1/p' == 1 exactly for the stored pair at p = 1.3 (whose conjugate
  // is not representable exactly) is too strong; but the involution is exact.
  Exponent odd(1.3);
  CHECK(odd.conjugate().conjugate() == odd);
  CHECK(odd.reciprocal() == doctest::Approx(1.0 / 1.3).epsilon(1e-16));
  CHECK(exponent_inf().reciprocal() == 0.0);
  CHECK_THROWS_AS(Exponent(0.5), std::invalid_argument);
  CHECK_THROWS_AS(Exponent(-3.0), std::invalid_argument);
}

TEST_CASE("lp_norm: pinned values and special exponents") {
  Vector ones = Vector::Ones(4);
  CHECK(lp_norm(ones, Exponent(1.5)) ==
        doctest::Approx(2.5198420997897464).epsilon(1e-15));  // 4^(2/3)
  CHECK(lp_norm(ones, Exponent(1.0)) == 4.0);
  CHECK(lp_norm(ones, exponent_inf()) == 1.0);
  CHECK(lp_norm(ones, Exponent(2.0)) == 2.0);
  Vector x(3);
  x << 3.0, -4.0, 0.0;
  CHECK(lp_norm(x, Exponent(2.0)) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(lp_norm(x, exponent_inf()) == 4.0);
  CHECK(lp_norm(Vector::Zero(5), Exponent(1.7)) == 0.0);
}

TEST_CASE("lp_norm agrees with the log-domain oracle") {
  std::mt19937_64 gen(2024);
  for (double p : {1.1, 1.3, 1.5, 2.0, 2.5, 3.0, 7.0}) {
    for (int trial = 0; trial < 40; ++trial) {
      Vector x = random_vector(gen, 1 + (trial % 8));
      double lib = lp_norm(x, Exponent(p));
      double ora = lp_oracle(x, p);
      CHECK(lib == doctest::Approx(ora).epsilon(1e-13));
    }
  }
}

TEST_CASE("lp_norm: homogeneity, triangle, monotone in p") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 30; ++trial) {
    Vector x = random_vector(gen, 6), y = random_vector(gen, 6);
    for (double p : {1.0, 1.4, 2.0, 3.5}) {
      Exponent ep(p);
      CHECK(lp_norm(2.5 * x, ep) ==
            doctest::Approx(2.5 * lp_norm(x, ep)).epsilon(1e-14));
      CHECK(lp_norm(x + y, ep) <=
            (lp_norm(x, ep) + lp_norm(y, ep)) * (1 + 1e-14));
    }
    CHECK(lp_norm(x, Exponent(1.2)) >= lp_norm(x, Exponent(1.9)) * (1 - 1e-14));
    CHECK(lp_norm(x, Exponent(1.9)) >= lp_norm(x, Exponent(4.0)) * (1 - 1e-14));
  }
}

TEST_CASE("emax norm is the max of the two parts") {
  std::mt19937_64 gen(11);
  Exponent p_prime(3.0);
  for (int trial = 0; trial < 30; ++trial) {
    Vector x = random_vector(gen, 5);
    for (double v : {0.25, 0.5, 1.0}) {
      double e = banach::emax_norm(x, p_prime, v);
      double a = lp_norm(x, p_prime);
      double b = v * lp_norm(x, Exponent(2.0));
      CHECK(e == doctest::Approx(std::max(a, b)).epsilon(1e-15));
    }
  }
  // With v = 1 and p' > 2 the l_2 part dominates everywhere.
  Vector ones = Vector::Ones(4);
  CHECK(banach::emax_norm(ones, p_prime, 1.0) ==
        doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("space specs evaluate and round-trip through JSON") {
  std::mt19937_64 gen(17);
  SpaceSpec lp = SpaceSpec::make_lp(4, Exponent(1.5));
  SpaceSpec em = SpaceSpec::make_emax(4, Exponent(3.0), 0.5);
  SpaceSpec fs = SpaceSpec::make_fspan(4, Exponent(1.5), 0.5);
  SpaceSpec bl = SpaceSpec::make_blocksum(Exponent(1.5), {lp, em, fs});

  CHECK(banach::coordinate_dim(lp) == 4);
  CHECK(banach::coordinate_dim(bl) == 12);
  CHECK(banach::ambient_dim(fs) == 81);  // 3^4 atoms

  for (int trial = 0; trial < 10; ++trial) {
    Vector x = random_vector(gen, 4);
    CHECK(banach::space_norm(lp, x) ==
          doctest::Approx(lp_norm(x, Exponent(1.5))).epsilon(1e-15));
    CHECK(banach::space_norm(em, x) ==
          doctest::Approx(banach::emax_norm(x, Exponent(3.0), 0.5))
              .epsilon(1e-15));
    // Block-sum: l_outer of the block norms.
    Vector big = random_vector(gen, 12);
    Vector parts(3);
    parts << banach::space_norm(lp, big.segment(0, 4)),
        banach::space_norm(em, big.segment(4, 4)),
        banach::space_norm(fs, big.segment(8, 4));
    CHECK(banach::space_norm(bl, big) ==
          doctest::Approx(lp_norm(parts, Exponent(1.5))).epsilon(1e-14));
    // JSON round trip preserves the norm function exactly.
    SpaceSpec bl2 = banach::space_from_json(banach::space_to_json(bl));
    CHECK(banach::space_norm(bl2, big) == banach::space_norm(bl, big));
  }

  // Exponent JSON keeps infinity distinguishable.
  CHECK(banach::exponent_from_json(banach::exponent_to_json(exponent_inf()))
            .is_inf());
  CHECK(banach::exponent_from_json(banach::exponent_to_json(Exponent(1.3)))
            .value() == 1.3);
}
