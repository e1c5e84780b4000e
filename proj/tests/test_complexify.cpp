// Complexified norms and operators: closed-form l_2 behavior, the sandwich
// inequalities, block-matrix structure and norm preservation.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Core>
#include <Eigen/SVD>

#include "banach/complexify.hpp"
#include "banach/exponent.hpp"
#include "banach/opnorm.hpp"
#include "banach/spaces.hpp"

using banach::ComplexNormResult;
using banach::ComplexOpNormResult;
using banach::Exponent;
using banach::lp_norm;
using banach::Matrix;
using banach::Vector;

namespace {

Vector random_vector(std::mt19937_64& gen, int n) {
  std::normal_distribution<double> gauss;
  Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = gauss(gen);
  return x;
}

banach::NormFn lp_fn(double p) {
  return [p](const Vector& v) { return lp_norm(v, Exponent(p)); };
}

}  // namespace

TEST_CASE("complexified l_2 norm has the closed form sqrt(max eigen)") {
  // For N = l_2, sup_phi ||x cos + y sin||_2 is the largest singular value
  // of the 2-column matrix [x y].
  std::mt19937_64 gen(64);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + (trial % 5);
    Vector x = random_vector(gen, n), y = random_vector(gen, n);
    Matrix xy(n, 2);
    xy.col(0) = x;
    xy.col(1) = y;
    Eigen::JacobiSVD<Matrix> svd(xy);
    double expect = svd.singularValues()[0];
    ComplexNormResult r = banach::complex_vector_norm(lp_fn(2.0), x, y);
    CHECK(r.lower <= expect * (1 + 1e-12));
    CHECK(r.upper >= expect * (1 - 1e-12));
    CHECK(r.value == doctest::Approx(expect).epsilon(1e-6));
    // The reported phi attains the reported lower bound.
    Vector at = x * std::cos(r.phi) + y * std::sin(r.phi);
    CHECK(lp_norm(at, Exponent(2.0)) == doctest::Approx(r.lower).epsilon(1e-12));
  }
}

TEST_CASE("sandwich: half the sum bounds the complex norm below") {
  std::mt19937_64 gen(65);
  for (double p : {1.5, 2.0, 3.0}) {
    for (int trial = 0; trial < 30; ++trial) {
      int n = 1 + (trial % 6);
      Vector x = random_vector(gen, n), y = random_vector(gen, n);
      double nx = lp_norm(x, Exponent(p)), ny = lp_norm(y, Exponent(p));
      ComplexNormResult r = banach::complex_vector_norm(lp_fn(p), x, y);
      CHECK(0.5 * (nx + ny) <= r.value * (1 + 1e-12) + 1e-15);
      CHECK(r.value <= (nx + ny) * (1 + 1e-12));
      CHECK(r.lower <= r.upper * (1 + 1e-15));
      // Max of the two endpoint angles is also a lower bound.
      CHECK(r.value >= std::max(nx, ny) * (1 - 1e-9));
    }
  }
}

TEST_CASE("degenerate pairs: y = 0 and y = x") {
  Vector x(3);
  x << 1.0, -2.0, 0.5;
  for (double p : {1.5, 2.0}) {
    ComplexNormResult r0 =
        banach::complex_vector_norm(lp_fn(p), x, Vector::Zero(3));
    CHECK(r0.value == doctest::Approx(lp_norm(x, Exponent(p))).epsilon(1e-12));
    // x + ix: sup_phi |cos + sin| N(x) = sqrt(2) N(x).
    ComplexNormResult r1 = banach::complex_vector_norm(lp_fn(p), x, x);
    CHECK(r1.value ==
          doctest::Approx(std::sqrt(2.0) * lp_norm(x, Exponent(p)))
              .epsilon(1e-6));
  }
}

TEST_CASE("block matrix represents complex multiplication") {
  std::mt19937_64 gen(66);
  Matrix r = Matrix::Zero(2, 2), s = Matrix::Zero(2, 2);
  r << 1, 2, 3, 4;
  s << 0, -1, 1, 0;
  Matrix tc = banach::complexify_operator(r, s);
  REQUIRE(tc.rows() == 4);
  REQUIRE(tc.cols() == 4);
  // (R + iS)(x + iy) = (Rx - Sy) + i(Sx + Ry).
  for (int trial = 0; trial < 10; ++trial) {
    Vector x = random_vector(gen, 2), y = random_vector(gen, 2);
    Vector stacked(4);
    stacked << x, y;
    Vector out = tc * stacked;
    Eigen::Vector2cd zin(std::complex<double>(x[0], y[0]),
                         std::complex<double>(x[1], y[1]));
    Eigen::Matrix2cd zm;
    zm(0, 0) = {r(0, 0), s(0, 0)};
    zm(0, 1) = {r(0, 1), s(0, 1)};
    zm(1, 0) = {r(1, 0), s(1, 0)};
    zm(1, 1) = {r(1, 1), s(1, 1)};
    Eigen::Vector2cd zout = zm * zin;
    CHECK(out[0] == doctest::Approx(zout[0].real()).epsilon(1e-13));
    CHECK(out[1] == doctest::Approx(zout[1].real()).epsilon(1e-13));
    CHECK(out[2] == doctest::Approx(zout[0].imag()).epsilon(1e-13));
    CHECK(out[3] == doctest::Approx(zout[1].imag()).epsilon(1e-13));
  }
  // The one-argument overload sets S = 0.
  Matrix tr = banach::complexify_operator(r);
  CHECK(tr.block(0, 0, 2, 2) == r);
  CHECK(tr.block(0, 2, 2, 2) == Matrix::Zero(2, 2));
}

TEST_CASE("complexification preserves the operator norm on l_2") {
  // On Hilbert space the complexified norm equals the real norm exactly; the
  // certificate brackets sigma_max.
  std::mt19937_64 gen(67);
  banach::OpNormOptions opt;
  opt.restarts = 16;
  for (int trial = 0; trial < 5; ++trial) {
    Matrix t = Matrix(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t(i, j) = random_vector(gen, 1)[0];
    Eigen::JacobiSVD<Matrix> svd(t);
    double sigma = svd.singularValues()[0];
    opt.seed = 900 + trial;
    ComplexOpNormResult c =
        banach::complex_op_norm(t, Exponent(2.0), Exponent(2.0), opt);
    CHECK(c.lower <= sigma * (1 + 1e-9));
    CHECK(c.upper >= sigma * (1 - 1e-9));
    CHECK(c.value == doctest::Approx(sigma).epsilon(2e-3));
  }
}

TEST_CASE("complex operator norm equals the real norm within tolerance") {
  std::mt19937_64 gen(68);
  banach::OpNormOptions opt;
  opt.restarts = 32;
  for (double p : {1.5, 2.0}) {
    for (int trial = 0; trial < 5; ++trial) {
      Matrix t(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t(i, j) = random_vector(gen, 1)[0];
      opt.seed = 40 + trial;
      ComplexOpNormResult c =
          banach::complex_op_norm(t, Exponent(p), Exponent(p), opt);
      banach::OpNormOptions ropt = opt;
      ropt.extra_starts = {c.witness_x, c.witness_y};
      banach::NormEstimate real =
          banach::op_norm_estimate(t, Exponent(p), Exponent(p), ropt);
      CHECK(std::fabs(c.value - real.value) <=
            2e-3 * std::max(1.0, real.value));
      // The real norm is always an upper bound for the complexification.
      CHECK(c.lower <= real.upper * (1 + 1e-9));
    }
  }
}
