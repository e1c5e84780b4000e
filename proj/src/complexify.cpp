#include "banach/complexify.hpp"

#include <cmath>

#include "banach/errors.hpp"
#include "banach/optimize.hpp"
#include "banach/rng.hpp"
#include "banach/spaces.hpp"

namespace banach {

ComplexNormResult complex_vector_norm(const NormFn& norm, const Vector& x,
                                      const Vector& y, int grid) {
  if (x.size() != y.size())
    throw ConfigError("complex_vector_norm: mismatched sizes");
  if (grid < 8) throw ConfigError("complex_vector_norm: grid too coarse");

  auto f = [&](double phi) {
    return norm(std::cos(phi) * x + std::sin(phi) * y);
  };

  const double h = 2.0 * M_PI / grid;
  double best = -1.0, best_phi = 0.0;
  for (int i = 0; i < grid; ++i) {
    double phi = i * h;
    double v = f(phi);
    if (v > best) {
      best = v;
      best_phi = phi;
    }
  }
  double grid_max = best;

  // Golden-section refinement on the two cells around the best grid point.
  {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = best_phi - h, b = best_phi + h;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 200 && (b - a) > 1e-14; ++it) {
      if (fc > fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - gr * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + gr * (b - a);
        fd = f(d);
      }
      double v = std::max(fc, fd);
      double phi = (fc > fd) ? c : d;
      if (v > best) {
        best = v;
        best_phi = phi;
      }
    }
  }

  ComplexNormResult res;
  res.lower = best;
  res.value = best;
  res.phi = best_phi;
  res.upper = std::max(grid_max + (norm(x) + norm(y)) * (h / 2.0), best);
  return res;
}

Matrix complexify_operator(const Matrix& R, const Matrix& S) {
  if (R.rows() != S.rows() || R.cols() != S.cols())
    throw ConfigError("complexify_operator: R and S must share dimensions");
  Matrix T(2 * R.rows(), 2 * R.cols());
  T.topLeftCorner(R.rows(), R.cols()) = R;
  T.topRightCorner(R.rows(), R.cols()) = -S;
  T.bottomLeftCorner(R.rows(), R.cols()) = S;
  T.bottomRightCorner(R.rows(), R.cols()) = R;
  return T;
}

Matrix complexify_operator(const Matrix& R) {
  return complexify_operator(R, Matrix::Zero(R.rows(), R.cols()));
}

ComplexOpNormResult complex_op_norm(const Matrix& T, const Exponent& dom,
                                    const Exponent& cod,
                                    const OpNormOptions& opt) {
  const Eigen::Index n = T.cols();
  NormFn dnorm = [&](const Vector& u) { return lp_norm(u, dom); };
  NormFn cnorm = [&](const Vector& u) { return lp_norm(u, cod); };

  const int coarse = 128, fine = 8192;
  auto ratio_at = [&](const Vector& z, int grid) {
    Vector x = z.head(n), y = z.tail(n);
    double den = complex_vector_norm(dnorm, x, y, grid).lower;
    if (!(den > 1e-120)) return -1.0;
    double num = complex_vector_norm(cnorm, T * x, T * y, grid).lower;
    return num / den;
  };

  // Seeds: the real witness (a real vector is the phase-0 slice of the pair
  // (x, 0)), coordinate pairs, and random pairs via sup_norm_ratio's own
  // starts.
  NormEstimate real_est = op_norm_estimate(T, dom, cod, opt);
  std::vector<Vector> extras;
  {
    Vector z = Vector::Zero(2 * n);
    z.head(n) = real_est.witness;
    extras.push_back(z);
    for (Eigen::Index i = 0; i < std::min<Eigen::Index>(n, 4); ++i) {
      Vector w = Vector::Zero(2 * n);
      w[i] = 1.0;
      w[n + (i + 1) % n] = 1.0;
      extras.push_back(w);
    }
  }

  PatternSearchOptions ps;
  ps.seed = opt.seed;
  ps.max_rounds = 30;
  Vector best_z;
  pattern_search_max([&](const Vector& z) { return ratio_at(z, coarse); },
                     [&]() {
                       std::vector<Vector> starts = extras;
                       for (int r = 0; r < 8; ++r) {
                         Rng rng = Rng::for_trial(opt.seed, 1000 + r);
                         Vector z(2 * n);
                         for (Eigen::Index i = 0; i < 2 * n; ++i)
                           z[i] = rng.gaussian();
                         starts.push_back(z);
                       }
                       return starts;
                     }(),
                     ps, &best_z);

  ComplexOpNormResult res;
  if (best_z.size() == 0) {
    res.upper = real_est.upper;
    return res;
  }
  Vector x = best_z.head(n), y = best_z.tail(n);
  ComplexNormResult den = complex_vector_norm(dnorm, x, y, fine);
  ComplexNormResult num = complex_vector_norm(cnorm, T * x, T * y, fine);
  res.witness_x = x;
  res.witness_y = y;
  res.lower = num.lower / den.upper;
  double opt_upper = num.upper / den.lower;
  res.value = 0.5 * (res.lower + opt_upper);
  // The complexification of a real operator has the same norm, so the real
  // certificate bounds the complex supremum.
  res.upper = std::max(real_est.upper, res.lower);
  return res;
}

}  // namespace banach
