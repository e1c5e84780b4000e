#include "banach/snumbers.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "banach/errors.hpp"
#include "banach/optimize.hpp"
#include "banach/rng.hpp"
#include "banach/spaces.hpp"

namespace banach {

namespace {

bool hilbert_case(const OperatorSpec& T) {
  return T.dom_p.is_two() && T.cod_q.is_two();
}

Matrix orthonormalize(const Matrix& V) {
  Eigen::HouseholderQR<Matrix> qr(V);
  Matrix Q = qr.householderQ() * Matrix::Identity(V.rows(), V.cols());
  return Q;
}

Matrix random_frame(Eigen::Index rows, int n, Rng& rng) {
  Matrix V(rows, n);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (int j = 0; j < n; ++j) V(i, j) = rng.gaussian();
  return orthonormalize(V);
}

// inf over c != 0 of ||A V c||_q / ||V c||_p for an orthonormal frame V.
double inner_infimum(const OperatorSpec& T, const Matrix& V,
                     std::uint64_t seed) {
  const int n = static_cast<int>(V.cols());
  Matrix AV = T.A * V;
  if (hilbert_case(T)) {
    // ||Vc||_2 = ||c||_2, so the infimum is the smallest singular value.
    Eigen::JacobiSVD<Matrix> svd(AV);
    return svd.singularValues()[svd.singularValues().size() - 1];
  }
  PatternSearchOptions ps;
  ps.seed = seed;
  // Minimize the ratio: maximize its negation over the coefficient sphere.
  double neg = sup_norm_ratio(
      [&](const Vector& c) { return -lp_norm(AV * c, T.cod_q); },
      [&](const Vector& c) { return lp_norm(V * c, T.dom_p); }, n, {}, ps);
  return -neg;
}

std::vector<Matrix> frame_starts(const OperatorSpec& T, int n, bool left,
                                 const SNumberOptions& opt) {
  const Eigen::Index d = left ? T.A.rows() : T.A.cols();
  std::vector<Matrix> starts;
  // Singular frame of A (exact answer in the Hilbert case).
  Eigen::JacobiSVD<Matrix> svd(T.A,
                               Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Matrix& W = left ? svd.matrixU() : svd.matrixV();
  if (W.cols() >= n) starts.push_back(W.leftCols(n));
  // Coordinate frames for small dimensions.
  if (d <= 6) {
    std::vector<int> idx(static_cast<size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i) idx[static_cast<size_t>(i)] = int(i);
    std::vector<int> comb(static_cast<size_t>(n));
    std::function<void(int, int)> rec = [&](int start, int k) {
      if (k == n) {
        Matrix V = Matrix::Zero(d, n);
        for (int j = 0; j < n; ++j) V(comb[static_cast<size_t>(j)], j) = 1.0;
        starts.push_back(V);
        return;
      }
      for (int i = start; i < d; ++i) {
        comb[static_cast<size_t>(k)] = i;
        rec(i + 1, k + 1);
      }
    };
    rec(0, 0);
  }
  for (int r = 0; r < opt.restarts; ++r) {
    Rng rng = Rng::for_trial(opt.seed, 7000 + static_cast<std::uint64_t>(r));
    starts.push_back(random_frame(d, n, rng));
  }
  return starts;
}

// Hill climb over orthonormal frames: QR-retracted random perturbations with
// a shrinking step.  direction = +1 maximizes, -1 minimizes.
double frame_climb(const std::function<double(const Matrix&)>& objective,
                   const std::vector<Matrix>& starts, int iters,
                   std::uint64_t seed, double direction, Matrix* best_frame) {
  double best = -std::numeric_limits<double>::infinity();
  Matrix bestV;
  for (size_t s = 0; s < starts.size(); ++s) {
    Matrix V = starts[s];
    double val = direction * objective(V);
    double step = 0.5;
    int fails = 0;
    Rng rng = Rng::for_trial(seed, 9000 + s);
    for (int it = 0; it < iters && step > 1e-7; ++it) {
      Matrix D(V.rows(), V.cols());
      for (Eigen::Index i = 0; i < V.rows(); ++i)
        for (Eigen::Index j = 0; j < V.cols(); ++j) D(i, j) = rng.gaussian();
      Matrix W = orthonormalize(V + step * D);
      double v = direction * objective(W);
      if (v > val) {
        val = v;
        V = W;
        fails = 0;
      } else if (++fails >= 6) {
        step *= 0.5;
        fails = 0;
      }
    }
    if (val > best) {
      best = val;
      bestV = V;
    }
  }
  if (best_frame) *best_frame = bestV;
  return direction * best;
}

}  // namespace

NormEstimate bernstein_number(const OperatorSpec& T, int n,
                              const SNumberOptions& opt) {
  if (n < 1 || n > T.A.cols())
    throw ConfigError("bernstein_number: need 1 <= n <= cols");
  NormEstimate est;
  est.restarts = opt.restarts;

  if (hilbert_case(T)) {
    Eigen::JacobiSVD<Matrix> svd(T.A,
                                 Eigen::ComputeThinU | Eigen::ComputeThinV);
    Matrix V = svd.matrixV().leftCols(n);
    est.lower = inner_infimum(T, V, opt.seed);  // = sigma_n
    est.value = est.lower;
    est.upper = svd.singularValues()[n - 1] * (1.0 + 1e-12);
    est.method = "exact-svd";
    est.witness = V.col(n - 1);
    return est;
  }

  auto objective = [&](const Matrix& V) {
    return inner_infimum(T, V, opt.seed);
  };
  Matrix bestV;
  double val = frame_climb(objective, frame_starts(T, n, /*left=*/false, opt),
                           opt.outer_iters, opt.seed, +1.0, &bestV);
  est.lower = val;
  est.value = val;
  est.upper = std::max(op_norm_upper(T.A, T.dom_p, T.cod_q), val);
  est.method = "frame-ascent";
  if (bestV.size() > 0) est.witness = bestV.col(0);
  return est;
}

NormEstimate cosingularity_number(const OperatorSpec& T, int n,
                                  const SNumberOptions& opt) {
  if (n < 0) throw ConfigError("cosingularity_number: need n >= 0");
  NormEstimate est;
  est.restarts = opt.restarts;
  const Eigen::Index m = T.A.rows();

  if (n == 0) {
    OpNormOptions o;
    o.seed = opt.seed;
    NormEstimate full = op_norm_estimate(T.A, T.dom_p, T.cod_q, o);
    full.method = "full-norm";
    return full;
  }
  if (n >= m) {
    // The correction space can be the whole codomain.
    est.method = "exact-rank";
    est.witness = Vector::Zero(T.A.cols());
    if (T.A.cols() > 0) est.witness[0] = 1.0;
    return est;
  }

  if (hilbert_case(T)) {
    Eigen::JacobiSVD<Matrix> svd(T.A,
                                 Eigen::ComputeThinU | Eigen::ComputeThinV);
    Matrix V = svd.matrixU().leftCols(n);
    Matrix R = T.A - V * (V.transpose() * T.A);  // (I - V V^T) A
    Eigen::JacobiSVD<Matrix> rs(R);
    double val = rs.singularValues()[0];  // equals sigma_{n+1}(A)
    est.lower = val;
    est.value = val;
    est.upper = val * (1.0 + 1e-12);
    est.method = "exact-svd";
    est.witness = svd.matrixV().col(std::min<Eigen::Index>(
        n, svd.matrixV().cols() - 1));
    return est;
  }

  // General case: minimize over frames the norm of the linear-correction
  // residual (I - V V^+) A.  For orthonormal V the pseudoinverse is V^T.
  OpNormOptions light;
  light.seed = opt.seed;
  light.restarts = 8;
  light.max_iter = 60;
  auto objective = [&](const Matrix& V) {
    Matrix R = T.A - V * (V.transpose() * T.A);
    return op_norm_estimate(R, T.dom_p, T.cod_q, light).lower;
  };
  Matrix bestV;
  frame_climb(objective, frame_starts(T, n, /*left=*/true, opt),
              opt.outer_iters, opt.seed, -1.0, &bestV);

  Matrix R = T.A - bestV * (bestV.transpose() * T.A);
  OpNormOptions full;
  full.seed = opt.seed;
  NormEstimate inner = op_norm_estimate(R, T.dom_p, T.cod_q, full);
  est.lower = inner.lower;
  est.value = inner.lower;
  est.upper = op_norm_upper(R, T.dom_p, T.cod_q);
  est.method = "frame-descent";
  est.witness = inner.witness;
  return est;
}

}  // namespace banach
