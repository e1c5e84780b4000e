#include "banach/truncation.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "banach/errors.hpp"
#include "banach/optimize.hpp"

namespace banach {

namespace {

bool is_l2(const SpaceSpec& s) {
  return s.kind == SpaceSpec::Kind::lp && s.p.is_two();
}

// sup_c ||Tail_N(E c)|| / ||E c|| in the given space norm.
double tail_ratio(const Matrix& E, const SpaceSpec& space, int N,
                  const TruncationOptions& opt) {
  const Eigen::Index d = E.rows();
  const Eigen::Index k = E.cols();
  if (N >= d) return 0.0;
  if (is_l2(space)) {
    // E = Q R with orthonormal Q: the ratio is the top singular value of the
    // tail rows of Q.
    Eigen::HouseholderQR<Matrix> qr(E);
    Matrix Q = qr.householderQ() * Matrix::Identity(d, k);
    Matrix tail = Q.bottomRows(d - N);
    Eigen::JacobiSVD<Matrix> svd(tail);
    return svd.singularValues()[0];
  }
  PatternSearchOptions ps;
  ps.seed = opt.seed;
  auto tail_of = [&](const Vector& c) {
    Vector e = E * c;
    e.head(N).setZero();
    return e;
  };
  return sup_norm_ratio(
      [&](const Vector& c) { return space_norm(space, tail_of(c)); },
      [&](const Vector& c) { return space_norm(space, E * c); },
      static_cast<int>(k), {}, ps);
}

// inf_c ||A E c||_q / ||E c||_p, exact for the l_2 -> l_2 pair.
double restricted_lower(const OperatorSpec& T, const Matrix& E,
                        const SpaceSpec& dom, const TruncationOptions& opt) {
  const Eigen::Index k = E.cols();
  if (T.dom_p.is_two() && T.cod_q.is_two()) {
    Eigen::HouseholderQR<Matrix> qr(E);
    Matrix Q = qr.householderQ() * Matrix::Identity(E.rows(), k);
    Eigen::JacobiSVD<Matrix> svd(T.A * Q);
    return svd.singularValues()[svd.singularValues().size() - 1];
  }
  PatternSearchOptions ps;
  ps.seed = opt.seed + 1;
  double neg = sup_norm_ratio(
      [&](const Vector& c) { return -lp_norm(T.A * (E * c), T.cod_q); },
      [&](const Vector& c) { return space_norm(dom, E * c); },
      static_cast<int>(k), {}, ps);
  return -neg;
}

}  // namespace

int min_truncation_index(const Matrix& E, const SpaceSpec& space, double delta,
                         const TruncationOptions& opt) {
  if (!(delta > 0.0 && delta <= 1.0))
    throw ConfigError("min_truncation_index: delta must lie in (0, 1]");
  if (E.rows() != coordinate_dim(space))
    throw ConfigError("min_truncation_index: E rows must match the space");
  if (E.cols() == 0 || E.cwiseAbs().maxCoeff() == 0.0)
    throw ConfigError("min_truncation_index: E must span something");
  for (int N = 0; N <= E.rows(); ++N) {
    if (tail_ratio(E, space, N, opt) <= delta) return N;
  }
  return static_cast<int>(E.rows());
}

TruncationCertificate truncation_preserves_lower_bound(
    const OperatorSpec& T, const Matrix& E, double eps, double delta,
    const TruncationOptions& opt) {
  if (!(eps > 0.0) || !(delta > 0.0) || delta >= eps)
    throw ConfigError(
        "truncation_preserves_lower_bound: need 0 < delta < eps");
  SpaceSpec dom = SpaceSpec::make_lp(static_cast<int>(E.rows()), T.dom_p);

  TruncationCertificate cert;
  cert.eps_verified = restricted_lower(T, E, dom, opt);
  if (cert.eps_verified < eps * (1.0 - 1e-9))
    throw ConfigError(
        "truncation_preserves_lower_bound: T is not bounded below by eps on "
        "span(E)");
  cert.norm_upper = op_norm_upper(T.A, T.dom_p, T.cod_q);

  // Largest gamma with eps/(1+g) - ||T|| g/(1-g) >= delta; the left side is
  // strictly decreasing from eps at g = 0, so bisection keeps lo feasible.
  auto g = [&](double x) {
    return eps / (1.0 + x) - cert.norm_upper * x / (1.0 - x) - delta;
  };
  double lo = 0.0, hi = 1.0 - 1e-12;
  if (g(hi) < 0.0) {
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      if (g(mid) >= 0.0)
        lo = mid;
      else
        hi = mid;
    }
  } else {
    lo = hi;
  }
  cert.gamma = lo;
  if (!(cert.gamma > 0.0))
    throw SolverError(
        "truncation_preserves_lower_bound: no positive truncation budget",
        0.0, 0.0);

  cert.index = min_truncation_index(E, dom, cert.gamma, opt);

  // Verify the conclusion directly on the truncated span (S_N keeps
  // coordinates 1..N).
  Matrix SNE = E;
  SNE.bottomRows(E.rows() - cert.index).setZero();
  // S_N keeps coordinates 1..N; make sure the truncated span kept dimension.
  Eigen::ColPivHouseholderQR<Matrix> qr(SNE);
  qr.setThreshold(1e-10);
  if (qr.rank() < E.cols())
    throw SolverError(
        "truncation_preserves_lower_bound: truncation collapsed the span",
        0.0, 0.0);
  cert.certified_delta = restricted_lower(T, SNE, dom, opt);
  return cert;
}

int exact_rank(const IntMatrix& M) {
  using Wide = __int128;
  const Eigen::Index rows = M.rows(), cols = M.cols();
  std::vector<std::vector<Wide>> a(static_cast<size_t>(rows),
                                   std::vector<Wide>(static_cast<size_t>(cols)));
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = M(i, j);

  // Bareiss fraction-free elimination: all intermediate entries stay integer
  // minors of M, so no thresholds are needed to decide zero.
  Wide prev = 1;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = rank; i < rows; ++i) {
      if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(rank)]);
    Wide p = a[static_cast<size_t>(rank)][static_cast<size_t>(col)];
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        Wide num = a[static_cast<size_t>(i)][static_cast<size_t>(j)] * p -
                   a[static_cast<size_t>(i)][static_cast<size_t>(col)] *
                       a[static_cast<size_t>(rank)][static_cast<size_t>(j)];
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] = num / prev;
      }
      a[static_cast<size_t>(i)][static_cast<size_t>(col)] = 0;
    }
    prev = p;
    ++rank;
  }
  return static_cast<int>(rank);
}

SubspaceIntersection subspace_intersection(const IntMatrix& E,
                                           const IntMatrix& Z) {
  if (E.rows() != Z.rows())
    throw ConfigError("subspace_intersection: ambient dimensions differ");
  SubspaceIntersection s;
  s.dim_e = exact_rank(E);
  s.dim_z = exact_rank(Z);
  IntMatrix EZ(E.rows(), E.cols() + Z.cols());
  EZ.leftCols(E.cols()) = E;
  EZ.rightCols(Z.cols()) = Z;
  s.dim_sum = exact_rank(EZ);
  s.dim_intersection = s.dim_e + s.dim_z - s.dim_sum;
  return s;
}

}  // namespace banach
