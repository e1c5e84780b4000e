#include "banach/opnorm.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/SVD>

#include "banach/dual_norm.hpp"
#include "banach/errors.hpp"
#include "banach/numeric.hpp"
#include "banach/parallel.hpp"
#include "banach/rng.hpp"
#include "banach/spaces.hpp"

namespace banach {

namespace {

double max_column_norm(const Matrix& A, const Exponent& q) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < A.cols(); ++j)
    best = std::max(best, lp_norm(A.col(j), q));
  return best;
}

double max_row_norm(const Matrix& A, const Exponent& r) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    best = std::max(best, lp_norm(A.row(i).transpose(), r));
  return best;
}

double sigma_max(const Matrix& A) {
  if (std::min(A.rows(), A.cols()) <= 32) {
    Eigen::JacobiSVD<Matrix> svd(A);
    return svd.singularValues()[0];
  }
  Eigen::BDCSVD<Matrix> svd(A);
  return svd.singularValues()[0];
}

// ||id : l_s^n -> l_t^n|| = 1 if s <= t, else n^{1/t - 1/s}.
double identity_cost(double inv_s, double inv_t, Eigen::Index n) {
  if (inv_s >= inv_t) return 1.0;  // s <= t
  return std::pow(static_cast<double>(n), inv_t - inv_s);
}

// Upper certificates computed in one orientation (no transpose duality).
double upper_one_sided(const Matrix& A, const Exponent& p, const Exponent& q) {
  const Eigen::Index n = A.cols();
  const Eigen::Index m = A.rows();
  const double alpha = p.reciprocal();  // 1/p
  const double beta = q.reciprocal();   // 1/q

  double best = std::numeric_limits<double>::infinity();
  auto consider = [&best](double b) {
    if (std::isfinite(b)) best = std::min(best, b);
  };

  // Closed forms when directly applicable.
  if (p.is_one()) consider(max_column_norm(A, q));
  if (q.is_inf()) consider(max_row_norm(A, p.conjugate()));
  if (p.is_two() && q.is_two()) consider(sigma_max(A));

  const double sigma = sigma_max(A);

  // Factorization through the (2,2) anchor:
  // ||A||_{p,q} <= ||id_{p->2}|| * sigma_max * ||id_{2->q}||.
  consider(identity_cost(alpha, 0.5, n) * sigma * identity_cost(0.5, beta, m));

  // Factorization through column anchors (1, b) over a grid of b, paying the
  // identity costs ||id_{p->1}|| and ||id_{b->q}||.
  {
    double into_l1 = identity_cost(alpha, 1.0, n);
    std::vector<double> inv_bs = {beta, 1.0, 0.5, 0.0};
    for (int k = 1; k < 16; ++k) inv_bs.push_back(k / 16.0);
    for (double inv_b : inv_bs) {
      double colnorm = max_column_norm(A, inv_b == 0.0
                                              ? exponent_inf()
                                              : Exponent(1.0 / inv_b));
      consider(into_l1 * colnorm * identity_cost(inv_b, beta, m));
    }
  }

  // Factorization through row anchors (a, inf).
  {
    double from_linf = identity_cost(0.0, beta, m);
    std::vector<double> inv_as = {alpha, 1.0, 0.5, 0.0};
    for (int k = 1; k < 16; ++k) inv_as.push_back(k / 16.0);
    for (double inv_a : inv_as) {
      // row norm uses the conjugate a' of a: 1/a' = 1 - 1/a.
      double inv_ap = 1.0 - inv_a;
      double rownorm = max_row_norm(A, inv_ap == 0.0
                                           ? exponent_inf()
                                           : Exponent(1.0 / inv_ap));
      consider(identity_cost(alpha, inv_a, n) * rownorm * from_linf);
    }
  }

  // Interpolation curves between exact anchors.  For real matrices the three
  // anchor norms agree with their complex extensions, so the interpolated
  // bound ||A|| <= ||A||_0^{1-t} ||A||_1^t is a sound upper certificate.
  const int grid = 1024;

  // (1, q0) with (p1, inf):  1/p = 1 - t + t/p1,  1/q = (1-t)/q0.
  if (beta > 0.0 && alpha < 1.0) {
    double t_lo = std::max(1.0 - alpha, 1.0 / grid);
    double t_hi = 1.0 - beta;
    if (t_lo < t_hi) {
      for (int g = 0; g <= grid; ++g) {
        double t = t_lo + (t_hi - t_lo) * g / grid;
        if (t <= 0.0 || t >= 1.0) continue;
        double inv_q0 = beta / (1.0 - t);
        double inv_p1 = (alpha - 1.0 + t) / t;
        if (inv_q0 > 1.0 || inv_p1 < 0.0 || inv_p1 > 1.0) continue;
        double colnorm = max_column_norm(
            A, inv_q0 == 0.0 ? exponent_inf() : Exponent(1.0 / inv_q0));
        double inv_p1c = 1.0 - inv_p1;
        double rownorm = max_row_norm(
            A, inv_p1c == 0.0 ? exponent_inf() : Exponent(1.0 / inv_p1c));
        consider(std::pow(colnorm, 1.0 - t) * std::pow(rownorm, t));
      }
    }
  }

  // (2, 2) with (p1, inf):  t = 1 - 2/q,  1/p1 = (1/p - 1/q) / t.
  if (beta < 0.5 && alpha >= beta && alpha + beta <= 1.0) {
    double t = 1.0 - 2.0 * beta;
    double inv_p1 = (alpha - beta) / t;
    if (inv_p1 >= 0.0 && inv_p1 <= 1.0) {
      double inv_p1c = 1.0 - inv_p1;
      double rownorm = max_row_norm(
          A, inv_p1c == 0.0 ? exponent_inf() : Exponent(1.0 / inv_p1c));
      consider(std::pow(sigma, 1.0 - t) * std::pow(rownorm, t));
    }
  }

  // (2, 2) with (1, q0):  t = 2/p' = 2(1 - 1/p),  wait: t = 2*alpha - 1.
  if (alpha > 0.5 && beta <= alpha && alpha + beta >= 1.0) {
    double t = 2.0 * alpha - 1.0;
    double inv_q0 = (beta - (1.0 - alpha)) / t;
    if (inv_q0 >= 0.0 && inv_q0 <= 1.0) {
      double colnorm = max_column_norm(
          A, inv_q0 == 0.0 ? exponent_inf() : Exponent(1.0 / inv_q0));
      consider(std::pow(sigma, 1.0 - t) * std::pow(colnorm, t));
    }
  }

  return best;
}

}  // namespace

std::optional<double> op_norm_exact(const Matrix& A, const Exponent& p,
                                    const Exponent& q) {
  if (A.size() == 0) return 0.0;
  if (p.is_one()) return max_column_norm(A, q);
  if (q.is_inf()) return max_row_norm(A, p.conjugate());
  if (p.is_two() && q.is_two()) return sigma_max(A);
  // Duality: ||A||_{p,q} = ||A^T||_{q',p'}.
  if (q.is_inf() || p.is_one()) return std::nullopt;  // already handled
  if (q.conjugate().is_one())  // q = inf handled; this is unreachable
    return std::nullopt;
  return std::nullopt;
}

double op_norm_upper(const Matrix& A, const Exponent& p, const Exponent& q) {
  if (A.size() == 0) return 0.0;
  double a = upper_one_sided(A, p, q);
  double b = upper_one_sided(A.transpose(), q.conjugate(), p.conjugate());
  // Inflate by 1e-12 so floating-point rounding cannot turn a true upper
  // bound into a value a hair below the norm.
  return std::min(a, b) * (1.0 + 1e-12);
}

namespace {

// One monotone power-iteration run; returns the final unit-ball witness.
Vector power_run(const Matrix& A, const Exponent& p, const Exponent& q,
                 Vector x, int max_iter) {
  double xn = lp_norm(x, p);
  if (xn == 0.0) return x;
  x /= xn;
  double val = lp_norm(A * x, q);
  for (int it = 0; it < max_iter; ++it) {
    Vector u = lp_ball_argmax(A * x, q.conjugate());  // duality map of Ax
    Vector z = A.transpose() * u;
    Vector xn2 = lp_ball_argmax(z, p);
    double val2 = lp_norm(A * xn2, q);
    if (val2 <= val * (1.0 + 1e-15)) {
      if (val2 > val) x = xn2;
      break;
    }
    x = xn2;
    val = val2;
  }
  return x;
}

}  // namespace

NormEstimate op_norm_estimate(const Matrix& A, const Exponent& p,
                              const Exponent& q, const OpNormOptions& opt) {
  NormEstimate est;
  est.method = "power-multistart";
  est.restarts = opt.restarts;
  const Eigen::Index n = A.cols();
  if (A.size() == 0 || A.cwiseAbs().maxCoeff() == 0.0) {
    est.witness = Vector::Zero(std::max<Eigen::Index>(n, 1));
    if (n > 0) est.witness[0] = 1.0;
    est.upper = 0.0;
    return est;
  }

  std::vector<Vector> starts;
  for (Eigen::Index j = 0; j < n; ++j) {
    Vector e = Vector::Zero(n);
    e[j] = 1.0;
    starts.push_back(e);
  }
  if (n <= opt.sign_enum_limit) {
    std::uint64_t count = 1ULL << (n - 1);  // first coordinate fixed at +1
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      Vector s(n);
      s[0] = 1.0;
      for (Eigen::Index i = 1; i < n; ++i)
        s[i] = (bits >> (i - 1)) & 1 ? -1.0 : 1.0;
      starts.push_back(s);
    }
  }
  for (int r = 0; r < opt.restarts; ++r) {
    Rng rng = Rng::for_trial(opt.seed, static_cast<std::uint64_t>(r));
    Vector s(n);
    if (r % 2 == 0) {
      for (Eigen::Index i = 0; i < n; ++i) s[i] = rng.sign();
    } else {
      for (Eigen::Index i = 0; i < n; ++i) s[i] = rng.gaussian();
      if (s.cwiseAbs().maxCoeff() == 0.0) s[0] = 1.0;
    }
    starts.push_back(s);
  }
  for (const Vector& s : opt.extra_starts)
    if (s.size() == n && s.cwiseAbs().maxCoeff() > 0.0) starts.push_back(s);

  // Run all starts (possibly in parallel); each writes its own slot, the
  // reduction below is sequential and order-fixed, so results do not depend
  // on the thread budget.
  std::vector<Vector> finals(starts.size());
  parallel_for(static_cast<int>(starts.size()), [&](int i) {
    finals[static_cast<size_t>(i)] =
        power_run(A, p, q, starts[static_cast<size_t>(i)], opt.max_iter);
  });

  double best = -1.0;
  Vector best_w;
  for (const Vector& w : finals) {
    double wn = lp_norm(w, p);
    if (wn == 0.0) continue;
    Vector wu = w / wn;
    double val = lp_norm(A * wu, q);
    if (val > best) {
      best = val;
      best_w = wu;
    }
  }

  est.witness = best_w;
  est.lower = best;        // = ||A w||_q with ||w||_p = 1, by construction
  est.value = est.lower;   // the certified, attained part of the bracket
  est.upper = std::max(op_norm_upper(A, p, q), est.lower);
  return est;
}

double op_norm_bruteforce(const Matrix& A, const Exponent& p,
                          const Exponent& q, int refine_rounds) {
  const Eigen::Index n = A.cols();
  if (n == 0 || A.size() == 0) return 0.0;
  if (n > 4)
    throw ConfigError("op_norm_bruteforce: supports at most 4 columns");

  auto ratio = [&](const Vector& x) {
    double d = lp_norm(x, p);
    if (d == 0.0) return 0.0;
    return lp_norm(A * x, q) / d;
  };

  // Stage 1: exhaustive grid.  Magnitudes are compositions k_1+...+k_n = G
  // mapped to the l_p sphere by |x_i| = (k_i / G)^{1/p} (exactly unit for
  // finite p), crossed with all sign patterns with the first nonzero
  // coordinate positive.
  const int G = (n <= 3) ? 48 : 24;
  double inv_p = p.is_inf() ? 0.0 : 1.0 / p.value();
  double best = 0.0;
  Vector best_x = Vector::Zero(n);

  std::vector<int> comp(static_cast<size_t>(n), 0);
  std::function<void(Eigen::Index, int)> rec = [&](Eigen::Index i, int left) {
    if (i == n - 1) {
      comp[static_cast<size_t>(i)] = left;
      Vector mag(n);
      for (Eigen::Index k = 0; k < n; ++k) {
        double frac = static_cast<double>(comp[static_cast<size_t>(k)]) / G;
        mag[k] = p.is_inf() ? (comp[static_cast<size_t>(k)] > 0 ? 1.0 : 0.0)
                            : std::pow(frac, inv_p);
      }
      int signs = 1 << (n - 1);
      for (int bits = 0; bits < signs; ++bits) {
        Vector x = mag;
        for (Eigen::Index k = 1; k < n; ++k)
          if ((bits >> (k - 1)) & 1) x[k] = -x[k];
        double val = ratio(x);
        if (val > best) {
          best = val;
          best_x = x;
        }
      }
      return;
    }
    for (int k = 0; k <= left; ++k) {
      comp[static_cast<size_t>(i)] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, G);

  // Stage 2: local refinement around the best signed point.  The objective
  // is scale invariant, so the raw coordinate grid needs no renormalizing.
  double w = 1.0 / G;
  for (int round = 0; round < refine_rounds; ++round) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (Eigen::Index k = 0; k < n; ++k) {
        for (double d : {-w, w}) {
          Vector x = best_x;
          x[k] += d;
          double val = ratio(x);
          if (val > best * (1.0 + 1e-16)) {
            best = val;
            best_x = x;
            improved = true;
          }
        }
      }
    }
    w *= 0.5;
  }
  return best;
}

}  // namespace banach
