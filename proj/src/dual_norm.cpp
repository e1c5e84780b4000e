#include "banach/dual_norm.hpp"

#include <algorithm>
#include <cmath>

#include "banach/errors.hpp"
#include "banach/numeric.hpp"
#include "banach/spaces.hpp"

namespace banach {

Vector lp_ball_argmax(const Vector& z, const Exponent& p) {
  Eigen::Index n = z.size();
  Vector x = Vector::Zero(n);
  if (n == 0) return x;
  if (p.is_one()) {
    Eigen::Index k = 0;
    for (Eigen::Index i = 1; i < n; ++i)
      if (std::abs(z[i]) > std::abs(z[k])) k = i;
    x[k] = sgn1(z[k]);
    return x;
  }
  if (p.is_inf()) {
    for (Eigen::Index i = 0; i < n; ++i) x[i] = sgn1(z[i]);
    return x;
  }
  double m = z.cwiseAbs().maxCoeff();
  if (m == 0.0) {
    x[0] = 1.0;  // any unit vector maximizes <x, 0>; fixed choice
    return x;
  }
  // x_i proportional to sign(z_i) |z_i|^{p'-1}, normalized to ||x||_p = 1.
  double e = p.conjugate().value() - 1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double t = std::abs(z[i]) / m;
    x[i] = (t > 0.0) ? sgn(z[i]) * std::pow(t, e) : 0.0;
  }
  double nrm = lp_norm(x, p);
  x /= nrm;
  return x;
}

Vector lp_norm_gradient(const Vector& r, const Exponent& p) {
  double pv = p.value();
  double m = r.cwiseAbs().maxCoeff();
  Vector g = Vector::Zero(r.size());
  if (m == 0.0) return g;
  // g_i = sign(r_i) (|r_i| / ||r||_p)^{p-1}
  double nrm = lp_norm(r, p);
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    double t = std::abs(r[i]) / nrm;
    g[i] = (t > 0.0) ? sgn(r[i]) * std::pow(t, pv - 1.0) : 0.0;
  }
  return g;
}

namespace {

// Solves u + lambda*q*u^{q-1} = a for u in [0, a], a > 0, lambda >= 0,
// 1 < q < inf.  Safeguarded Newton; the function is increasing in u.
double coordinate_root(double a, double lambda, double q) {
  if (lambda == 0.0) return a;
  double lo = 0.0, hi = a;
  double u = a;
  for (int it = 0; it < 80; ++it) {
    double uq1 = std::pow(u, q - 1.0);
    double h = u + lambda * q * uq1 - a;
    if (h > 0.0)
      hi = u;
    else
      lo = u;
    double hp = 1.0 + lambda * q * (q - 1.0) * ((u > 0.0) ? std::pow(u, q - 2.0)
                                                          : 0.0);
    double step = h / hp;
    double next = u - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - u) <= 1e-17 * a) {
      u = next;
      break;
    }
    u = next;
  }
  return u;
}

}  // namespace

Vector project_lp_ball(const Vector& y, const Exponent& q, double radius,
                       double tol) {
  if (!(radius > 0.0)) throw ConfigError("project_lp_ball: radius must be > 0");
  double nrm = lp_norm(y, q);
  if (nrm <= radius) return y;

  Eigen::Index n = y.size();
  if (q.is_two()) return y * (radius / nrm);
  if (q.is_inf()) return y.cwiseMax(-radius).cwiseMin(radius);
  if (q.is_one()) {
    // Soft threshold: u_i = (|y_i| - lambda)_+, bisect lambda on ||u||_1.
    double lo = 0.0, hi = y.cwiseAbs().maxCoeff();
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      NeumaierSum s;
      for (Eigen::Index i = 0; i < n; ++i)
        s.add(std::max(std::abs(y[i]) - mid, 0.0));
      if (s.value() > radius)
        lo = mid;
      else
        hi = mid;
    }
    Vector x(n);
    for (Eigen::Index i = 0; i < n; ++i)
      x[i] = sgn(y[i]) * std::max(std::abs(y[i]) - hi, 0.0);
    return x;
  }

  double qv = q.value();
  auto qnorm_at = [&](double lambda) {
    Vector u(n);
    for (Eigen::Index i = 0; i < n; ++i)
      u[i] = coordinate_root(std::abs(y[i]), lambda, qv);
    return u;
  };
  // ||u(lambda)||_q decreases from ||y||_q at lambda = 0; double lambda until
  // the ball is reached, then bisect.
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    if (lp_norm(qnorm_at(hi), q) <= radius) break;
    hi *= 2.0;
  }
  for (int it = 0; it < 120; ++it) {
    double mid = 0.5 * (lo + hi);
    if (lp_norm(qnorm_at(mid), q) > radius)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= tol * std::max(1.0, hi)) break;
  }
  Vector u = qnorm_at(hi);
  Vector x(n);
  for (Eigen::Index i = 0; i < n; ++i) x[i] = sgn(y[i]) * u[i];
  // hi side guarantees ||x||_q <= radius up to roundoff; rescale the last
  // ulps if needed so the result is exactly feasible.
  double r = lp_norm(x, q);
  if (r > radius) x *= radius / r;
  return x;
}

namespace {

struct Ctx {
  Vector y;
  Exponent p;        // conjugate of p_prime: split part exponent
  Exponent p_prime;  // ball exponent
  double v;
};

// Exactly feasible representative of x: scale down by the worst constraint.
Vector feasible_point(const Ctx& c, const Vector& x) {
  double f = std::max(lp_norm(x, c.p_prime), c.v * lp_norm(x, Exponent(2.0)));
  if (f <= 1.0) return x;
  return x / f;
}

double primal_value(const Ctx& c, const Vector& x) { return x.dot(c.y); }

double split_value(const Ctx& c, const Vector& y2) {
  return lp_norm(c.y - y2, c.p) + lp_norm(y2, Exponent(2.0)) / c.v;
}

// Dykstra alternating projections onto B_{p'}(1) and B_2(1/v).
Vector project_intersection(const Ctx& c, const Vector& y0, int iters) {
  Vector x = y0;
  Vector pc = Vector::Zero(y0.size());
  Vector qc = Vector::Zero(y0.size());
  for (int it = 0; it < iters; ++it) {
    Vector z = project_lp_ball(x + pc, c.p_prime, 1.0);
    pc = (x + pc) - z;
    Vector w = project_lp_ball(z + qc, Exponent(2.0), 1.0 / c.v);
    qc = (z + qc) - w;
    double move = (w - x).norm();
    x = w;
    if (move <= 1e-15 * std::max(1.0, x.norm()) && it > 2) break;
  }
  return x;
}

// KKT fixed point for a given l_2 multiplier s >= 0:
// x = argmax over the p' ball of <x, y - s x>.  Returns the fixed point.
Vector s_fixed_point(const Ctx& c, double s, int iters) {
  Vector x = lp_ball_argmax(c.y, c.p_prime);
  for (int it = 0; it < iters; ++it) {
    Vector nx = lp_ball_argmax(c.y - s * x, c.p_prime);
    double move = (nx - x).norm();
    x = 0.5 * (x + nx);  // damped for stability
    if (move <= 1e-14) break;
  }
  return x;
}

}  // namespace

DualNormResult emax_dual_norm(const Vector& y, const Exponent& p_prime,
                              double v, const DualNormOptions& opt) {
  if (!(v > 0.0)) throw ConfigError("emax_dual_norm: v must be > 0");
  Ctx c{y, p_prime.conjugate(), p_prime, v};
  Eigen::Index n = y.size();

  DualNormResult res;
  res.witness = Vector::Zero(n);
  res.split_lp = y;
  res.split_l2 = Vector::Zero(n);
  if (n == 0 || y.cwiseAbs().maxCoeff() == 0.0) return res;

  // --- Regime shortcuts: if one constraint is slack at the single-ball
  // maximizer, the value is closed-form and both routes agree exactly.
  Vector x1 = lp_ball_argmax(y, p_prime);  // l_{p'} ball alone
  double best_lower = -1.0;
  Vector best_x;
  if (v * lp_norm(x1, Exponent(2.0)) <= 1.0 + opt.feas_tol) {
    Vector xf = feasible_point(c, x1);
    best_lower = primal_value(c, xf);
    best_x = xf;
  }
  Vector x2 = y / (v * lp_norm(y, Exponent(2.0)));  // l_2 ball alone
  if (lp_norm(x2, p_prime) <= 1.0 + opt.feas_tol) {
    Vector xf = feasible_point(c, x2);
    double val = primal_value(c, xf);
    if (val > best_lower) {
      best_lower = val;
      best_x = xf;
    }
  }

  // --- Primal route: sweep the l_2 multiplier s in the KKT system
  // y = mu1 * J_{p'}(x) + s * x, bisecting on ||x_s||_2 = 1/v, then refine
  // with projected ascent using Dykstra projections.
  if (best_x.size() == 0 ||
      std::min(1.0 - lp_norm(best_x, p_prime),
               1.0 - v * lp_norm(best_x, Exponent(2.0))) < -opt.feas_tol) {
    best_x = feasible_point(c, x1);
    best_lower = primal_value(c, best_x);
  }
  {
    double target = 1.0 / v;
    double s_lo = 0.0;
    double s_hi = 1.0;
    // ||x_s||_2 decreases toward the sphere of radius 1/v as s grows.
    for (int it = 0; it < 60; ++it) {
      Vector xs = s_fixed_point(c, s_hi, 60);
      if (lp_norm(xs, Exponent(2.0)) <= target) break;
      s_hi *= 2.0;
    }
    for (int it = 0; it < 80; ++it) {
      double mid = 0.5 * (s_lo + s_hi);
      Vector xs = s_fixed_point(c, mid, 60);
      if (lp_norm(xs, Exponent(2.0)) > target)
        s_lo = mid;
      else
        s_hi = mid;
    }
    Vector xs = feasible_point(c, s_fixed_point(c, s_hi, 120));
    double val = primal_value(c, xs);
    if (val > best_lower) {
      best_lower = val;
      best_x = xs;
    }
  }
  int used_iters = 0;
  {
    Vector x = best_x;
    double step = 1.0 / std::max(1.0, y.norm());
    for (int it = 0; it < opt.max_iter / 10; ++it) {
      Vector xn = project_intersection(c, x + step * y, 200);
      xn = feasible_point(c, xn);
      double val = primal_value(c, xn);
      ++used_iters;
      if (val > best_lower) {
        best_lower = val;
        best_x = xn;
        x = xn;
      } else {
        step *= 0.5;
        if (step * y.norm() < 1e-14) break;
      }
    }
  }

  // --- Dual route: alternating minimization over splits y = y1 + y2.
  // Candidate seeds: trivial splits and the KKT-structured split read off
  // the primal witness.
  std::vector<Vector> seeds;
  seeds.push_back(Vector::Zero(n));  // y2 = 0: value ||y||_p
  seeds.push_back(y);                // y2 = y: value ||y||_2 / v
  {
    const Vector& x = best_x;
    double x2n = lp_norm(x, Exponent(2.0));
    double xpn = lp_norm(x, c.p_prime);
    if (x2n > 0.0 && xpn > 0.0) {
      // Gradients of the two constraints at the witness; project y onto
      // their nonnegative span (2x2 least squares with clamping).
      Vector g1 = lp_norm_gradient(x, c.p_prime);
      Vector g2 = c.v * x / x2n;
      double a11 = g1.dot(g1), a12 = g1.dot(g2), a22 = g2.dot(g2);
      double b1 = g1.dot(y), b2 = g2.dot(y);
      double det = a11 * a22 - a12 * a12;
      double mu1 = 0.0, mu2 = 0.0;
      if (std::abs(det) > 1e-18) {
        mu1 = (b1 * a22 - b2 * a12) / det;
        mu2 = (b2 * a11 - b1 * a12) / det;
      }
      if (!(mu1 >= 0.0) || !(mu2 >= 0.0)) {
        mu1 = std::max(0.0, b1 / std::max(a11, 1e-300));
        mu2 = std::max(0.0, b2 / std::max(a22, 1e-300));
        if (split_value(c, mu2 * g2) > split_value(c, Vector::Zero(n)))
          mu2 = 0.0;
      }
      seeds.push_back(mu2 * g2);
    }
  }

  double best_upper = std::numeric_limits<double>::infinity();
  Vector best_y2 = Vector::Zero(n);
  for (const Vector& seed : seeds) {
    Vector y2 = seed;
    double val = split_value(c, y2);
    if (val < best_upper) {
      best_upper = val;
      best_y2 = y2;
    }
    if (c.p.is_finite() && !c.p.is_one()) {
      double t = 0.5;
      for (int it = 0; it < opt.max_iter; ++it) {
        Vector r = y - y2;
        Vector g = (r.cwiseAbs().maxCoeff() > 0.0) ? lp_norm_gradient(r, c.p)
                                                   : Vector::Zero(n);
        // Proximal gradient step on h(y2) = ||y - y2||_p + ||y2||_2 / v:
        // descend the smooth part, then shrink toward 0 (prox of t/v * l2).
        Vector z = y2 + t * g;
        double zn = z.norm();
        double shrink = (zn > 0.0) ? std::max(0.0, 1.0 - t / (c.v * zn)) : 0.0;
        Vector y2n = shrink * z;
        double valn = split_value(c, y2n);
        ++used_iters;
        if (valn <= val - 1e-18) {
          y2 = y2n;
          val = valn;
          if (val < best_upper) {
            best_upper = val;
            best_y2 = y2;
          }
        } else {
          t *= 0.5;
          if (t < 1e-12) break;
        }
      }
    }
  }

  res.primal_lower = best_lower;
  res.dual_upper = std::max(best_upper, best_lower);
  res.gap = res.dual_upper - res.primal_lower;
  res.value = 0.5 * (res.primal_lower + res.dual_upper);
  res.witness = best_x;
  res.split_l2 = best_y2;
  res.split_lp = y - best_y2;
  res.iterations = used_iters;

  if (opt.throw_on_gap && res.gap > opt.gap_tol_rel * std::max(res.value, 1e-300))
    throw SolverError("emax_dual_norm: certified gap above tolerance",
                      res.primal_lower, res.dual_upper);
  return res;
}

}  // namespace banach
