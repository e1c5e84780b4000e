#include "banach/optimize.hpp"

#include <cmath>
#include <limits>

#include "banach/parallel.hpp"
#include "banach/rng.hpp"

namespace banach {

namespace {

double eval(const ScalarField& f, const Vector& x) {
  double v = f(x);
  if (std::isnan(v)) return -std::numeric_limits<double>::infinity();
  return v;
}

double search_from(const ScalarField& f, Vector x,
                   const PatternSearchOptions& opt, std::uint64_t stream,
                   Vector* arg) {
  const Eigen::Index n = x.size();
  Rng rng = Rng::for_trial(opt.seed, stream);
  double best = eval(f, x);
  double step = opt.initial_step;
  for (int round = 0; round < opt.max_rounds && step >= opt.min_step; ++round) {
    for (int sweep = 0; sweep < opt.sweeps_per_round; ++sweep) {
      bool improved = false;
      for (Eigen::Index i = 0; i < n; ++i) {
        for (double d : {step, -step}) {
          Vector y = x;
          y[i] += d;
          double v = eval(f, y);
          if (v > best) {
            best = v;
            x = y;
            improved = true;
          }
        }
      }
      for (int r = 0; r < opt.random_dirs; ++r) {
        Vector dir(n);
        for (Eigen::Index i = 0; i < n; ++i) dir[i] = rng.gaussian();
        double dn = dir.norm();
        if (dn == 0.0) continue;
        dir *= step / dn;
        for (double sgn : {1.0, -1.0}) {
          Vector y = x + sgn * dir;
          double v = eval(f, y);
          if (v > best) {
            best = v;
            x = y;
            improved = true;
          }
        }
      }
      if (!improved) break;
    }
    step *= 0.5;
  }
  if (arg) *arg = x;
  return best;
}

}  // namespace

double pattern_search_max(const ScalarField& f,
                          const std::vector<Vector>& starts,
                          const PatternSearchOptions& opt, Vector* arg_best) {
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> vals(starts.size());
  std::vector<Vector> args(starts.size());
  parallel_for(static_cast<int>(starts.size()), [&](int i) {
    vals[static_cast<size_t>(i)] =
        search_from(f, starts[static_cast<size_t>(i)], opt,
                    static_cast<std::uint64_t>(i), &args[static_cast<size_t>(i)]);
  });
  for (size_t i = 0; i < starts.size(); ++i) {
    if (vals[i] > best) {
      best = vals[i];
      if (arg_best) *arg_best = args[i];
    }
  }
  return best;
}

double sup_norm_ratio(const ScalarField& num, const ScalarField& den, int dim,
                      const std::vector<Vector>& extra_starts,
                      const PatternSearchOptions& opt, Vector* arg_best) {
  ScalarField ratio = [&](const Vector& x) {
    double d = den(x);
    if (!(d > 1e-120)) return -std::numeric_limits<double>::infinity();
    return num(x) / d;
  };

  std::vector<Vector> starts;
  for (int j = 0; j < dim; ++j) {
    Vector e = Vector::Zero(dim);
    e[j] = 1.0;
    starts.push_back(e);
  }
  if (dim >= 2 && dim <= 10) {
    std::uint64_t count = 1ULL << (dim - 1);
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      Vector s(dim);
      s[0] = 1.0;
      for (int i = 1; i < dim; ++i) s[i] = (bits >> (i - 1)) & 1 ? -1.0 : 1.0;
      starts.push_back(s);
    }
  }
  for (const Vector& e : extra_starts)
    if (e.size() == dim) starts.push_back(e);
  for (int r = 0; r < 8; ++r) {
    Rng rng = Rng::for_trial(opt.seed ^ 0x5eedULL, static_cast<std::uint64_t>(r));
    Vector s(dim);
    for (int i = 0; i < dim; ++i) s[i] = rng.gaussian();
    if (s.cwiseAbs().maxCoeff() == 0.0) s[0] = 1.0;
    starts.push_back(s);
  }

  // Normalize all starts to den = 1 so step sizes are comparable; the ratio
  // is homogeneous of degree 0, so this does not change the optimum.
  for (Vector& s : starts) {
    double d = den(s);
    if (d > 1e-120) s /= d;
  }

  return pattern_search_max(ratio, starts, opt, arg_best);
}

}  // namespace banach
