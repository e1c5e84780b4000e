#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Core>

namespace banach {

using Vector = Eigen::VectorXd;

using ScalarField = std::function<double(const Vector&)>;

struct PatternSearchOptions {
  double initial_step = 0.5;
  double min_step = 1e-9;
  int max_rounds = 40;       // step halvings
  int sweeps_per_round = 8;  // full coordinate sweeps before halving early
  int random_dirs = 4;       // extra random directions per sweep
  std::uint64_t seed = 1;
};

// Deterministic multistart pattern search (coordinate steps plus a few
// seeded random directions, shrinking step sizes).  Maximizes f; NaN or
// -inf values are treated as "reject".  Returns the best value; *arg_best
// (optional) receives the maximizer.  Results depend only on the starts,
// options and seed -- never on threading.
double pattern_search_max(const ScalarField& f,
                          const std::vector<Vector>& starts,
                          const PatternSearchOptions& opt = {},
                          Vector* arg_best = nullptr);

// sup over x != 0 of num(x) / den(x) for two positively homogeneous
// functionals of degree 1.  Iterates are renormalized to den(x) = 1, which
// the homogeneity makes harmless.  Starts: coordinate vectors, sign patterns
// (when dim is small), the supplied extras, and seeded random points.
double sup_norm_ratio(const ScalarField& num, const ScalarField& den, int dim,
                      const std::vector<Vector>& extra_starts = {},
                      const PatternSearchOptions& opt = {},
                      Vector* arg_best = nullptr);

}  // namespace banach
