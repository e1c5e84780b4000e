#include "banach/three_valued.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "banach/errors.hpp"
#include "banach/numeric.hpp"

namespace banach {

ThreeValuedSystem three_valued_system(int n, const Exponent& p, double v) {
  if (n < 0) throw ConfigError("three_valued_system: n must be >= 0");
  double pv = p.value();
  if (!(pv > 1.0 && pv < 2.0))
    throw ConfigError("three_valued_system: p must lie in (1, 2)");
  if (!(v > 0.0 && v <= 1.0))
    throw ConfigError("three_valued_system: v must lie in (0, 1]");

  ThreeValuedSystem sys;
  sys.n = n;
  sys.p = p;
  sys.v = v;
  // amp = v^{-2/(2-p)}, theta = v^{2p/(2-p)}; then amp^p * theta = 1 and
  // amp^2 * theta = v^{-2} as required.
  sys.amplitude = std::pow(v, -2.0 / (2.0 - pv));
  sys.atom_prob = std::pow(v, 2.0 * pv / (2.0 - pv));
  sys.prune_zero = (v == 1.0);  // theta == 1 exactly
  if (sys.prune_zero) {
    sys.amplitude = 1.0;
    sys.atom_prob = 1.0;
  }
  return sys;
}

namespace {

// Visits every atom of the joint distribution restricted to k coordinates
// with weights c[0..k-1]: calls visit(prob, dot) where dot = sum_i s_i *
// amp * c_i over signs s_i in {-1, 0, +1} (0 skipped when pruned).
template <typename F>
void enumerate_atoms(const ThreeValuedSystem& sys, const std::vector<double>& c,
                     F&& visit) {
  int k = static_cast<int>(c.size());
  double half = sys.atom_prob / 2.0;
  double zero = 1.0 - sys.atom_prob;
  int base = sys.prune_zero ? 2 : 3;
  // digit -> (sign, probability factor); order fixed for determinism.
  double dsign[3];
  double dprob[3];
  if (sys.prune_zero) {
    dsign[0] = -1.0; dprob[0] = half;
    dsign[1] = 1.0;  dprob[1] = half;
  } else {
    dsign[0] = -1.0; dprob[0] = half;
    dsign[1] = 0.0;  dprob[1] = zero;
    dsign[2] = 1.0;  dprob[2] = half;
  }

  std::vector<int> digit(k, 0);
  std::vector<double> scaled(k);
  for (int i = 0; i < k; ++i) scaled[i] = sys.amplitude * c[i];

  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(base);

  for (std::uint64_t it = 0;; ++it) {
    double prob = 1.0;
    double dot = 0.0;
    for (int i = 0; i < k; ++i) {
      prob *= dprob[digit[i]];
      dot += dsign[digit[i]] * scaled[i];
    }
    visit(prob, dot);
    if (it + 1 == total) break;
    // odometer increment
    for (int i = 0; i < k; ++i) {
      if (++digit[i] < base) break;
      digit[i] = 0;
    }
  }
}

std::vector<double> canonical_support(const Vector& a) {
  std::vector<double> c;
  c.reserve(static_cast<size_t>(a.size()));
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != 0.0) c.push_back(std::abs(a[i]));
  std::sort(c.begin(), c.end(), std::greater<double>());
  return c;
}

}  // namespace

double fspan_moment(const ThreeValuedSystem& sys, const Vector& a, double r) {
  if (a.size() > sys.n)
    throw ConfigError("fspan_moment: coefficient vector longer than system");
  if (!(r >= 1.0)) throw ConfigError("fspan_moment: moment order must be >= 1");
  std::vector<double> c = canonical_support(a);
  if (c.empty()) return 0.0;
  if (c.size() > 12)
    throw ConfigError("fspan_moment: support larger than 12 not supported");

  // Factor out the largest coefficient so pow() sees arguments of moderate
  // size regardless of the amplitude; the norm is homogeneous.
  double scale = sys.amplitude * c[0];
  NeumaierSum acc;
  enumerate_atoms(sys, c, [&](double prob, double dot) {
    if (prob == 0.0) return;
    double t = std::abs(dot) / scale;
    if (t > 0.0) acc.add(prob * std::pow(t, r));
  });
  double m = acc.value();
  if (m <= 0.0) return 0.0;
  return scale * std::pow(m, 1.0 / r);
}

double fspan_norm(const ThreeValuedSystem& sys, const Vector& a) {
  return fspan_moment(sys, a, sys.p.value());
}

double fspan_norm_indicator(const ThreeValuedSystem& sys, int k) {
  if (k < 0 || k > sys.n)
    throw ConfigError("fspan_norm_indicator: k out of range");
  if (k == 0) return 0.0;
  return fspan_norm(sys, Vector::Ones(k));
}

Vector fspan_embed(const ThreeValuedSystem& sys, const Vector& a) {
  if (sys.n > 12) throw ConfigError("fspan_embed: n larger than 12");
  if (a.size() != sys.n)
    throw ConfigError("fspan_embed: coefficient vector must have length n");
  double invp = 1.0 / sys.p.value();

  // Embed over all n coordinates (no support canonicalization here: the
  // atom order is the basis order of l_p^{3^n} or l_p^{2^n}).
  std::vector<double> c(static_cast<size_t>(sys.n));
  for (int i = 0; i < sys.n; ++i) c[static_cast<size_t>(i)] = a[i];

  std::uint64_t dim = 1;
  int base = sys.prune_zero ? 2 : 3;
  for (int i = 0; i < sys.n; ++i) dim *= static_cast<std::uint64_t>(base);

  Vector out(static_cast<Eigen::Index>(dim));
  Eigen::Index idx = 0;
  enumerate_atoms(sys, c, [&](double prob, double dot) {
    out[idx++] = dot * std::pow(prob, invp);
  });
  return out;
}

double total_probability(const ThreeValuedSystem& sys) {
  std::vector<double> c(static_cast<size_t>(std::min(sys.n, 12)), 1.0);
  NeumaierSum acc;
  enumerate_atoms(sys, c, [&](double prob, double) { acc.add(prob); });
  return acc.value();
}

double pairwise_independence_error(const ThreeValuedSystem& sys) {
  if (sys.n < 2) return 0.0;
  int n = std::min(sys.n, 12);

  double half = sys.atom_prob / 2.0;
  double zero = 1.0 - sys.atom_prob;
  int base = sys.prune_zero ? 2 : 3;
  std::vector<double> dprob =
      sys.prune_zero ? std::vector<double>{half, half}
                     : std::vector<double>{half, zero, half};

  // Enumerate the full n-coordinate atom space and accumulate, for every
  // ordered pair (i, j), the joint pmf of (f_i, f_j) by marginalizing out the
  // other n-2 coordinates.  Then compare against the product of the single
  // coordinate marginals (also accumulated by enumeration).  This exercises
  // the actual product-measure arithmetic instead of restating it.
  size_t m = static_cast<size_t>(base);
  size_t npairs = static_cast<size_t>(n) * static_cast<size_t>(n);
  std::vector<NeumaierSum> joint(npairs * m * m);
  std::vector<NeumaierSum> single(static_cast<size_t>(n) * m);

  std::vector<int> digit(static_cast<size_t>(n), 0);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(base);

  for (std::uint64_t it = 0;; ++it) {
    double prob = 1.0;
    for (int i = 0; i < n; ++i) prob *= dprob[static_cast<size_t>(digit[i])];
    for (int i = 0; i < n; ++i) {
      single[static_cast<size_t>(i) * m + static_cast<size_t>(digit[i])].add(prob);
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        size_t cell = (static_cast<size_t>(i) * static_cast<size_t>(n) +
                       static_cast<size_t>(j)) * m * m +
                      static_cast<size_t>(digit[i]) * m +
                      static_cast<size_t>(digit[j]);
        joint[cell].add(prob);
      }
    }
    if (it + 1 == total) break;
    for (int i = 0; i < n; ++i) {
      if (++digit[static_cast<size_t>(i)] < base) break;
      digit[static_cast<size_t>(i)] = 0;
    }
  }

  double err = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (size_t a = 0; a < m; ++a) {
        for (size_t b = 0; b < m; ++b) {
          size_t cell = (static_cast<size_t>(i) * static_cast<size_t>(n) +
                         static_cast<size_t>(j)) * m * m + a * m + b;
          double lhs = joint[cell].value();
          double rhs = single[static_cast<size_t>(i) * m + a].value() *
                       single[static_cast<size_t>(j) * m + b].value();
          err = std::max(err, std::abs(lhs - rhs));
        }
      }
    }
  }
  return err;
}

}  // namespace banach
