#include "banach/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "banach/complexify.hpp"
#include "banach/constructions.hpp"
#include "banach/dual_norm.hpp"
#include "banach/errors.hpp"
#include "banach/opnorm.hpp"
#include "banach/optimize.hpp"
#include "banach/rng.hpp"
#include "banach/sequences.hpp"
#include "banach/snumbers.hpp"
#include "banach/spaces.hpp"
#include "banach/three_valued.hpp"

namespace banach {

namespace {

std::string num_str(double v) { return Json(v).dump(); }

std::vector<double> to_std(const Vector& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

Vector gaussian_vector(Rng& rng, int n) {
  Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = rng.gaussian();
  return x;
}

Matrix gaussian_matrix(Rng& rng, int rows, int cols) {
  Matrix a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = rng.gaussian();
  return a;
}

double condition_number(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a);
  double smin = svd.singularValues()(svd.singularValues().size() - 1);
  if (smin <= 0) return std::numeric_limits<double>::infinity();
  return svd.singularValues()(0) / smin;
}

}  // namespace

// ---------------------------------------------------------------------------
// Walsh-matrix suite
// ---------------------------------------------------------------------------

VerificationReport verify_hadamard_suite(const HadamardSuiteParams& prm) {
  VerificationReport rep;
  rep.suite = "hadamard";
  rep.seed = prm.seed;
  rep.params = {{"maxLevel", prm.max_level},
                {"interpolationRs", prm.interpolation_rs},
                {"interpolationMaxLevel", prm.interpolation_max_level},
                {"restarts", prm.restarts}};
  rep.tolerances = {{"identity", 0.0},
                    {"norms", 1e-9},
                    {"interpolation-bound", 1e-6}};

  for (int level = 1; level <= prm.max_level; ++level) {
    IntMatrix h = hadamard(level);
    const auto n = h.rows();
    // H^2 = 2^{l-1} I, exactly, in integer arithmetic.
    IntMatrix sq = h * h;
    std::int64_t dev = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        std::int64_t want = (i == j) ? n : 0;
        dev = std::max(dev, std::abs(sq(i, j) - want));
      }
    rep.add(make_record("identity", static_cast<double>(dev), 0.0, 0.0,
                        {{"level", level}}));

    // ||H||_{2,2} = sqrt(n) and max |entry| = 1.
    Matrix hd = h.cast<double>();
    Eigen::BDCSVD<Matrix> svd(hd);
    double smax = svd.singularValues()(0);
    double want = std::sqrt(static_cast<double>(n));
    double err = std::abs(smax - want) / want;
    err = std::max(err, std::abs(hd.cwiseAbs().maxCoeff() - 1.0));
    rep.add(make_record("norms", err, 1e-9, 0.0, {{"level", level}}));
  }

  // Interpolation bound ||H||_{r,r'} <= 2^{(l-1)/r'} for 1 <= r <= 2: the
  // certified lower bound of the norm may not exceed the bound.
  int stream = 0;
  for (double r : prm.interpolation_rs) {
    Exponent er(r);
    Exponent erc = er.conjugate();
    int top = std::min(prm.max_level, prm.interpolation_max_level);
    for (int level = 1; level <= top; ++level) {
      Matrix hd = hadamard(level).cast<double>();
      ++stream;
      OpNormOptions opt;
      opt.restarts = prm.restarts;
      opt.seed = prm.seed + 977ULL * static_cast<std::uint64_t>(stream);
      NormEstimate est = op_norm_estimate(hd, er, erc, opt);
      double bound =
          std::exp2(static_cast<double>(level - 1) / erc.value());
      rep.add(make_record("interpolation-bound", est.lower, bound,
                          1e-6 * bound, {{"level", level}, {"r", r}}));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Span norm vs. coefficient dual norm
// ---------------------------------------------------------------------------

VerificationReport verify_eq4(const Eq4Params& prm) {
  VerificationReport rep;
  rep.suite = "eq4";
  rep.seed = prm.seed;
  rep.params = {{"ps", prm.ps},
                {"vs", prm.vs},
                {"ns", prm.ns},
                {"samples", prm.samples}};
  rep.tolerances = {{"span-vs-dual", 1e-9},
                    {"dual-gap-contract", 1e-6},
                    {"span-dual-K-at-least-one", 1e-12}};

  int combo = 0;
  for (double p : prm.ps) {
    Exponent ep(p);
    Exponent epc = ep.conjugate();
    for (double v : prm.vs) {
      double khat = 0.0;
      int khat_instances = 0;
      for (int n : prm.ns) {
        ++combo;
        ThreeValuedSystem sys = three_valued_system(n, ep, v);

        std::vector<std::pair<std::string, Vector>> samples;
        for (int j = 0; j < n; ++j) {
          Vector e = Vector::Zero(n);
          e[j] = 1.0;
          samples.push_back({"e" + std::to_string(j + 1), e});
        }
        for (int k = 1; k <= n; ++k) {
          Vector a = Vector::Zero(n);
          a.head(k).setOnes();
          samples.push_back({"ones" + std::to_string(k), a});
        }
        {
          Vector a(n);
          for (int i = 0; i < n; ++i) a[i] = (i % 2 == 0) ? 1.0 : -1.0;
          samples.push_back({"alt", a});
        }
        for (int s = 0; s < prm.samples; ++s) {
          Rng rng = Rng::for_trial(prm.seed,
                                   1000003ULL * static_cast<std::uint64_t>(combo) +
                                       7919ULL * static_cast<std::uint64_t>(s));
          Vector a = gaussian_vector(rng, n);
          if (s % 3 == 1) {  // sparse pattern
            for (int i = 0; i < n; ++i)
              if (rng.below(2) == 0) a[i] = 0.0;
          } else if (s % 3 == 2) {  // small integer lattice
            for (int i = 0; i < n; ++i)
              a[i] = static_cast<double>(static_cast<int>(rng.below(7)) - 3);
          }
          if (a.cwiseAbs().maxCoeff() == 0.0) a[0] = 1.0;
          samples.push_back({"r" + std::to_string(s), a});
        }

        double max_rel_gap = 0.0;
        DualNormOptions dopt;
        dopt.throw_on_gap = false;
        for (const auto& [label, a] : samples) {
          double span = fspan_norm(sys, a);
          DualNormResult dual = emax_dual_norm(a, epc, v, dopt);
          max_rel_gap =
              std::max(max_rel_gap, dual.gap / std::max(dual.value, 1e-300));
          Json params = {{"p", p}, {"v", v}, {"n", n}, {"sample", label}};
          rep.add(make_record("span-vs-dual", span, dual.value,
                              0.5 * dual.gap + 1e-9, params, to_std(a)));
          if (span > 1e-12) {
            khat = std::max(khat, dual.dual_upper / span);
            ++khat_instances;
          }
        }
        rep.add(make_record("dual-gap-contract", max_rel_gap, 1e-6, 0.0,
                            {{"p", p}, {"v", v}, {"n", n}}));
      }
      rep.add(make_record("span-dual-K-at-least-one", 1.0, khat, 1e-12,
                          {{"p", p}, {"v", v}}));
      ImpliedConstant c;
      c.name = "span-dual-K[p=" + num_str(p) + ",v=" + num_str(v) + "]";
      c.p = p;
      c.value = khat;
      c.instances = khat_instances;
      rep.implied_constants.push_back(c);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Fundamental-function bounds and exchangeability
// ---------------------------------------------------------------------------

VerificationReport verify_lemma_1iii(const Lemma1iiiParams& prm) {
  VerificationReport rep;
  rep.suite = "lemma1iii";
  rep.seed = prm.seed;
  rep.params = {{"ps", prm.ps},
                {"vs", prm.vs},
                {"maxN", prm.max_n},
                {"subsetsPerK", prm.subsets_per_k}};
  rep.tolerances = {{"subset-norm-bound", 1e-9}, {"exchangeability", 0.0}};

  std::uint64_t stream = 0;
  for (double p : prm.ps) {
    Exponent ep(p);
    for (double v : prm.vs) {
      double khat = 0.0;
      int khat_instances = 0;
      double khat_n_min = std::numeric_limits<double>::infinity();
      double khat_n_max = 0.0;
      for (int n = 1; n <= prm.max_n; ++n) {
        ThreeValuedSystem sys = three_valued_system(n, ep, v);
        double khat_n = 0.0;
        for (int k = 1; k <= n; ++k) {
          double phi = fundamental_phi(sys, k);
          double bound = std::min(std::pow(static_cast<double>(k), 1.0 / p),
                                  std::sqrt(static_cast<double>(k)) / v);
          rep.add(make_record("subset-norm-bound", phi, bound, 1e-9 * bound,
                              {{"p", p}, {"v", v}, {"n", n}, {"k", k}}));
          khat = std::max(khat, bound / phi);
          khat_n = std::max(khat_n, bound / phi);
          ++khat_instances;

          // Exact exchangeability: any k-subset with any signs produces the
          // same double as the leading indicator.
          double worst = 0.0;
          for (int s = 0; s < prm.subsets_per_k; ++s) {
            Rng rng = Rng::for_trial(prm.seed, ++stream);
            Vector a = Vector::Zero(n);
            int placed = 0;
            while (placed < k) {
              int idx = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
              if (a[idx] != 0.0) continue;
              a[idx] = rng.sign();
              ++placed;
            }
            worst = std::max(worst, std::abs(fspan_norm(sys, a) - phi));
          }
          rep.add(make_record("exchangeability", worst, 0.0, 0.0,
                              {{"p", p},
                               {"v", v},
                               {"n", n},
                               {"k", k},
                               {"subsets", prm.subsets_per_k}}));
        }
        khat_n_min = std::min(khat_n_min, khat_n);
        khat_n_max = std::max(khat_n_max, khat_n);
      }
      if (khat_n_min > 0 && khat_n_max / khat_n_min > 2.0)
        std::cerr << "warning: subset-norm constant for p=" << p << ", v=" << v
                  << " varies by more than a factor of 2 across dimensions ("
                  << khat_n_min << " .. " << khat_n_max << ")\n";
      ImpliedConstant c;
      c.name = "subset-K[p=" + num_str(p) + ",v=" + num_str(v) + "]";
      c.p = p;
      c.value = khat;
      c.instances = khat_instances;
      rep.implied_constants.push_back(c);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Block lower fundamental function
// ---------------------------------------------------------------------------

VerificationReport verify_lemma3(const Lemma3Params& prm) {
  VerificationReport rep;
  rep.suite = "lemma3";
  rep.seed = prm.seed;
  rep.params = {{"p", prm.p},
                {"blockCount", prm.block_count},
                {"kMax", prm.k_max}};
  rep.tolerances = {{"block-lambda-bound", 1e-9},
                    {"lambda-dp-vs-bruteforce", 0.0}};

  Exponent ep(prm.p);
  WeightSeq w = weight_seq({1, 2, 3, 4, 5, 6, 7, 8}, ep);

  std::vector<ThreeValuedSystem> blocks;
  std::vector<double> weights;
  int total = 0;
  for (int b = 1; b <= prm.block_count; ++b) {
    double vb = w.eval(static_cast<double>(b));
    weights.push_back(vb);
    blocks.push_back(three_valued_system(b, ep, vb));
    total += b;
  }

  // The subset-norm constant inferred from exactly the blocks in play: the
  // smallest K with phi_b(k) >= min(k^{1/p}, sqrt(k)/v_b) / K for all pairs
  // the lambda bound's derivation touches.
  double khat = 0.0;
  int khat_instances = 0;
  for (int b = 0; b < prm.block_count; ++b) {
    for (int k = 1; k <= blocks[static_cast<size_t>(b)].n; ++k) {
      double phi = fundamental_phi(blocks[static_cast<size_t>(b)], k);
      double bound =
          std::min(std::pow(static_cast<double>(k), 1.0 / prm.p),
                   std::sqrt(static_cast<double>(k)) / weights[static_cast<size_t>(b)]);
      khat = std::max(khat, bound / phi);
      ++khat_instances;
    }
  }
  {
    ImpliedConstant c;
    c.name = "block-subset-K[p=" + num_str(prm.p) + "]";
    c.p = prm.p;
    c.value = khat;
    c.instances = khat_instances;
    rep.implied_constants.push_back(c);
  }

  const double sqrt2 = std::sqrt(2.0);
  for (int k = 1; k <= prm.k_max; ++k) {
    if (k > total) {
      rep.add(make_out_of_range(
          "block-lambda-bound",
          {{"k", k}, {"reason", "k exceeds the available basis size"},
           {"basis", total}}));
      continue;
    }
    int j = static_cast<int>(std::floor(std::sqrt(static_cast<double>(k) / 2.0)));
    double bound = 0.0;
    if (j >= 1) {
      double vj = w.eval(static_cast<double>(j));
      bound = static_cast<double>(j) / (vj * khat * sqrt2);
    }
    double lambda = lower_fundamental_lambda(blocks, ep, k);
    rep.add(make_record("block-lambda-bound", bound, lambda,
                        1e-9 * std::max(1.0, bound),
                        {{"k", k}, {"j", j}}));
  }

  // DP vs. exhaustive enumeration, bit for bit, on the small leading family.
  int brute_blocks = std::min(prm.block_count, 4);
  std::vector<ThreeValuedSystem> head(blocks.begin(),
                                      blocks.begin() + brute_blocks);
  int head_total = 0;
  for (const auto& b : head) head_total += b.n;
  for (int k = 0; k <= head_total; ++k) {
    double dp = lower_fundamental_lambda(head, ep, k);
    double brute = lower_fundamental_lambda_bruteforce(head, ep, k);
    rep.add(make_record("lambda-dp-vs-bruteforce", std::abs(dp - brute), 0.0,
                        0.0, {{"k", k}, {"blocks", brute_blocks}}));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Flat-vector l_2 bounds
// ---------------------------------------------------------------------------

VerificationReport verify_lemma5(const Lemma5Params& prm) {
  VerificationReport rep;
  rep.suite = "lemma5";
  rep.seed = prm.seed;
  rep.params = {{"ps", prm.ps},
                {"qs", prm.qs},
                {"sigmas", prm.sigmas},
                {"maxN", prm.max_n},
                {"restarts", prm.restarts}};
  rep.tolerances = {{"flat-l2-constant", 1e-9}, {"flat-l2-furthermore", 1e-9}};

  Exponent l1(1.0), l2(2.0);
  std::uint64_t stream = 0;
  for (double p : prm.ps) {
    Exponent ep(p);
    double eta = 1.0 / p - 0.5;
    for (double q : prm.qs) {
      double r = std::min(q / 2.0 - p / 2.0,
                          q / 2.0 - q * (1.0 - 1.0 / p));  // q/2 - q/p'
      for (double sigma : prm.sigmas) {
        double v = std::pow(sigma, eta);
        std::string key = "[p=" + num_str(p) + ",q=" + num_str(q) +
                          ",sigma=" + num_str(sigma) + "]";
        for (int n = 1; n <= prm.max_n; ++n) {
          ThreeValuedSystem sys = three_valued_system(n, ep, v);
          double amp = sys.amplitude;

          // Feasible boundary scaling: both ||f||_F <= 1 and ||f||_inf <=
          // sigma bind through t* = min(1/||f||_F, sigma/||f||_inf).
          auto scaled = [&](const Vector& y, double& t, double& nf) {
            nf = fspan_norm(sys, y);
            double sup = amp * lp_norm(y, l1);
            t = std::min(1.0 / nf, sigma / sup);
          };
          ScalarField ratio_obj = [&](const Vector& y) -> double {
            if (y.cwiseAbs().maxCoeff() <= 0.0) return -1.0;
            double t, nf;
            scaled(y, t, nf);
            double num = std::pow(t * lp_norm(y, l2), q);
            double den = std::pow(sigma, r) * std::pow(t * nf, p);
            return num / den;
          };
          ScalarField l2_obj = [&](const Vector& y) -> double {
            if (y.cwiseAbs().maxCoeff() <= 0.0) return -1.0;
            double t, nf;
            scaled(y, t, nf);
            return t * lp_norm(y, l2) / std::pow(sigma, eta);
          };

          std::vector<Vector> starts;
          for (int k = 1; k <= n; ++k) {
            Vector a = Vector::Zero(n);
            a.head(k).setOnes();
            starts.push_back(a);
          }
          {
            Vector e = Vector::Zero(n);
            e[0] = 1.0;
            starts.push_back(e);
          }
          for (int s = 0; s < prm.restarts; ++s) {
            Rng rng = Rng::for_trial(prm.seed, ++stream);
            starts.push_back(gaussian_vector(rng, n));
          }

          PatternSearchOptions popt;
          popt.max_rounds = 24;
          popt.sweeps_per_round = 4;
          popt.random_dirs = 2;
          popt.seed = prm.seed + 31 * static_cast<std::uint64_t>(n);
          Vector best_y;
          double khat = pattern_search_max(ratio_obj, starts, popt, &best_y);
          double mhat = pattern_search_max(l2_obj, starts, popt);

          Json params = {{"p", p}, {"q", q}, {"sigma", sigma}, {"n", n},
                         {"r", r}};
          double cap_k = (n == 1) ? 1.0 : khat;
          double cap_m = (n == 1) ? 1.0 : mhat;
          rep.add(make_record("flat-l2-constant", khat, cap_k, 1e-9, params,
                              to_std(best_y)));
          rep.add(make_record("flat-l2-furthermore", mhat, cap_m, 1e-9,
                              params));
          fold_implied_constant(rep.implied_constants, "flat-l2-K" + key, p,
                                khat);
          fold_implied_constant(rep.implied_constants, "flat-l2-M" + key, p,
                                mhat);
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Factorization obstruction
// ---------------------------------------------------------------------------

VerificationReport verify_prop52(const Prop52Params& prm) {
  VerificationReport rep;
  rep.suite = "prop52";
  rep.seed = prm.seed;
  rep.params = {{"level", prm.level},
                {"p", prm.p},
                {"r", prm.r},
                {"count", prm.count},
                {"perturbCount", prm.perturb_count},
                {"restarts", prm.restarts}};
  rep.tolerances = {{"operator-norm-hypothesis", 1e-12},
                    {"inverse-norm-closed-form", 1e-10},
                    {"inverse-column-norm", 1e-12},
                    {"equality-factorization", 1e-9},
                    {"factorization-obstruction", 1e-6},
                    {"perturbed-obstruction", 1e-6}};

  Exponent ep(prm.p), er(prm.r), einf = exponent_inf(), e2(2.0);
  HadamardInverseMetrics met = hadamard_inverse_metrics(prm.level, ep);
  Matrix u = scaled_hadamard(prm.level, ep);
  const int n = static_cast<int>(u.rows());
  const double obstruction = 1.0 / met.delta;

  // Exact hypotheses: ||U||_{p,inf} = 1; the closed-form delta matches the
  // SVD; max_j ||U^{-1} e_j||_p = 1.
  double unorm = op_norm_exact(u, ep, einf).value();
  rep.add(make_record("operator-norm-hypothesis", std::abs(unorm - 1.0),
                      1e-12, 0.0, {{"level", prm.level}}));
  rep.add(make_record("inverse-norm-closed-form",
                      std::abs(met.delta - met.delta_svd) / met.delta, 1e-10,
                      0.0, {{"level", prm.level}}));
  rep.add(make_record("inverse-column-norm",
                      std::abs(met.max_column_p_norm - 1.0), 1e-12, 0.0,
                      {{"level", prm.level}}));

  // Equality case: A = U (l_2 -> l_inf), B = I (l_p -> l_2) attains the
  // obstruction exactly: ||U||_{2,inf} * ||I||_{p,2} = 1/delta by closed
  // forms.
  {
    double a_exact = op_norm_exact(u, e2, einf).value();
    double b_exact =
        std::pow(static_cast<double>(n),
                 std::max(0.0, 0.5 - 1.0 / prm.p));  // identity l_p -> l_2
    double prod = a_exact * b_exact;
    rep.add(make_record("equality-factorization",
                        std::abs(prod - obstruction) / obstruction, 1e-9, 0.0,
                        {{"level", prm.level}}));
  }

  OpNormOptions opt;
  opt.restarts = prm.restarts;
  opt.seed = prm.seed;

  auto obstruction_record = [&](const std::string& name, const Matrix& a,
                                const Matrix& b, double floor_value,
                                Json params) {
    NormEstimate ea = op_norm_estimate(a, er, einf, opt);
    NormEstimate eb = op_norm_estimate(b, ep, er, opt);
    double prod = ea.lower * eb.lower;
    params["normA"] = ea.lower;
    params["normB"] = eb.lower;
    rep.add(make_record(name, floor_value, prod, 1e-6 * floor_value,
                        std::move(params)));
  };

  // Structured factorizations.
  obstruction_record("factorization-obstruction", u, Matrix::Identity(n, n),
                     obstruction, {{"sample", "A=U,B=I"}});
  obstruction_record("factorization-obstruction", Matrix::Identity(n, n), u,
                     obstruction, {{"sample", "A=I,B=U"}});

  // Random factorizations; sample 0 is the polar split U = Q P with Q the
  // orthogonal part and P a positive multiple of the identity.
  for (int s = 0; s < prm.count; ++s) {
    Matrix a, b;
    if (s == 0) {
      double scale = std::exp2(0.5 * static_cast<double>(prm.level - 1));
      Matrix q = hadamard(prm.level).cast<double>() / scale;
      double c = std::exp2(-static_cast<double>(prm.level - 1) /
                           ep.conjugate().value());
      a = q;
      b = (c * scale) * Matrix::Identity(n, n);
    } else {
      Rng rng = Rng::for_trial(prm.seed, 50000ULL + static_cast<std::uint64_t>(s));
      do {
        b = gaussian_matrix(rng, n, n);
      } while (condition_number(b) > 1e4);
      a = u * b.inverse();
    }
    obstruction_record("factorization-obstruction", a, b, obstruction,
                       {{"sample", s}});
  }

  // Perturbations of exact (p, inf) norm equal to the threshold
  // (2 max_j ||U^{-1} e_j||_p)^{-1} keep half the obstruction.
  for (int s = 0; s < prm.perturb_count; ++s) {
    Rng rng = Rng::for_trial(prm.seed, 90000ULL + static_cast<std::uint64_t>(s));
    Matrix delta = gaussian_matrix(rng, n, n);
    double dn = op_norm_exact(delta, ep, einf).value();
    delta *= met.perturb_threshold / dn;
    Matrix ut = u - delta;
    Matrix b;
    do {
      b = gaussian_matrix(rng, n, n);
    } while (condition_number(b) > 1e4);
    Matrix a = ut * b.inverse();
    obstruction_record("perturbed-obstruction", a, b, 0.5 * obstruction,
                       {{"sample", s}});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Complexification
// ---------------------------------------------------------------------------

VerificationReport verify_complexification(const ComplexifyParams& prm) {
  VerificationReport rep;
  rep.suite = "complexify";
  rep.seed = prm.seed;
  rep.params = {{"ps", prm.ps},
                {"pairs", prm.pairs},
                {"opPs", prm.op_ps},
                {"matrices", prm.matrices},
                {"dim", prm.dim},
                {"grid", prm.grid}};
  rep.tolerances = {{"complex-lower-sandwich", 1e-12},
                    {"complex-upper-sandwich", 1e-12},
                    {"complexification-agreement", 2e-3}};

  int space_idx = 0;
  for (double p : prm.ps) {
    ++space_idx;
    Exponent ep(p);
    NormFn norm = [ep](const Vector& x) { return lp_norm(x, ep); };
    for (int i = 0; i < prm.pairs; ++i) {
      int dim = 1 + (i % 6);
      Rng rng = Rng::for_trial(prm.seed,
                               200000ULL * static_cast<std::uint64_t>(space_idx) +
                                   static_cast<std::uint64_t>(i));
      Vector x = gaussian_vector(rng, dim);
      Vector y = gaussian_vector(rng, dim);
      ComplexNormResult res = complex_vector_norm(norm, x, y, prm.grid);
      double nx = norm(x), ny = norm(y);
      double scale = std::max(1.0, nx + ny);
      Json params = {{"p", p}, {"i", i}, {"dim", dim}};
      rep.add(make_record("complex-lower-sandwich", 0.5 * (nx + ny),
                          res.value, 1e-12 * scale, params));
      rep.add(make_record("complex-upper-sandwich", res.value, nx + ny,
                          1e-12 * scale, params));
    }
  }

  for (double p : prm.op_ps) {
    ++space_idx;
    Exponent ep(p);
    NormFn cod_norm = [ep](const Vector& x) { return lp_norm(x, ep); };
    for (int m = 0; m < prm.matrices; ++m) {
      Rng rng = Rng::for_trial(prm.seed,
                               400000ULL * static_cast<std::uint64_t>(space_idx) +
                                   static_cast<std::uint64_t>(m));
      Matrix t = gaussian_matrix(rng, prm.dim, prm.dim);

      OpNormOptions copt;
      copt.seed = prm.seed + static_cast<std::uint64_t>(m);
      ComplexOpNormResult cres = complex_op_norm(t, ep, ep, copt);

      // Hand the real estimator the witness pair's best rotation slices: the
      // complex ratio never exceeds the best real ratio along those slices,
      // so the two estimates chase the same supremum.
      OpNormOptions ropt = copt;
      if (cres.witness_x.size() > 0) {
        Vector tx = t * cres.witness_x, ty = t * cres.witness_y;
        ComplexNormResult num =
            complex_vector_norm(cod_norm, tx, ty, prm.grid);
        Vector slice = std::cos(num.phi) * cres.witness_x +
                       std::sin(num.phi) * cres.witness_y;
        if (slice.cwiseAbs().maxCoeff() > 0) ropt.extra_starts.push_back(slice);
        ropt.extra_starts.push_back(cres.witness_x);
        if (cres.witness_y.cwiseAbs().maxCoeff() > 0)
          ropt.extra_starts.push_back(cres.witness_y);
      }
      NormEstimate real = op_norm_estimate(t, ep, ep, ropt);

      rep.add(make_record("complexification-agreement",
                          std::abs(cres.value - real.value),
                          2e-3 * std::max(1.0, real.value), 0.0,
                          {{"p", p}, {"matrix", m}}));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Operator-norm cross-checks
// ---------------------------------------------------------------------------

VerificationReport verify_opnorm_crosschecks(const OpnormCrossParams& prm) {
  VerificationReport rep;
  rep.suite = "opnorm";
  rep.seed = prm.seed;
  rep.params = {{"dualitySamples", prm.duality_samples},
                {"svdMatrices", prm.svd_matrices}};
  rep.tolerances = {{"duality-agreement", 1e-5},
                    {"bracket-order", 1e-12},
                    {"witness-reproduces-lower", 1e-10},
                    {"bruteforce-agreement", 1e-6},
                    {"bernstein-vs-singular", 2e-3},
                    {"residual-vs-singular", 2e-3}};

  const double pool[] = {1.0, 1.3, 1.5, 2.0, 2.5, 3.0,
                         std::numeric_limits<double>::infinity()};

  for (int i = 0; i < prm.duality_samples; ++i) {
    Rng rng = Rng::for_trial(prm.seed, 1000ULL + static_cast<std::uint64_t>(i));
    int rows = 1 + static_cast<int>(rng.below(6));
    int cols = 1 + static_cast<int>(rng.below(6));
    Matrix a = gaussian_matrix(rng, rows, cols);
    if (i % 4 == 3) {
      for (int rr = 0; rr < rows; ++rr)
        for (int cc = 0; cc < cols; ++cc)
          if (rng.below(2) == 0) a(rr, cc) = 0.0;
      if (a.cwiseAbs().maxCoeff() == 0.0) a(0, 0) = 1.0;
    }
    Exponent p(pool[rng.below(7)]);
    Exponent q(pool[rng.below(7)]);

    OpNormOptions opt;
    opt.restarts = 32;
    opt.seed = prm.seed + 13ULL * static_cast<std::uint64_t>(i);
    NormEstimate ea = op_norm_estimate(a, p, q, opt);
    NormEstimate et =
        op_norm_estimate(a.transpose(), q.conjugate(), p.conjugate(), opt);

    Json params = {{"i", i},
                   {"rows", rows},
                   {"cols", cols},
                   {"p", exponent_to_json(p)},
                   {"q", exponent_to_json(q)}};
    double scale = std::max(1.0, std::max(ea.lower, et.lower));
    rep.add(make_record("duality-agreement", std::abs(ea.lower - et.lower),
                        1e-5 * scale, 0.0, params));
    rep.add(make_record("bracket-order", ea.lower, ea.upper,
                        1e-12 * std::max(1.0, ea.upper), params));
    double wr = 0.0;
    if (ea.witness.size() > 0) {
      double den = lp_norm(ea.witness, p);
      if (den > 0) wr = lp_norm(a * ea.witness, q) / den;
    }
    rep.add(make_record("witness-reproduces-lower", std::abs(wr - ea.lower),
                        1e-10 * std::max(1.0, ea.lower), 0.0, params));
  }

  // Exhaustive brute force on narrow matrices.
  {
    const std::pair<double, double> pairs[] = {
        {1.0, 1.0},
        {1.0, std::numeric_limits<double>::infinity()},
        {1.5, 2.5},
        {2.0, 2.0},
        {3.0, 1.5},
        {std::numeric_limits<double>::infinity(),
         std::numeric_limits<double>::infinity()},
        {1.3, 3.0}};
    std::uint64_t stream = 40000;
    const int row_choices[] = {1, 2, 4};
    for (int rows : row_choices) {
      for (int cols = 1; cols <= 3; ++cols) {
        for (const auto& [pv, qv] : pairs) {
          Rng rng = Rng::for_trial(prm.seed, ++stream);
          Matrix a = gaussian_matrix(rng, rows, cols);
          Exponent p(pv), q(qv);
          double brute = op_norm_bruteforce(a, p, q);
          OpNormOptions opt;
          opt.seed = prm.seed + stream;
          NormEstimate est = op_norm_estimate(a, p, q, opt);
          rep.add(make_record(
              "bruteforce-agreement", std::abs(brute - est.lower),
              1e-6 * std::max(1.0, brute), 0.0,
              {{"rows", rows},
               {"cols", cols},
               {"p", exponent_to_json(p)},
               {"q", exponent_to_json(q)}}));
        }
      }
    }
  }

  // Widths against exact singular values on l_2 -> l_2.
  Exponent e2(2.0);
  for (int m = 0; m < prm.svd_matrices; ++m) {
    Rng rng = Rng::for_trial(prm.seed, 70000ULL + static_cast<std::uint64_t>(m));
    Matrix a = gaussian_matrix(rng, 5, 5);
    Eigen::JacobiSVD<Matrix> svd(a);
    OperatorSpec spec{a, e2, e2};
    SNumberOptions sopt;
    sopt.seed = prm.seed + static_cast<std::uint64_t>(m);
    for (int k = 1; k <= 4; ++k) {
      double sk = svd.singularValues()(k - 1);
      NormEstimate b = bernstein_number(spec, k, sopt);
      rep.add(make_record("bernstein-vs-singular", std::abs(b.value - sk),
                          2e-3 * std::max(1.0, sk), 0.0,
                          {{"matrix", m}, {"nth", k}}));
      double sk1 = svd.singularValues()(k);
      NormEstimate c = cosingularity_number(spec, k, sopt);
      rep.add(make_record("residual-vs-singular", std::abs(c.value - sk1),
                          2e-3 * std::max(1.0, sk1), 0.0,
                          {{"matrix", m}, {"nth", k}}));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Weight sequences and chain subsets
// ---------------------------------------------------------------------------

VerificationReport verify_sequences(const SequencesParams& prm) {
  VerificationReport rep;
  rep.suite = "sequences";
  rep.seed = prm.seed;
  rep.params = {{"weightSamples", prm.weight_samples},
                {"chainWindow", prm.chain_window}};
  rep.tolerances = {{"weight-anchors-exact", 0.0},
                    {"weight-nonincreasing", 1e-15},
                    {"weight-envelope", 1e-12},
                    {"weight-range", 0.0},
                    {"ratio-strictly-decreasing", 0.0},
                    {"chain-nesting", 0.0},
                    {"chain-difference-nonempty", 0.0},
                    {"chain-leading-elements", 0.0}};

  Exponent p(1.5);
  std::vector<std::uint64_t> all_m, even_m;
  for (std::uint64_t m = 1; m <= 41; ++m) all_m.push_back(m);
  for (std::uint64_t m = 2; m <= 82; m += 2) even_m.push_back(m);
  WeightSeq v = weight_seq(all_m, p);
  WeightSeq w = weight_seq(even_m, p);

  auto weight_checks = [&](const WeightSeq& seq, const std::string& which,
                           std::uint64_t stream) {
    double anchor_err = 0.0;
    for (const WeightAnchor& a : seq.anchors())
      anchor_err = std::max(
          anchor_err,
          std::abs(seq.eval_log2(static_cast<double>(a.log2_index)) - a.value));
    rep.add(make_record("weight-anchors-exact", anchor_err, 0.0, 0.0,
                        {{"sequence", which}}));

    double last_log = static_cast<double>(seq.anchors().back().log2_index);
    std::vector<double> xs;
    Rng rng = Rng::for_trial(prm.seed, stream);
    for (int i = 0; i < prm.weight_samples; ++i)
      xs.push_back(rng.uniform(0.0, last_log));
    std::sort(xs.begin(), xs.end());

    double worst_increase = 0.0, worst_env = 0.0, worst_range = 0.0;
    double prev = 1.0;  // value at index 1
    for (double x : xs) {
      double val = seq.eval_log2(x);
      worst_increase = std::max(worst_increase, val - prev);
      prev = val;
      double env = std::exp2(-seq.eta() * x);
      worst_env = std::max(worst_env, env - val);
      worst_range = std::max({worst_range, val - 1.0, -val});
    }
    rep.add(make_record("weight-nonincreasing", worst_increase, 0.0, 1e-15,
                        {{"sequence", which}}));
    rep.add(make_record("weight-envelope", worst_env, 0.0, 1e-12,
                        {{"sequence", which}}));
    rep.add(make_record("weight-range", worst_range, 0.0, 0.0,
                        {{"sequence", which}}));
  };
  weight_checks(v, "all-integers", 11);
  weight_checks(w, "even-integers", 12);

  // Decay-comparison ratios along w's anchors, for several c.
  for (double c : {0.25, 0.5, 1.0}) {
    std::vector<double> ratios;
    for (int k = 0; k < 6; ++k) {
      double log2n = static_cast<double>(w.anchors()[static_cast<size_t>(k)].log2_index);
      ratios.push_back(weight_ratio(v, w, c, log2n));
    }
    double min_gap = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k + 1 < ratios.size(); ++k)
      min_gap = std::min(min_gap, ratios[k] - ratios[k + 1]);
    rep.add(make_record("ratio-strictly-decreasing", 1e-12, min_gap, 0.0,
                        {{"c", c}}, ratios));
  }

  // Chain subsets: nested with nonempty (in fact infinite) differences.
  const std::pair<const char*, const char*> chain_pairs[] = {
      {"0.25", "0.3"}, {"0.3", "0.5"}, {"0.1", "0.9"}};
  for (const auto& [r1, r2] : chain_pairs) {
    ChainSubset s1(r1), s2(r2);
    std::uint64_t violations = 0, extra = 0;
    for (std::uint64_t z = 1; z <= prm.chain_window; ++z) {
      bool in1 = s1.contains(z), in2 = s2.contains(z);
      if (in1 && !in2) ++violations;
      if (in2 && !in1) ++extra;
    }
    Json params = {{"r1", r1}, {"r2", r2}, {"window", prm.chain_window}};
    rep.add(make_record("chain-nesting", static_cast<double>(violations), 0.0,
                        0.0, params));
    rep.add(make_record("chain-difference-nonempty", 1.0,
                        static_cast<double>(extra), 0.0, params));
  }
  {
    ChainSubset s("0.3");
    const std::uint64_t expect[] = {3, 20, 27, 54, 77};
    auto lead = s.first(5);
    double err = 0.0;
    for (int i = 0; i < 5; ++i)
      err = std::max(err, std::abs(static_cast<double>(lead[static_cast<size_t>(i)]) -
                                   static_cast<double>(expect[i])));
    rep.add(make_record("chain-leading-elements", err, 0.0, 0.0,
                        {{"r", "0.3"}}));
  }
  return rep;
}

}  // namespace banach
