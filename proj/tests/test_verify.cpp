// Integration checks for the verification suites: every suite runs green at
// reduced scale, emits the expected record families, echoes its parameters,
// and produces byte-identical reports across repeated runs and thread
// budgets.  The two cheap suites without dedicated CLI smoke runs
// (opnorm-crosschecks, sequences) also run at their default scale here.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <vector>

#include "banach/parallel.hpp"
#include "banach/verify.hpp"
#include "doctest.h"

namespace {

using banach::InequalityRecord;
using banach::RecordStatus;
using banach::VerificationReport;

int count_named(const VerificationReport& rep, const std::string& name) {
  return static_cast<int>(
      std::count_if(rep.records.begin(), rep.records.end(),
                    [&](const InequalityRecord& r) { return r.name == name; }));
}

bool has_constant_prefix(const VerificationReport& rep,
                         const std::string& prefix) {
  return std::any_of(rep.implied_constants.begin(),
                     rep.implied_constants.end(), [&](const auto& c) {
                       return c.name.rfind(prefix, 0) == 0 && c.instances > 0 &&
                              std::isfinite(c.value);
                     });
}

struct BudgetGuard {
  int saved = banach::thread_budget();
  ~BudgetGuard() { banach::set_thread_budget(saved); }
};

}  // namespace

TEST_CASE("hadamard suite passes and reports identities, norms, and bounds") {
  banach::HadamardSuiteParams prm;
  prm.max_level = 4;
  prm.interpolation_max_level = 3;
  prm.restarts = 8;
  const VerificationReport rep = banach::verify_hadamard_suite(prm);
  CHECK(rep.suite == "hadamard");
  CHECK(rep.all_pass());
  CHECK(rep.records.size() > 0);
  CHECK(count_named(rep, "identity") == 4);
  CHECK(count_named(rep, "norms") == 4);
  // Interpolation records: one per (r, level <= 3).
  CHECK(count_named(rep, "interpolation-bound") == 9);
  CHECK(rep.params.at("maxLevel").get<int>() == 4);
  CHECK(rep.seed == prm.seed);
  CHECK(rep.min_margin() >= -1e-9);
}

TEST_CASE("eq4 suite passes on a slice and infers K >= 1") {
  banach::Eq4Params prm;
  prm.ps = {1.5};
  prm.vs = {1.0};
  prm.ns = {1, 2};
  prm.samples = 40;
  const VerificationReport rep = banach::verify_eq4(prm);
  CHECK(rep.suite == "eq4");
  CHECK(rep.all_pass());
  CHECK(count_named(rep, "span-vs-dual") >= 2 * prm.samples);
  CHECK(count_named(rep, "dual-gap-contract") ==
        static_cast<int>(prm.ns.size()));
  CHECK(count_named(rep, "span-dual-K-at-least-one") == 1);
  CHECK(has_constant_prefix(rep, "span-dual-K["));
  for (const auto& c : rep.implied_constants) CHECK(c.value >= 1.0 - 1e-12);
}

TEST_CASE("lemma 1(iii) suite passes on a slice") {
  banach::Lemma1iiiParams prm;
  prm.ps = {1.5};
  prm.vs = {0.5};
  prm.max_n = 4;
  prm.subsets_per_k = 5;
  const VerificationReport rep = banach::verify_lemma_1iii(prm);
  CHECK(rep.suite == "lemma1iii");
  CHECK(rep.all_pass());
  CHECK(count_named(rep, "subset-norm-bound") > 0);
  CHECK(count_named(rep, "exchangeability") > 0);
  CHECK(has_constant_prefix(rep, "subset-K["));
}

TEST_CASE("lemma 3 suite marks out-of-range k and passes in range") {
  banach::Lemma3Params prm;
  prm.block_count = 4;  // total coordinate budget 1+2+3+4 = 10
  prm.k_max = 15;
  const VerificationReport rep = banach::verify_lemma3(prm);
  CHECK(rep.suite == "lemma3");
  CHECK(rep.all_pass());
  CHECK(count_named(rep, "lambda-dp-vs-bruteforce") > 0);
  int in_range = 0, beyond = 0;
  for (const auto& rec : rep.records) {
    if (rec.name != "block-lambda-bound") continue;
    const int k = rec.params.at("k").get<int>();
    if (rec.status == RecordStatus::out_of_range) {
      ++beyond;
      CHECK(k > 10);
    } else {
      ++in_range;
      CHECK(k <= 10);
    }
  }
  CHECK(in_range == 10);
  CHECK(beyond == 5);
  CHECK(has_constant_prefix(rep, "block-subset-K["));
}

TEST_CASE("lemma 5 suite passes and caps the n = 1 constants at one") {
  banach::Lemma5Params prm;
  prm.ps = {1.5};
  prm.qs = {3.0};
  prm.sigmas = {0.5};
  prm.max_n = 2;
  prm.restarts = 2;
  const VerificationReport rep = banach::verify_lemma5(prm);
  CHECK(rep.suite == "lemma5");
  CHECK(rep.all_pass());
  int n1_records = 0;
  for (const auto& rec : rep.records) {
    if (rec.params.contains("n") && rec.params.at("n").get<int>() == 1) {
      ++n1_records;
      CHECK(rec.rhs == 1.0);
      CHECK(rec.lhs <= 1.0 + 1e-9);
    }
  }
  CHECK(n1_records == 2);  // flat-l2-constant and flat-l2-furthermore
  CHECK(has_constant_prefix(rep, "flat-l2-K["));
  CHECK(has_constant_prefix(rep, "flat-l2-M["));
}

TEST_CASE("factorization-obstruction suite passes at reduced scale") {
  banach::Prop52Params prm;
  prm.level = 3;
  prm.count = 6;
  prm.perturb_count = 3;
  prm.restarts = 16;
  const VerificationReport rep = banach::verify_prop52(prm);
  CHECK(rep.suite == "prop52");
  CHECK(rep.all_pass());
  CHECK(count_named(rep, "inverse-norm-closed-form") == 1);
  CHECK(count_named(rep, "equality-factorization") == 1);
  CHECK(count_named(rep, "perturbed-obstruction") == prm.perturb_count);
}

TEST_CASE("complexification suite passes at reduced scale") {
  banach::ComplexifyParams prm;
  prm.ps = {2.0};
  prm.pairs = 50;
  prm.op_ps = {2.0};
  prm.matrices = 2;
  prm.dim = 3;
  prm.grid = 256;
  const VerificationReport rep = banach::verify_complexification(prm);
  CHECK(rep.suite == "complexify");
  CHECK(rep.all_pass());
  CHECK(count_named(rep, "complex-lower-sandwich") == prm.pairs);
  CHECK(count_named(rep, "complex-upper-sandwich") == prm.pairs);
  CHECK(count_named(rep, "complexification-agreement") == prm.matrices);
}

TEST_CASE("operator-norm cross-check suite passes at default scale") {
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport rep = banach::verify_opnorm_crosschecks({});
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  CHECK(rep.suite == "opnorm");
  CHECK(rep.all_pass());
  CHECK(count_named(rep, "duality-agreement") == 200);
  CHECK(count_named(rep, "bruteforce-agreement") > 0);
  CHECK(count_named(rep, "bernstein-vs-singular") > 0);
  MESSAGE("opnorm-crosschecks default scale: " << secs << " s");
  CHECK(secs < 300.0);
}

TEST_CASE("sequences suite passes at default scale") {
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport rep = banach::verify_sequences({});
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  CHECK(rep.suite == "sequences");
  CHECK(rep.all_pass());
  CHECK(count_named(rep, "weight-anchors-exact") > 0);
  CHECK(count_named(rep, "weight-envelope") > 0);
  CHECK(count_named(rep, "chain-nesting") > 0);
  CHECK(count_named(rep, "chain-leading-elements") > 0);
  int decreasing = 0;
  for (const auto& rec : rep.records) {
    if (rec.name != "ratio-strictly-decreasing") continue;
    ++decreasing;
    CHECK(rec.margin > 0.0);  // strict decrease, no tolerance rescue
  }
  CHECK(decreasing > 0);
  MESSAGE("sequences default scale: " << secs << " s");
  CHECK(secs < 120.0);
}

TEST_CASE("reports are byte-identical across reruns and thread budgets") {
  BudgetGuard guard;

  banach::Eq4Params eq;
  eq.ps = {1.5};
  eq.vs = {0.5};
  eq.ns = {2};
  eq.samples = 30;
  const std::string eq_once = banach::verify_eq4(eq).to_json().dump();
  const std::string eq_again = banach::verify_eq4(eq).to_json().dump();
  CHECK(eq_once == eq_again);

  banach::Prop52Params pr;
  pr.level = 3;
  pr.count = 5;
  pr.perturb_count = 2;
  pr.restarts = 12;
  banach::set_thread_budget(1);
  const std::string serial = banach::verify_prop52(pr).to_json().dump();
  banach::set_thread_budget(4);
  const std::string parallel = banach::verify_prop52(pr).to_json().dump();
  CHECK(serial == parallel);
  CHECK(serial.find("\"suite\"") != std::string::npos);

  banach::set_thread_budget(4);
  const std::string had_parallel =
      banach::verify_hadamard_suite({.max_level = 3, .interpolation_max_level = 2})
          .to_json()
          .dump();
  banach::set_thread_budget(1);
  const std::string had_serial =
      banach::verify_hadamard_suite({.max_level = 3, .interpolation_max_level = 2})
          .to_json()
          .dump();
  CHECK(had_parallel == had_serial);
}
