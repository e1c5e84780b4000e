#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace banach {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Verification reports.
//
// Every check is an inequality record  lhs <= rhs  with margin = rhs - lhs.
// A record passes when margin >= -tol for its absolute tolerance tol (which
// is echoed in the record's params under "tol").  Equality checks are encoded
// as lhs = |error|, rhs = allowed error, tol = 0.  Records that probe a
// statement outside its hypotheses carry status "out-of-range" and count
// neither as passes nor failures.
//
// Serialized JSON layout (keys are emitted in sorted order, so output is
// byte-stable across runs and platforms):
//   {
//     "suite": ...,
//     "params": {...},
//     "records": [ {"name", "params", "lhs", "rhs", "margin",
//                   "status", "witness"?}, ... ],
//     "impliedConstants": [ {"name", "p", "value", "instances"}, ... ],
//     "tolerances": {...},
//     "seed": ...
//   }
// ---------------------------------------------------------------------------

enum class RecordStatus { pass, fail, out_of_range };

std::string to_string(RecordStatus s);

struct InequalityRecord {
  std::string name;
  Json params = Json::object();
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  RecordStatus status = RecordStatus::pass;
  std::vector<double> witness;  // optional attaining/offending point
};

// margin = rhs - lhs; passes iff margin >= -tol_abs.  tol_abs is recorded in
// params["tol"].
InequalityRecord make_record(std::string name, double lhs, double rhs,
                             double tol_abs, Json params = Json::object(),
                             std::vector<double> witness = {});

// A record for a probe outside the statement's hypotheses.
InequalityRecord make_out_of_range(std::string name,
                                   Json params = Json::object());

struct ImpliedConstant {
  std::string name;
  double p = 0.0;      // the exponent the constant belongs to
  double value = 0.0;  // best bound inferred from the instances seen
  int instances = 0;   // number of samples folded into the value
};

struct VerificationReport {
  std::string suite;
  Json params = Json::object();
  std::vector<InequalityRecord> records;
  std::vector<ImpliedConstant> implied_constants;
  Json tolerances = Json::object();  // policy constants, keyed by record name
  std::uint64_t seed = 0;

  void add(InequalityRecord rec) { records.push_back(std::move(rec)); }

  int fail_count() const;
  int pass_count() const;
  bool all_pass() const { return fail_count() == 0; }

  // Tightest margin over pass/fail records (ignores out-of-range).
  double min_margin() const;

  Json to_json() const;
  // One line per record: suite,name,status,lhs,rhs,margin,"k=v;..."
  std::string to_csv() const;
};

// Folds a sample ratio into an implied-constant table entry (creating it if
// absent): value = max(value, ratio), instances += 1.
void fold_implied_constant(std::vector<ImpliedConstant>& table,
                           const std::string& name, double p, double ratio);

// Two/three-column CSV for plotting: each axis is one of the record fields
// ("lhs", "rhs", "margin", "status", "name") or a key of the record's params.
// Records missing a requested axis are skipped.
std::string emit_plot_data(const VerificationReport& report,
                           const std::vector<std::string>& axes);

}  // namespace banach
