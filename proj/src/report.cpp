#include "banach/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace banach {

std::string to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::pass:
      return "pass";
    case RecordStatus::fail:
      return "fail";
    case RecordStatus::out_of_range:
      return "out-of-range";
  }
  return "fail";
}

InequalityRecord make_record(std::string name, double lhs, double rhs,
                             double tol_abs, Json params,
                             std::vector<double> witness) {
  InequalityRecord rec;
  rec.name = std::move(name);
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.margin = rhs - lhs;
  params["tol"] = tol_abs;
  rec.params = std::move(params);
  rec.status =
      (rec.margin >= -tol_abs) ? RecordStatus::pass : RecordStatus::fail;
  rec.witness = std::move(witness);
  return rec;
}

InequalityRecord make_out_of_range(std::string name, Json params) {
  InequalityRecord rec;
  rec.name = std::move(name);
  rec.params = std::move(params);
  rec.status = RecordStatus::out_of_range;
  return rec;
}

int VerificationReport::fail_count() const {
  return static_cast<int>(
      std::count_if(records.begin(), records.end(), [](const auto& r) {
        return r.status == RecordStatus::fail;
      }));
}

int VerificationReport::pass_count() const {
  return static_cast<int>(
      std::count_if(records.begin(), records.end(), [](const auto& r) {
        return r.status == RecordStatus::pass;
      }));
}

double VerificationReport::min_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& r : records)
    if (r.status != RecordStatus::out_of_range) m = std::min(m, r.margin);
  return m;
}

Json VerificationReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["params"] = params;
  Json recs = Json::array();
  for (const auto& r : records) {
    Json jr;
    jr["name"] = r.name;
    jr["params"] = r.params;
    jr["lhs"] = r.lhs;
    jr["rhs"] = r.rhs;
    jr["margin"] = r.margin;
    jr["status"] = to_string(r.status);
    if (!r.witness.empty()) jr["witness"] = r.witness;
    recs.push_back(std::move(jr));
  }
  j["records"] = std::move(recs);
  Json consts = Json::array();
  for (const auto& c : implied_constants) {
    Json jc;
    jc["name"] = c.name;
    jc["p"] = c.p;
    jc["value"] = c.value;
    jc["instances"] = c.instances;
    consts.push_back(std::move(jc));
  }
  j["impliedConstants"] = std::move(consts);
  j["tolerances"] = tolerances;
  j["seed"] = seed;
  return j;
}

namespace {

std::string scalar_to_csv(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string params_to_csv(const Json& params) {
  std::string out;
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (!out.empty()) out += ';';
    out += it.key();
    out += '=';
    out += scalar_to_csv(it.value());
  }
  return out;
}

}  // namespace

std::string VerificationReport::to_csv() const {
  std::ostringstream os;
  os << "suite,name,status,lhs,rhs,margin,params\n";
  for (const auto& r : records) {
    os << suite << ',' << r.name << ',' << to_string(r.status) << ','
       << Json(r.lhs).dump() << ',' << Json(r.rhs).dump() << ','
       << Json(r.margin).dump() << ",\"" << params_to_csv(r.params) << "\"\n";
  }
  return os.str();
}

void fold_implied_constant(std::vector<ImpliedConstant>& table,
                           const std::string& name, double p, double ratio) {
  for (auto& c : table) {
    if (c.name == name) {
      c.value = std::max(c.value, ratio);
      c.instances += 1;
      return;
    }
  }
  ImpliedConstant c;
  c.name = name;
  c.p = p;
  c.value = ratio;
  c.instances = 1;
  table.push_back(std::move(c));
}

std::string emit_plot_data(const VerificationReport& report,
                           const std::vector<std::string>& axes) {
  std::ostringstream os;
  for (size_t i = 0; i < axes.size(); ++i)
    os << (i ? "," : "") << axes[i];
  os << '\n';
  for (const auto& r : report.records) {
    std::vector<std::string> cells;
    bool ok = true;
    for (const std::string& axis : axes) {
      if (axis == "lhs")
        cells.push_back(Json(r.lhs).dump());
      else if (axis == "rhs")
        cells.push_back(Json(r.rhs).dump());
      else if (axis == "margin")
        cells.push_back(Json(r.margin).dump());
      else if (axis == "status")
        cells.push_back(to_string(r.status));
      else if (axis == "name")
        cells.push_back(r.name);
      else if (r.params.contains(axis))
        cells.push_back(scalar_to_csv(r.params[axis]));
      else {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (size_t i = 0; i < cells.size(); ++i)
      os << (i ? "," : "") << cells[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace banach
