// Report schema: record algebra, serialization stability, implied-constant
// folding and the plot-data exporter.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "banach/report.hpp"

using banach::fold_implied_constant;
using banach::ImpliedConstant;
using banach::InequalityRecord;
using banach::Json;
using banach::make_out_of_range;
using banach::make_record;
using banach::RecordStatus;
using banach::VerificationReport;

TEST_CASE("record algebra: margin sign and tolerance") {
  // Pass: lhs <= rhs.
  InequalityRecord r1 = make_record("a", 1.0, 2.0, 0.0);
  CHECK(r1.status == RecordStatus::pass);
  CHECK(r1.margin == doctest::Approx(1.0));
  // Fail: lhs > rhs + tol.
  InequalityRecord r2 = make_record("b", 2.0, 1.0, 0.5);
  CHECK(r2.status == RecordStatus::fail);
  CHECK(r2.margin == doctest::Approx(-1.0));
  // Tolerance rescues a small violation; the raw margin stays negative.
  InequalityRecord r3 = make_record("c", 1.0 + 1e-12, 1.0, 1e-9);
  CHECK(r3.status == RecordStatus::pass);
  CHECK(r3.margin < 0.0);
  // Exactly at -tol still passes.
  InequalityRecord r4 = make_record("d", 1.5, 1.0, 0.5);
  CHECK(r4.status == RecordStatus::pass);
  // The tolerance is echoed in params.
  CHECK(r4.params.at("tol").get<double>() == 0.5);
}

TEST_CASE("out-of-range records count neither way") {
  VerificationReport rep;
  rep.suite = "demo";
  rep.add(make_record("ok", 0.0, 1.0, 0.0));
  rep.add(make_out_of_range("skipped", Json{{"reason", "k exceeds basis"}}));
  rep.add(make_record("bad", 3.0, 1.0, 0.0));
  CHECK(rep.pass_count() == 1);
  CHECK(rep.fail_count() == 1);
  CHECK_FALSE(rep.all_pass());
  // min_margin ignores the out-of-range record.
  CHECK(rep.min_margin() == doctest::Approx(-2.0));
}

TEST_CASE("json layout and byte stability") {
  VerificationReport rep;
  rep.suite = "demo";
  rep.seed = 7;
  rep.params = Json{{"n", 3}};
  rep.tolerances = Json{{"ok", 1e-9}};
  rep.add(make_record("ok", 0.25, 1.0, 1e-9, Json{{"k", 2}}, {0.5, -0.5}));
  rep.add(make_out_of_range("skip", Json{{"reason", "n/a"}}));

  Json j = rep.to_json();
  CHECK(j.at("suite") == "demo");
  CHECK(j.at("seed") == 7);
  CHECK(j.at("params").at("n") == 3);
  CHECK(j.at("records").size() == 2);
  const Json& rec = j.at("records").at(0);
  CHECK(rec.at("name") == "ok");
  CHECK(rec.at("lhs") == 0.25);
  CHECK(rec.at("rhs") == 1.0);
  CHECK(rec.at("margin") == 0.75);
  CHECK(rec.at("status") == "pass");
  CHECK(rec.at("witness").size() == 2);
  CHECK(rec.at("params").at("k") == 2);
  CHECK(rec.at("params").at("tol") == 1e-9);
  // No witness key when the witness is empty.
  CHECK_FALSE(j.at("records").at(1).contains("witness"));
  CHECK(j.at("records").at(1).at("status") == "out-of-range");

  // Serialization is reproducible and emits keys in sorted order.
  std::string d1 = j.dump(2);
  std::string d2 = rep.to_json().dump(2);
  CHECK(d1 == d2);
  CHECK(d1.find("\"impliedConstants\"") < d1.find("\"params\""));
  CHECK(d1.find("\"params\"") < d1.find("\"records\""));
}

TEST_CASE("csv shape") {
  VerificationReport rep;
  rep.suite = "demo";
  rep.add(make_record("ok", 0.5, 1.0, 0.0, Json{{"k", 2}, {"p", 1.5}}));
  std::string csv = rep.to_csv();
  CHECK(csv.rfind("suite,name,status,lhs,rhs,margin,params\n", 0) == 0);
  CHECK(csv.find("demo,ok,pass,0.5,1.0,0.5,") != std::string::npos);
  // params render as quoted k=v pairs separated by semicolons.
  CHECK(csv.find("\"k=2;p=1.5;tol=0.0\"") != std::string::npos);
}

TEST_CASE("implied-constant folding keeps the max and counts instances") {
  std::vector<ImpliedConstant> table;
  fold_implied_constant(table, "K[p=1.5]", 1.5, 1.01);
  fold_implied_constant(table, "K[p=1.5]", 1.5, 1.20);
  fold_implied_constant(table, "K[p=1.5]", 1.5, 1.05);
  fold_implied_constant(table, "K[p=1.8]", 1.8, 0.9);
  REQUIRE(table.size() == 2);
  CHECK(table[0].name == "K[p=1.5]");
  CHECK(table[0].value == doctest::Approx(1.20));
  CHECK(table[0].instances == 3);
  CHECK(table[1].value == doctest::Approx(0.9));
  CHECK(table[1].instances == 1);
}

TEST_CASE("plot data pulls record fields and params columns") {
  VerificationReport rep;
  rep.suite = "demo";
  rep.add(make_record("a", 0.5, 1.0, 0.0, Json{{"k", 1}}));
  rep.add(make_record("a", 0.75, 1.0, 0.0, Json{{"k", 2}}));
  rep.add(make_record("b", 0.1, 1.0, 0.0));  // no "k": skipped
  std::string csv = banach::emit_plot_data(rep, {"k", "margin"});
  CHECK(csv.rfind("k,margin\n", 0) == 0);
  CHECK(csv.find("1,0.5\n") != std::string::npos);
  CHECK(csv.find("2,0.25\n") != std::string::npos);
  CHECK(csv.find("0.9") == std::string::npos);
}
