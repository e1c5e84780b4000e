// banachlab: command-line front end for the certified mixed-norm toolkit.
//
// Subcommands:
//   verify {hadamard,eq4,lemma1iii,lemma3,lemma5,prop52,complexify}
//     run a verification suite (defaults reproduce the reference grids) and
//     emit its report as JSON or CSV; exit 0 iff every record passes.
//   opnorm    certified operator-norm bracket for a matrix (file or Walsh)
//   lambda    lower fundamental function of the standard block family
//   weights   weight-sequence anchors and point evaluations
//   chain     members of a chain subset M_r
//   hadamard  export a (scaled) Walsh matrix
//
// A flat key=value config file (--config) supplies defaults: keys are
// "subcommand.flag" paths like "verify.eq4.samples"; they are injected before
// the user's flags, so explicit flags win.  Unknown keys are rejected.
//
// Exit codes: 0 pass, 1 verification failure, 2 bad configuration, 3 solver
// contract failure (errors are mirrored as JSON on stderr).

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "banach/constructions.hpp"
#include "banach/errors.hpp"
#include "banach/opnorm.hpp"
#include "banach/parallel.hpp"
#include "banach/report.hpp"
#include "banach/sequences.hpp"
#include "banach/spaces.hpp"
#include "banach/three_valued.hpp"
#include "banach/verify.hpp"

namespace {

using banach::ConfigError;
using banach::Exponent;
using banach::Json;
using banach::Matrix;
using banach::VerificationReport;

// ---------------------------------------------------------------------------
// Output plumbing
// ---------------------------------------------------------------------------

struct OutputOpts {
  std::string out_path;
  std::string format = "json";
  std::string plot;  // comma-separated axes; switches to plot CSV
};

void attach_output(CLI::App* cmd, OutputOpts& o) {
  cmd->add_option("--out", o.out_path,
                  "write the result to this file instead of stdout");
  cmd->add_option("--format", o.format, "output format (json or csv)")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option(
      "--plot", o.plot,
      "comma-separated record axes (e.g. k,margin); emits plot CSV");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(path);
    if (!f) throw ConfigError("cannot open output file: " + path);
    f << text;
  }
}

int emit_report(const VerificationReport& rep, const OutputOpts& o) {
  std::string text;
  if (!o.plot.empty())
    text = emit_plot_data(rep, split_commas(o.plot));
  else if (o.format == "csv")
    text = rep.to_csv();
  else
    text = rep.to_json().dump(2);
  write_text(text, o.out_path);
  std::cerr << rep.suite << ": " << rep.records.size() << " records, "
            << rep.fail_count() << " failed\n";
  return rep.all_pass() ? 0 : 1;
}

void emit_json_result(const Json& j, const OutputOpts& o,
                      const std::string& csv) {
  if (o.format == "csv")
    write_text(csv, o.out_path);
  else
    write_text(j.dump(2), o.out_path);
}

// ---------------------------------------------------------------------------
// Shared flag parsing
// ---------------------------------------------------------------------------

Exponent parse_exponent(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF")
    return banach::exponent_inf();
  try {
    size_t used = 0;
    double val = std::stod(s, &used);
    if (used != s.size()) throw ConfigError("");
    return Exponent(val);
  } catch (const std::exception&) {
    throw ConfigError("expected an exponent >= 1 or 'inf', got \"" + s + "\"");
  }
}

template <class T>
void narrow(std::vector<T>& grid, const std::optional<T>& flag) {
  if (flag) grid = {*flag};
}

Matrix read_matrix_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read matrix file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(f, line)) {
    for (char& ch : line)
      if (ch == ',' || ch == ';' || ch == '\t') ch = ' ';
    std::istringstream ss(line);
    std::vector<double> row;
    double val;
    while (ss >> val) row.push_back(val);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ConfigError("matrix file is empty: " + path);
  size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols)
      throw ConfigError("matrix rows have inconsistent lengths: " + path);
  Matrix m(static_cast<Eigen::Index>(rows.size()),
           static_cast<Eigen::Index>(cols));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j];
  return m;
}

// ---------------------------------------------------------------------------
// Config file: flat key=value defaults, validated against the option tree
// and injected before the user's own flags.
// ---------------------------------------------------------------------------

using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

ConfigEntries read_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file: " + path);
  ConfigEntries entries;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": empty key or value");
    entries.emplace_back(key, value);
  }
  return entries;
}

std::vector<std::string> split_dots(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '.')) out.push_back(item);
  return out;
}

void validate_config(const CLI::App& app, const ConfigEntries& entries) {
  for (const auto& [key, value] : entries) {
    std::vector<std::string> parts = split_dots(key);
    if (parts.empty() || parts.back().empty())
      throw ConfigError("config: malformed key \"" + key + "\"");
    std::string flag = parts.back();
    if (flag == "config")
      throw ConfigError("config: the config file cannot set --config");
    parts.pop_back();
    const CLI::App* cur = &app;
    for (const std::string& name : parts) {
      try {
        cur = cur->get_subcommand(name);
      } catch (const CLI::Error&) {
        throw ConfigError("config: key \"" + key +
                          "\" names an unknown command \"" + name + "\"");
      }
    }
    if (cur->get_option_no_throw("--" + flag) == nullptr)
      throw ConfigError("config: key \"" + key + "\" names an unknown flag " +
                        "\"--" + flag + "\"");
  }
}

// Rebuilds the argument list with config-derived flags inserted before the
// user's flags (per-command defaults directly after the subcommand tokens,
// top-level ones up front), so explicit flags override via take-last.
std::vector<std::string> inject_config(const std::vector<std::string>& args,
                                       const ConfigEntries& entries,
                                       const CLI::App& app) {
  std::vector<std::string> path;
  size_t last_pos = 0;
  bool have_path = false;
  const CLI::App* cur = &app;
  for (size_t i = 0; i < args.size(); ++i) {
    const std::string& tok = args[i];
    if (!tok.empty() && tok[0] == '-') continue;
    // Skip probable values of the preceding "--flag value" pair.
    if (i > 0 && args[i - 1].size() >= 2 && args[i - 1][0] == '-' &&
        args[i - 1].find('=') == std::string::npos)
      continue;
    try {
      cur = cur->get_subcommand(tok);
      path.push_back(tok);
      last_pos = i;
      have_path = true;
    } catch (const CLI::Error&) {
      // not a subcommand token
    }
  }
  std::string invoked;
  for (size_t i = 0; i < path.size(); ++i)
    invoked += (i ? "." : "") + path[i];

  std::vector<std::string> front, mid;
  for (const auto& [key, value] : entries) {
    size_t dot = key.rfind('.');
    std::string kpath = (dot == std::string::npos) ? "" : key.substr(0, dot);
    std::string flag =
        "--" + ((dot == std::string::npos) ? key : key.substr(dot + 1));
    if (kpath.empty()) {
      front.push_back(flag);
      front.push_back(value);
    } else if (kpath == invoked) {
      mid.push_back(flag);
      mid.push_back(value);
    }
    // Entries for commands that were not invoked are validated but unused.
  }

  std::vector<std::string> out;
  out.insert(out.end(), front.begin(), front.end());
  if (have_path) {
    out.insert(out.end(), args.begin(), args.begin() + static_cast<long>(last_pos) + 1);
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), args.begin() + static_cast<long>(last_pos) + 1, args.end());
  } else {
    out.insert(out.end(), args.begin(), args.end());
  }
  return out;
}

void emit_error(const std::string& type, const std::string& message) {
  Json err = {{"error", {{"type", type}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
}

// ---------------------------------------------------------------------------
// Verify-suite flags
// ---------------------------------------------------------------------------

struct VerifyFlags {
  std::optional<double> p, q, v, sigma, r;
  std::optional<int> n, level, k, count, blocks, perturb, matrices, grid,
      restarts;
  std::optional<std::uint64_t> seed;
};

template <class T>
void add_opt(CLI::App* cmd, const std::string& name, std::optional<T>& slot,
             const std::string& help) {
  cmd->add_option(name, slot, help);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);

  CLI::App app{
      "certified checks for mixed-norm inequalities, factorization "
      "obstructions and weighted block constructions"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  try {
    int threads = 0;
    auto* threads_opt = app.add_option(
        "--threads", threads,
        "thread budget (default: BANACHLAB_THREADS or 1); results are "
        "identical for every budget");
    std::string config_path;
    app.add_option("--config", config_path,
                   "flat key=value defaults file (keys like "
                   "verify.eq4.samples); explicit flags override");

    // ---- verify ----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);

    struct Leaf {
      CLI::App* cmd = nullptr;
      VerifyFlags flags;
      OutputOpts out;
    };
    auto add_leaf = [&](const std::string& name, const std::string& help) {
      auto leaf = std::make_shared<Leaf>();
      leaf->cmd = verify->add_subcommand(name, help);
      attach_output(leaf->cmd, leaf->out);
      add_opt<std::uint64_t>(leaf->cmd, "--seed", leaf->flags.seed,
                             "base seed for all randomized probes");
      return leaf;
    };

    auto hada = add_leaf("hadamard",
                         "Walsh-matrix identities, norms and the "
                         "interpolation bound");
    add_opt<int>(hada->cmd, "--max-level,--level", hada->flags.level,
                 "largest doubling level");
    add_opt<int>(hada->cmd, "--restarts", hada->flags.restarts,
                 "random multistarts per norm estimate");
    add_opt<double>(hada->cmd, "--r", hada->flags.r,
                    "restrict the interpolation grid to one exponent");

    auto eq4 = add_leaf("eq4",
                        "span norm vs. coefficient dual norm, with the "
                        "reverse constant inferred");
    add_opt<double>(eq4->cmd, "--p", eq4->flags.p, "restrict to one p");
    add_opt<double>(eq4->cmd, "--v", eq4->flags.v, "restrict to one v");
    add_opt<int>(eq4->cmd, "--n", eq4->flags.n, "restrict to one n");
    add_opt<int>(eq4->cmd, "--count", eq4->flags.count,
                 "random samples per combination");

    auto l1 = add_leaf("lemma1iii",
                       "fundamental-function bounds and exact "
                       "exchangeability");
    add_opt<double>(l1->cmd, "--p", l1->flags.p, "restrict to one p");
    add_opt<double>(l1->cmd, "--v", l1->flags.v, "restrict to one v");
    add_opt<int>(l1->cmd, "--n", l1->flags.n, "largest system size");
    add_opt<int>(l1->cmd, "--count", l1->flags.count,
                 "random subsets per (n, k)");

    auto l3 = add_leaf("lemma3",
                       "block lower fundamental function vs. the weighted "
                       "bound");
    add_opt<double>(l3->cmd, "--p", l3->flags.p, "outer exponent");
    add_opt<int>(l3->cmd, "--blocks", l3->flags.blocks, "number of blocks");
    add_opt<int>(l3->cmd, "--k", l3->flags.k, "largest k probed");

    auto l5 = add_leaf("lemma5", "flat-vector l_2 bounds");
    add_opt<double>(l5->cmd, "--p", l5->flags.p, "restrict to one p");
    add_opt<double>(l5->cmd, "--q", l5->flags.q, "restrict to one q");
    add_opt<double>(l5->cmd, "--sigma", l5->flags.sigma,
                    "restrict to one sigma");
    add_opt<int>(l5->cmd, "--n", l5->flags.n, "largest system size");
    add_opt<int>(l5->cmd, "--restarts", l5->flags.restarts,
                 "random pattern-search starts");

    auto p52 = add_leaf("prop52", "factorization obstruction");
    add_opt<int>(p52->cmd, "--level", p52->flags.level, "doubling level");
    add_opt<double>(p52->cmd, "--p", p52->flags.p, "domain exponent");
    add_opt<double>(p52->cmd, "--r", p52->flags.r,
                    "intermediate factorization exponent");
    add_opt<int>(p52->cmd, "--count", p52->flags.count,
                 "random factorizations");
    add_opt<int>(p52->cmd, "--perturb", p52->flags.perturb,
                 "perturbation samples");
    add_opt<int>(p52->cmd, "--restarts", p52->flags.restarts,
                 "random multistarts per norm estimate");

    auto cpx = add_leaf("complexify",
                        "complexified norm sandwich and operator-norm "
                        "agreement");
    add_opt<double>(cpx->cmd, "--p", cpx->flags.p,
                    "restrict the vector-norm spaces to one p");
    add_opt<int>(cpx->cmd, "--count", cpx->flags.count,
                 "(x, y) samples per space");
    add_opt<int>(cpx->cmd, "--matrices", cpx->flags.matrices,
                 "random matrices per operator space");
    add_opt<int>(cpx->cmd, "--n", cpx->flags.n, "matrix dimension");
    add_opt<int>(cpx->cmd, "--grid", cpx->flags.grid,
                 "rotation grid resolution");

    // ---- utilities -------------------------------------------------------
    auto* opnorm =
        app.add_subcommand("opnorm", "certified operator-norm bracket");
    OutputOpts opnorm_out;
    attach_output(opnorm, opnorm_out);
    std::string op_matrix, op_p = "2", op_q = "2";
    int op_level = 0, op_restarts = 64;
    std::uint64_t op_seed = 1;
    double op_scale_r = 0.0;
    opnorm->add_option("--matrix", op_matrix,
                       "matrix file (rows of comma/space-separated numbers)");
    opnorm->add_option("--level", op_level,
                       "use the Walsh matrix of this doubling level instead");
    opnorm->add_option("--r", op_scale_r,
                       "with --level: scale the Walsh matrix to be norm-one "
                       "from l_r to l_{r'}");
    opnorm->add_option("--p", op_p, "domain exponent (number or inf)");
    opnorm->add_option("--q", op_q, "codomain exponent (number or inf)");
    opnorm->add_option("--restarts", op_restarts, "random multistarts");
    opnorm->add_option("--seed", op_seed, "seed for the random multistarts");

    auto* lambda = app.add_subcommand(
        "lambda", "lower fundamental function of the standard block family");
    OutputOpts lambda_out;
    attach_output(lambda, lambda_out);
    double la_p = 1.5;
    int la_blocks = 6, la_k = 0;
    lambda->add_option("--p", la_p, "exponent in (1, 2)");
    lambda->add_option("--blocks", la_blocks, "number of blocks");
    lambda->add_option("--k", la_k, "largest k (default: whole basis)");

    auto* weights = app.add_subcommand(
        "weights", "weight-sequence anchors and point evaluations");
    OutputOpts weights_out;
    attach_output(weights, weights_out);
    double w_p = 1.5;
    int w_count = 8, w_step = 1;
    std::string w_at;
    weights->add_option("--p", w_p, "exponent in (1, 2)");
    weights->add_option("--count", w_count, "number of index-set elements");
    weights->add_option("--step", w_step,
                        "index-set stride (1 = all integers, 2 = even)");
    weights->add_option("--at", w_at,
                        "comma-separated log2 indices to evaluate");

    auto* chain = app.add_subcommand("chain", "members of a chain subset");
    OutputOpts chain_out;
    attach_output(chain, chain_out);
    std::string ch_r = "0.3";
    int ch_first = 20;
    std::uint64_t ch_limit = 0;
    chain->add_option("--r", ch_r, "chain index, a decimal in (0, 1)");
    chain->add_option("--first", ch_first, "list this many leading members");
    chain->add_option("--limit", ch_limit,
                      "list all members up to this bound instead");

    auto* hexport =
        app.add_subcommand("hadamard", "export a (scaled) Walsh matrix");
    OutputOpts hexport_out;
    hexport_out.format = "csv";
    attach_output(hexport, hexport_out);
    int he_level = 4;
    double he_r = 0.0;
    hexport->add_option("--level", he_level, "doubling level");
    hexport->add_option("--r", he_r,
                        "scale to be norm-one from l_r to l_{r'}");

    // ---- config injection and parse --------------------------------------
    std::string pre_config;
    for (size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config" && i + 1 < args.size())
        pre_config = args[i + 1];
      else if (args[i].rfind("--config=", 0) == 0)
        pre_config = args[i].substr(9);
    }
    if (!pre_config.empty()) {
      ConfigEntries entries = read_config(pre_config);
      validate_config(app, entries);
      args = inject_config(args, entries, app);
    }

    std::reverse(args.begin(), args.end());
    app.parse(args);

    int budget = 1;
    if (const char* env = std::getenv("BANACHLAB_THREADS")) {
      try {
        budget = std::stoi(env);
      } catch (const std::exception&) {
        throw ConfigError("BANACHLAB_THREADS must be an integer");
      }
    }
    if (threads_opt->count() > 0) budget = threads;
    if (budget < 1)
      throw ConfigError("thread budget must be a positive integer");
    banach::set_thread_budget(budget);

    // ---- dispatch ---------------------------------------------------------
    if (verify->parsed()) {
      if (hada->cmd->parsed()) {
        banach::HadamardSuiteParams prm;
        if (hada->flags.level) prm.max_level = *hada->flags.level;
        if (hada->flags.restarts) prm.restarts = *hada->flags.restarts;
        narrow(prm.interpolation_rs, hada->flags.r);
        if (hada->flags.seed) prm.seed = *hada->flags.seed;
        return emit_report(verify_hadamard_suite(prm), hada->out);
      }
      if (eq4->cmd->parsed()) {
        banach::Eq4Params prm;
        narrow(prm.ps, eq4->flags.p);
        narrow(prm.vs, eq4->flags.v);
        narrow(prm.ns, eq4->flags.n);
        if (eq4->flags.count) prm.samples = *eq4->flags.count;
        if (eq4->flags.seed) prm.seed = *eq4->flags.seed;
        return emit_report(verify_eq4(prm), eq4->out);
      }
      if (l1->cmd->parsed()) {
        banach::Lemma1iiiParams prm;
        narrow(prm.ps, l1->flags.p);
        narrow(prm.vs, l1->flags.v);
        if (l1->flags.n) prm.max_n = *l1->flags.n;
        if (l1->flags.count) prm.subsets_per_k = *l1->flags.count;
        if (l1->flags.seed) prm.seed = *l1->flags.seed;
        return emit_report(verify_lemma_1iii(prm), l1->out);
      }
      if (l3->cmd->parsed()) {
        banach::Lemma3Params prm;
        if (l3->flags.p) prm.p = *l3->flags.p;
        if (l3->flags.blocks) prm.block_count = *l3->flags.blocks;
        if (l3->flags.k) prm.k_max = *l3->flags.k;
        if (l3->flags.seed) prm.seed = *l3->flags.seed;
        return emit_report(verify_lemma3(prm), l3->out);
      }
      if (l5->cmd->parsed()) {
        banach::Lemma5Params prm;
        narrow(prm.ps, l5->flags.p);
        narrow(prm.qs, l5->flags.q);
        narrow(prm.sigmas, l5->flags.sigma);
        if (l5->flags.n) prm.max_n = *l5->flags.n;
        if (l5->flags.restarts) prm.restarts = *l5->flags.restarts;
        if (l5->flags.seed) prm.seed = *l5->flags.seed;
        return emit_report(verify_lemma5(prm), l5->out);
      }
      if (p52->cmd->parsed()) {
        banach::Prop52Params prm;
        if (p52->flags.level) prm.level = *p52->flags.level;
        if (p52->flags.p) prm.p = *p52->flags.p;
        if (p52->flags.r) prm.r = *p52->flags.r;
        if (p52->flags.count) prm.count = *p52->flags.count;
        if (p52->flags.perturb) prm.perturb_count = *p52->flags.perturb;
        if (p52->flags.restarts) prm.restarts = *p52->flags.restarts;
        if (p52->flags.seed) prm.seed = *p52->flags.seed;
        return emit_report(verify_prop52(prm), p52->out);
      }
      if (cpx->cmd->parsed()) {
        banach::ComplexifyParams prm;
        narrow(prm.ps, cpx->flags.p);
        if (cpx->flags.count) prm.pairs = *cpx->flags.count;
        if (cpx->flags.matrices) prm.matrices = *cpx->flags.matrices;
        if (cpx->flags.n) prm.dim = *cpx->flags.n;
        if (cpx->flags.grid) prm.grid = *cpx->flags.grid;
        if (cpx->flags.seed) prm.seed = *cpx->flags.seed;
        return emit_report(verify_complexification(prm), cpx->out);
      }
    }

    if (opnorm->parsed()) {
      Matrix m;
      if (!op_matrix.empty()) {
        m = read_matrix_csv(op_matrix);
      } else if (op_level > 0) {
        if (op_scale_r > 0)
          m = banach::scaled_hadamard(op_level, Exponent(op_scale_r));
        else
          m = banach::hadamard(op_level).cast<double>();
      } else {
        throw ConfigError("opnorm needs --matrix FILE or --level L");
      }
      banach::OpNormOptions opt;
      opt.restarts = op_restarts;
      opt.seed = op_seed;
      Exponent p = parse_exponent(op_p), q = parse_exponent(op_q);
      banach::NormEstimate est = banach::op_norm_estimate(m, p, q, opt);
      Json j = {{"p", banach::exponent_to_json(p)},
                {"q", banach::exponent_to_json(q)},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"value", est.value},
                {"lower", est.lower},
                {"upper", est.upper},
                {"method", est.method},
                {"restarts", est.restarts},
                {"witness", std::vector<double>(
                                est.witness.data(),
                                est.witness.data() + est.witness.size())}};
      std::ostringstream csv;
      csv << "value,lower,upper,method\n"
          << Json(est.value).dump() << ',' << Json(est.lower).dump() << ','
          << Json(est.upper).dump() << ',' << est.method << "\n";
      emit_json_result(j, opnorm_out, csv.str());
      return 0;
    }

    if (lambda->parsed()) {
      Exponent ep(la_p);
      banach::WeightSeq w = banach::weight_seq({1, 2, 3, 4, 5, 6, 7, 8}, ep);
      std::vector<banach::ThreeValuedSystem> blocks;
      Json weights_json = Json::array();
      int total = 0;
      for (int b = 1; b <= la_blocks; ++b) {
        double vb = w.eval(static_cast<double>(b));
        blocks.push_back(banach::three_valued_system(b, ep, vb));
        weights_json.push_back(vb);
        total += b;
      }
      int kmax = (la_k > 0) ? la_k : total;
      if (kmax > total)
        throw ConfigError("lambda: k exceeds the basis size " +
                          std::to_string(total));
      Json values = Json::array();
      std::ostringstream csv;
      csv << "k,lambda\n";
      for (int k = 1; k <= kmax; ++k) {
        double lam = banach::lower_fundamental_lambda(blocks, ep, k);
        values.push_back({{"k", k}, {"lambda", lam}});
        csv << k << ',' << Json(lam).dump() << "\n";
      }
      Json j = {{"p", la_p},
                {"blocks", la_blocks},
                {"weights", weights_json},
                {"values", values}};
      emit_json_result(j, lambda_out, csv.str());
      return 0;
    }

    if (weights->parsed()) {
      if (w_step < 1 || w_count < 1)
        throw ConfigError("weights: --count and --step must be positive");
      std::vector<std::uint64_t> ms;
      for (int i = 1; i <= w_count; ++i)
        ms.push_back(static_cast<std::uint64_t>(i) *
                     static_cast<std::uint64_t>(w_step));
      banach::WeightSeq w = banach::weight_seq(ms, Exponent(w_p));
      Json anchors = Json::array();
      std::ostringstream csv;
      csv << "m,log2Index,value\n";
      for (const auto& a : w.anchors()) {
        anchors.push_back({{"m", a.m},
                           {"log2Index", static_cast<double>(a.log2_index)},
                           {"value", a.value}});
        csv << a.m << ',' << Json(static_cast<double>(a.log2_index)).dump()
            << ',' << Json(a.value).dump() << "\n";
      }
      Json evals = Json::array();
      for (const std::string& tok : split_commas(w_at)) {
        double x;
        try {
          x = std::stod(tok);
        } catch (const std::exception&) {
          throw ConfigError("weights: bad --at entry \"" + tok + "\"");
        }
        evals.push_back({{"log2n", x}, {"value", w.eval_log2(x)}});
      }
      Json j = {{"p", w_p}, {"eta", w.eta()}, {"anchors", anchors}};
      if (!evals.empty()) j["evaluations"] = evals;
      emit_json_result(j, weights_out, csv.str());
      return 0;
    }

    if (chain->parsed()) {
      banach::ChainSubset s(ch_r);
      std::vector<std::uint64_t> members;
      if (ch_limit > 0)
        members = s.window(ch_limit);
      else
        members = s.first(ch_first);
      Json j = {{"r", ch_r}, {"members", members}};
      std::ostringstream csv;
      csv << "member\n";
      for (auto z : members) csv << z << "\n";
      emit_json_result(j, chain_out, csv.str());
      return 0;
    }

    if (hexport->parsed()) {
      std::ostringstream csv;
      Json jm = Json::array();
      if (he_r > 0) {
        Matrix m = banach::scaled_hadamard(he_level, Exponent(he_r));
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
          Json row = Json::array();
          for (Eigen::Index jj = 0; jj < m.cols(); ++jj) {
            csv << (jj ? "," : "") << Json(m(i, jj)).dump();
            row.push_back(m(i, jj));
          }
          csv << "\n";
          jm.push_back(row);
        }
      } else {
        banach::IntMatrix m = banach::hadamard(he_level);
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
          Json row = Json::array();
          for (Eigen::Index jj = 0; jj < m.cols(); ++jj) {
            csv << (jj ? "," : "") << m(i, jj);
            row.push_back(m(i, jj));
          }
          csv << "\n";
          jm.push_back(row);
        }
      }
      Json j = {{"level", he_level}, {"matrix", jm}};
      if (he_r > 0) j["r"] = he_r;
      emit_json_result(j, hexport_out, csv.str());
      return 0;
    }

    throw ConfigError("no subcommand given");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("config", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    // ConfigError and any parameter-validation failure from the library.
    emit_error("config", e.what());
    return 2;
  } catch (const banach::SolverError& e) {
    Json err = {{"error",
                 {{"type", "solver"},
                  {"message", e.what()},
                  {"lower", e.lower},
                  {"upper", e.upper}}}};
    std::cerr << err.dump() << "\n";
    return 3;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 3;
  }
}
