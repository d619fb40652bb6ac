#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "airylab/bubbles.hpp"
#include "airylab/constants.hpp"
#include "airylab/core.hpp"
#include "airylab/dyadic.hpp"
#include "airylab/io.hpp"
#include "airylab/maximize.hpp"
#include "airylab/norms.hpp"
#include "airylab/smoothing.hpp"

#ifndef AIRYLAB_VERSION
#define AIRYLAB_VERSION "0.1.0"
#endif

namespace airylab::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- defaults -------------------------------------------------------------

json constants_defaults() { return {{"p", 6.0}, {"theta_nodes", kDefaultThetaNodes}}; }

json quotient_defaults() {
  return {{"objective", "airy-critical"},
          {"p", 6.0},
          {"gamma", 0.0},
          {"profile", ""},
          {"t_half", 11.0},
          {"nt", 385},
          {"x_half", 70.0},
          {"nx", 467}};
}

json bubble_defaults() {
  return {{"p", 6.0},
          {"eps", json::array({0.2, 0.1, 0.05})},
          {"path", "substituted"},
          {"chi_half", 4.0},
          {"chi_n", 257},
          {"t_half", 1.0},
          {"nt", 129},
          {"x_half", 24.0},
          {"nx", 193},
          {"points_per_period", 12}};
}

json dyadic_defaults() {
  return {{"log2_hi", 10},
          {"ell_lo", -4},
          {"ell_hi", 4},
          {"samples", 4},
          {"alpha_num", 1},
          {"alpha_den", 100},
          {"overlap_log2_hi", 8},
          {"overlap_ell_lo", -2},
          {"overlap_ell_hi", 4}};
}

json smoothing_defaults() {
  return {{"n", 97},    {"t_half", 2.0}, {"nt", 81},          {"x_half", 6.0},
          {"nx", 241},  {"tol", 0.005},  {"max_doublings", 6}, {"schur_points", 10000}};
}

json maximize_defaults() {
  return {{"objective", "airy-critical"},
          {"p", 6.0},
          {"gamma", 0.0},
          {"max_iters", 400},
          {"initial_step", 0.5},
          {"backtrack", 0.5},
          {"stall_tol", 1e-7},
          {"stall_window", 20},
          {"restarts", 1},
          {"real", false},
          {"xi_half", 3.5},
          {"n", 193},
          {"airy_t_half", 4.0},
          {"airy_nt", 337},
          {"schrodinger_t_half", 11.0},
          {"schrodinger_nt", 385},
          {"x_half", 70.0},
          {"nx", 467}};
}

const std::map<std::string, json (*)()>& sections() {
  static const std::map<std::string, json (*)()> s{
      {"constants", constants_defaults},     {"quotient", quotient_defaults},
      {"bubble-sweep", bubble_defaults},     {"dyadic-scan", dyadic_defaults},
      {"smoothing-check", smoothing_defaults}, {"maximize", maximize_defaults}};
  return s;
}

// ---- config resolution ----------------------------------------------------

void merge_known(json& into, const json& from, const std::string& where, bool strict) {
  for (const auto& [k, v] : from.items()) {
    if (!into.contains(k)) {
      if (strict) throw UsageError("unknown config key '" + k + "' in " + where);
      continue;
    }
    if (into[k].is_number() && !v.is_number()) throw UsageError("config key '" + k + "' must be numeric");
    if (into[k].is_boolean() && !v.is_boolean()) throw UsageError("config key '" + k + "' must be boolean");
    if (into[k].is_string() && !v.is_string()) throw UsageError("config key '" + k + "' must be a string");
    if (into[k].is_array() && !v.is_array()) throw UsageError("config key '" + k + "' must be an array");
    into[k] = v;
  }
}

// Top-level scalar keys apply to every section that knows them; an object
// under the section's name applies to that section only.
json resolve_section(const std::string& name, const json& file) {
  json cfg = sections().at(name)();
  if (file.is_null()) return cfg;
  json top = json::object();
  for (const auto& [k, v] : file.items()) {
    if (!v.is_object() && k != "seed") top[k] = v;
  }
  merge_known(cfg, top, "top level", false);
  if (file.contains(name)) merge_known(cfg, file.at(name), name, true);
  return cfg;
}

void check_file_keys(const json& file) {
  if (file.is_null()) return;
  if (!file.is_object()) throw UsageError("config file must hold a JSON object");
  for (const auto& [k, v] : file.items()) {
    if (k == "seed") continue;
    if (v.is_object()) {
      if (!sections().count(k)) throw UsageError("unknown config section '" + k + "'");
      continue;
    }
    bool known = false;
    for (const auto& [name, make] : sections()) known = known || make().contains(k);
    if (!known) throw UsageError("unknown config key '" + k + "'");
  }
}

json parse_value(const json& like, const std::string& key, const std::string& text) {
  if (like.is_string()) return text;
  json v;
  try {
    v = json::parse(text);
  } catch (const json::parse_error&) {
    throw UsageError("--" + key + ": cannot parse '" + text + "'");
  }
  if (!v.is_number()) throw UsageError("--" + key + ": expected a number, got '" + text + "'");
  if (like.is_number_integer() && !v.is_number_integer()) {
    throw UsageError("--" + key + ": expected an integer, got '" + text + "'");
  }
  if (like.is_number_float()) return v.get<double>();
  return v;
}

std::string flag_name(std::string key) {
  for (auto& c : key) {
    if (c == '_') c = '-';
  }
  return "--" + key;
}

// One CLI11 option per config key, captured as text and converted after
// parsing so that only flags actually given override the config.
struct FlagSet {
  json defaults;
  std::map<std::string, std::string> scalars;
  std::map<std::string, std::vector<std::string>> lists;
  std::map<std::string, bool> bools;
  std::map<std::string, CLI::Option*> options;

  void attach(CLI::App* app) {
    for (const auto& [k, v] : defaults.items()) {
      const std::string flag = flag_name(k);
      if (v.is_boolean()) {
        options[k] = app->add_flag(flag, bools[k], k);
      } else if (v.is_array()) {
        options[k] = app->add_option(flag, lists[k], k)->expected(1, 64);
      } else {
        options[k] = app->add_option(flag, scalars[k], k);
      }
    }
  }

  void apply(json& cfg) const {
    for (const auto& [k, opt] : options) {
      if (opt->count() == 0) continue;
      const json& like = defaults.at(k);
      if (like.is_boolean()) {
        cfg[k] = bools.at(k);
      } else if (like.is_array()) {
        json arr = json::array();
        for (const auto& s : lists.at(k)) arr.push_back(parse_value(json(0.0), k, s));
        cfg[k] = arr;
      } else {
        cfg[k] = parse_value(like, k, scalars.at(k));
      }
    }
  }
};

// ---- artifacts ------------------------------------------------------------

struct Context {
  fs::path out_dir;
  std::uint64_t seed;
  std::ostream& out;
};

json envelope(const std::string& command, const json& cfg, std::uint64_t seed, const json& tol,
              const json& result) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = "airylab";
  j["version"] = AIRYLAB_VERSION;
  j["command"] = command;
  j["config"] = cfg;
  j["seeds"] = {{"seed", seed}};
  j["tolerances"] = tol;
  j["result"] = result;
  return j;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

void write_json(const fs::path& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

// CSV with a leading comment-free header; metadata goes in the JSON sidecar.
std::string history_csv(const std::vector<RunSummary>& runs) {
  std::ostringstream os;
  os << "run,objective,init,seed,iteration,quotient\n";
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const auto& run = runs[r];
    for (std::size_t i = 0; i < run.history.size(); ++i) {
      os << r << ',' << to_string(run.objective) << ',' << to_string(run.init) << ',' << run.seed
         << ',' << i << ',' << format_real(run.history[i]) << '\n';
    }
  }
  return os.str();
}

double num(const json& cfg, const char* k) { return cfg.at(k).get<double>(); }
std::size_t count(const json& cfg, const char* k) {
  const auto v = cfg.at(k).get<std::int64_t>();
  if (v < 2) throw DomainError(std::string(k) + " must be >= 2");
  return static_cast<std::size_t>(v);
}
int integer(const json& cfg, const char* k) { return cfg.at(k).get<int>(); }

// ---- commands -------------------------------------------------------------

json cmd_constants(const json& cfg, const Context& ctx) {
  const ExponentTriple exps = critical_exponents(num(cfg, "p"));
  const APValue a = a_p_value(exps, integer(cfg, "theta_nodes"));
  const json result = {{"p", a.p},
                       {"q", a.q},
                       {"gamma", exps.gamma},
                       {"a_p_gamma", a.gamma_form},
                       {"a_p_quad", a.quad_form},
                       {"relative_gap", a.relative_gap()},
                       {"agreement", a.relative_gap() <= 1e-10}};
  const json j = envelope("constants", cfg, ctx.seed, {{"agreement", 1e-10}}, result);
  write_json(ctx.out_dir / "constants.json", j);
  return j;
}

FreqProfile default_gaussian() {
  return FreqProfile::sample(FreqGrid(-4.0, 4.0, 257),
                             [](double xi) { return cplx{std::exp(-0.5 * xi * xi), 0.0}; });
}

json cmd_quotient(const json& cfg, const Context& ctx) {
  const Objective obj = parse_objective(cfg.at("objective").get<std::string>());
  const double p = num(cfg, "p");
  const ExponentTriple exps =
      obj == Objective::airy_subcritical ? make_exponents(p, num(cfg, "gamma")) : critical_exponents(p);
  const std::string path = cfg.at("profile").get<std::string>();
  const FreqProfile u = path.empty() ? default_gaussian() : read_profile_csv(path);
  const SpaceTimeGrid grid = SpaceTimeGrid::centered(num(cfg, "t_half"), count(cfg, "nt"),
                                                     num(cfg, "x_half"), count(cfg, "nx"));
  const double qv = objective_quotient(u, obj, exps, grid);
  const json result = {{"objective", to_string(obj)},
                       {"p", exps.p},
                       {"q", std::isinf(exps.q) ? json("inf") : json(exps.q)},
                       {"gamma", exps.gamma},
                       {"profile_nodes", u.size()},
                       {"mass", l2_mass(u)},
                       {"quotient", qv},
                       {"quotient_root", std::pow(qv, 1.0 / exps.p)}};
  const json j = envelope("quotient", cfg, ctx.seed,
                          {{"quadrature", "trapezoid"}, {"window", "fixed, no tail correction"}}, result);
  write_json(ctx.out_dir / "quotient.json", j);
  return j;
}

json cmd_bubble(const json& cfg, const Context& ctx) {
  const ExponentTriple exps = critical_exponents(num(cfg, "p"));
  const double half = num(cfg, "chi_half");
  const FreqProfile chi = FreqProfile::sample(FreqGrid(-half, half, count(cfg, "chi_n")), [](double s) {
    return cplx{std::exp(-0.5 * s * s), 0.0};
  });
  BubbleSweepConfig bc;
  bc.window = SpaceTimeGrid::centered(num(cfg, "t_half"), count(cfg, "nt"), num(cfg, "x_half"),
                                      count(cfg, "nx"));
  bc.points_per_period = integer(cfg, "points_per_period");
  const std::string path = cfg.at("path").get<std::string>();
  if (path == "substituted") {
    bc.path = BubblePath::substituted;
  } else if (path == "direct") {
    bc.path = BubblePath::direct;
  } else {
    throw DomainError("bubble-sweep: path must be substituted or direct");
  }
  const auto eps = cfg.at("eps").get<std::vector<double>>();
  const auto rows = bubble_sweep(chi, exps, eps, bc);
  const std::string csv = bubble_sweep_csv(rows);
  write_text(ctx.out_dir / "bubble_sweep.csv", csv);

  json table = json::array();
  for (const auto& r : rows) {
    table.push_back({{"eps", r.eps},
                     {"quotient_two", r.quotient_two},
                     {"quotient_one", r.quotient_one},
                     {"target_two", r.target_two},
                     {"target_one", r.target_one},
                     {"rel_err_two", r.rel_err_two},
                     {"rel_err_one", r.rel_err_one}});
  }
  const json result = {{"a_p", a_p_closed_form(exps)}, {"rows", table}, {"csv", "bubble_sweep.csv"}};
  const json j = envelope("bubble-sweep", cfg, ctx.seed,
                          {{"theta_nodes", kHomogenizationThetaNodes}}, result);
  write_json(ctx.out_dir / "bubble_sweep.json", j);
  return j;
}

json cmd_dyadic(const json& cfg, const Context& ctx) {
  const Lemma34Scan scan = lemma34_scan(integer(cfg, "log2_hi"), integer(cfg, "ell_lo"),
                                        integer(cfg, "ell_hi"), integer(cfg, "samples"));
  const Rational alpha{cfg.at("alpha_num").get<std::int64_t>(), cfg.at("alpha_den").get<std::int64_t>()};
  const int olog = integer(cfg, "overlap_log2_hi");
  const int olo = integer(cfg, "overlap_ell_lo");
  const int ohi = integer(cfg, "overlap_ell_hi");
  const auto fam = sim_pairs_in_window(olog, olo, ohi);
  const auto fam2 = sim_pairs_in_window(olog + 1, olo, ohi);
  const OverlapScan o1 = parallelogram_overlap(fam, alpha);
  const OverlapScan o2 = parallelogram_overlap(fam2, alpha);
  const json result = {
      {"pairs_checked", scan.pairs_checked},
      {"failures", scan.failures},
      {"max_overlap", std::max(o1.max_overlap, o2.max_overlap)},
      {"overlap",
       {{"window", {{"pairs", o1.pairs}, {"max_overlap", o1.max_overlap}, {"exact_tests", o1.exact_tests}}},
        {"doubled_window",
         {{"pairs", o2.pairs}, {"max_overlap", o2.max_overlap}, {"exact_tests", o2.exact_tests}}},
        {"stable", o1.max_overlap == o2.max_overlap}}}};
  const json j = envelope("dyadic-scan", cfg, ctx.seed, {{"arithmetic", "exact"}}, result);
  write_json(ctx.out_dir / "dyadic_scan.json", j);
  return j;
}

json cmd_smoothing(const json& cfg, const Context& ctx) {
  const FreqGrid fg(0.5, 2.0, count(cfg, "n"));
  const FreqProfile u = FreqProfile::sample(fg, [](double xi) {
    const double s = (xi - 1.25) / 0.75;
    return std::abs(s) < 1.0 ? cplx{std::exp(-1.0 / (1.0 - s * s)), 0.0} : cplx{};
  });
  const SpaceTimeGrid start = SpaceTimeGrid::centered(num(cfg, "t_half"), count(cfg, "nt"),
                                                      num(cfg, "x_half"), count(cfg, "nx"));
  const double tol = num(cfg, "tol");
  const AdaptiveSmoothing s = local_smoothing_adaptive(
      u, [](double x) { return std::exp(-x * x); }, start, tol, integer(cfg, "max_doublings"));
  const SchurSup sup = schur_sup_bound(static_cast<std::size_t>(integer(cfg, "schur_points")));
  const json result = {
      {"local_smoothing",
       {{"lhs", s.value.lhs},
        {"rhs", s.value.rhs},
        {"ratio", s.value.ratio()},
        {"t_half", s.t_half},
        {"doublings", s.doublings},
        {"last_shell_fraction", s.last_shell_fraction},
        {"converged", s.converged}}},
      {"schur",
       {{"numerical_sup", sup.numerical_sup},
        {"argmax", sup.argmax},
        {"reference_bound", sup.proven_bound},
        {"closed_form", 0.5 * (std::sqrt(3.0) + 1.0)},
        {"max_residual", sup.max_residual}}}};
  const json j = envelope("smoothing-check", cfg, ctx.seed, {{"shell_tol", tol}}, result);
  write_json(ctx.out_dir / "smoothing_check.json", j);
  return j;
}

json run_json(const RunSummary& r) {
  return {{"objective", to_string(r.objective)},
          {"init", to_string(r.init)},
          {"seed", r.seed},
          {"quotient", r.quotient},
          {"converged", r.converged},
          {"iterations", r.iterations}};
}

json cmd_maximize(const json& cfg, const Context& ctx) {
  AscentConfig ac;
  ac.objective = parse_objective(cfg.at("objective").get<std::string>());
  ac.max_iters = integer(cfg, "max_iters");
  ac.initial_step = num(cfg, "initial_step");
  ac.backtrack = num(cfg, "backtrack");
  ac.stall_tol = num(cfg, "stall_tol");
  ac.stall_window = integer(cfg, "stall_window");
  ac.restarts = integer(cfg, "restarts");
  ac.real_constraint = cfg.at("real").get<bool>();
  ac.gamma = num(cfg, "gamma");
  ac.seed = ctx.seed;
  ac.validate();

  const double p = num(cfg, "p");
  ThresholdGrids grids{FreqGrid(-num(cfg, "xi_half"), num(cfg, "xi_half"), count(cfg, "n")),
                       SpaceTimeGrid::centered(num(cfg, "airy_t_half"), count(cfg, "airy_nt"),
                                               num(cfg, "x_half"), count(cfg, "nx")),
                       SpaceTimeGrid::centered(num(cfg, "schrodinger_t_half"),
                                               count(cfg, "schrodinger_nt"), num(cfg, "x_half"),
                                               count(cfg, "nx"))};
  const json tol = {{"stall_tol", ac.stall_tol}, {"stall_window", ac.stall_window}};

  json result;
  std::vector<RunSummary> runs;
  if (ac.objective == Objective::airy_critical) {
    ThresholdReport r = threshold_report(critical_exponents(p), ac, grids);
    result = {{"p", r.p},
              {"q", r.q},
              {"A_p_est", r.A_p_est},
              {"S_p_est", r.S_p_est},
              {"S_p_gaussian", r.S_p_gaussian},
              {"a_p_exact", r.a_p_exact},
              {"margin", r.margin},
              {"airy_converged", r.airy_converged},
              {"schrodinger_converged", r.schrodinger_converged},
              {"verdict", r.verdict},
              {"caveats", r.caveats}};
    runs = std::move(r.runs);
  } else {
    const ExponentTriple exps = ac.objective == Objective::airy_subcritical
                                    ? make_exponents(p, ac.gamma)
                                    : critical_exponents(p);
    const SpaceTimeGrid& grid = ac.objective == Objective::schrodinger ? grids.schrodinger : grids.airy;
    std::vector<std::pair<InitKind, std::uint64_t>> starts{{InitKind::gaussian, ac.seed}};
    for (int r = 0; r < ac.restarts; ++r) {
      starts.emplace_back(InitKind::random, ac.seed + static_cast<std::uint64_t>(r));
    }
    RunSummary best{};
    bool have = false;
    for (const auto& [kind, seed] : starts) {
      const AscentResult a = ascend(initial_profile(kind, grids.freq, seed), ac, exps, grid);
      runs.push_back({ac.objective, kind, seed, a.best_quotient, a.converged, a.iterations, a.history});
      if (!have || a.best_quotient > best.quotient) best = runs.back();
      have = true;
    }
    result = {{"objective", to_string(ac.objective)},
              {"p", exps.p},
              {"q", std::isinf(exps.q) ? json("inf") : json(exps.q)},
              {"gamma", exps.gamma},
              {"best_quotient", best.quotient},
              {"converged", best.converged}};
    if (ac.objective == Objective::schrodinger) {
      result["S_p_gaussian"] = gaussian_trial(exps, grids.freq, grids.schrodinger).quotient;
    }
  }
  json rj = json::array();
  for (const auto& r : runs) rj.push_back(run_json(r));
  result["runs"] = rj;
  result["history_csv"] = "maximize_history.csv";
  write_text(ctx.out_dir / "maximize_history.csv", history_csv(runs));
  const json j = envelope("maximize", cfg, ctx.seed, tol, result);
  write_json(ctx.out_dir / "maximize.json", j);
  return j;
}

using Command = json (*)(const json&, const Context&);

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> c{
      {"constants", cmd_constants},     {"quotient", cmd_quotient},
      {"bubble-sweep", cmd_bubble},     {"dyadic-scan", cmd_dyadic},
      {"smoothing-check", cmd_smoothing}, {"maximize", cmd_maximize}};
  return c;
}

json read_config(const std::string& path) {
  if (path.empty()) return nullptr;
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open config file " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical lab for Airy-Strichartz extremal problems", "airylab"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(AIRYLAB_VERSION));
  std::string config_path;
  std::string out_dir = "out";
  std::uint64_t seed = 1;
  app.add_option("--config", config_path, "JSON config file (flags override it)");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--seed", seed, "64-bit RNG seed");

  std::map<std::string, std::unique_ptr<FlagSet>> flagsets;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, make] : sections()) {
    CLI::App* sub = app.add_subcommand(name);
    auto fs = std::make_unique<FlagSet>();
    fs->defaults = make();
    fs->attach(sub);
    flagsets[name] = std::move(fs);
    subs[name] = sub;
  }
  CLI::App* all = app.add_subcommand("report-all", "run every experiment with one seed");

  if (args.empty()) {
    err << app.help();
    return kExitUsage;
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << AIRYLAB_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const json file = read_config(config_path);
  check_file_keys(file);
  if (!file.is_null() && file.contains("seed") && app.get_option("--seed")->count() == 0) {
    if (!file.at("seed").is_number_unsigned()) throw UsageError("config seed must be a nonnegative integer");
    seed = file.at("seed").get<std::uint64_t>();
  }
  fs::create_directories(out_dir);
  const Context ctx{out_dir, seed, out};

  if (all->parsed()) {
    json manifest;
    manifest["schema_version"] = kSchemaVersion;
    manifest["tool"] = "airylab";
    manifest["version"] = AIRYLAB_VERSION;
    manifest["command"] = "report-all";
    manifest["seeds"] = {{"seed", seed}};
    json parts = json::object();
    for (const char* name : {"constants", "bubble-sweep", "dyadic-scan", "smoothing-check", "maximize"}) {
      const json cfg = resolve_section(name, file);
      parts[name] = commands().at(name)(cfg, ctx)["result"];
    }
    manifest["result"] = parts;
    write_json(ctx.out_dir / "report_all.json", manifest);
    out << manifest.dump(2) << "\n";
    return kExitOk;
  }

  for (const auto& [name, sub] : subs) {
    if (!sub->parsed()) continue;
    json cfg = resolve_section(name, file);
    flagsets.at(name)->apply(cfg);
    const json j = commands().at(name)(cfg, ctx);
    out << j["result"].dump(2) << "\n";
    return kExitOk;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const nlohmann::json::exception& e) {
    err << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run(const std::vector<std::string>& args) { return run(args, std::cout, std::cerr); }

}  // namespace airylab::cli
