// Command-line front end: eval, sweep, fit, shape, compare, simulate.
//
// Exit codes: 0 success, 2 usage, 3 data error, 4 internal consistency failure.

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tennis/atp_data.hpp"
#include "tennis/closed_form.hpp"
#include "tennis/errors.hpp"
#include "tennis/exact_engine.hpp"
#include "tennis/monte_carlo.hpp"
#include "tennis/rule_shaper.hpp"
#include "tennis/sweep.hpp"

namespace {

using namespace tennis;

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitConsistency = 4;
constexpr double kAgreementTolerance = 1e-9;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProfileArgs {
  std::optional<double> p, pf, ps;
};

RuleKind require_game(const std::string& text) {
  const auto kind = parse_rule_kind(text);
  if (!kind) throw UsageError("unknown game '" + text + "' (expected A, Bj, T, B or C)");
  return *kind;
}

ServeProfile resolve_profile(RuleKind game, const ProfileArgs& a) {
  const bool single_variable = game == RuleKind::A || game == RuleKind::T;
  if (single_variable) {
    const auto p = a.p ? a.p : a.pf;
    if (!p) throw UsageError("game needs --p");
    return ServeProfile::uniform(*p);
  }
  if (a.pf && a.ps) return {*a.pf, *a.ps};
  if (a.p) return ServeProfile::uniform(*a.p);
  throw UsageError("game needs --pf and --ps");
}

std::optional<GameMetrics> closed_form_for(RuleKind game, const ServeProfile& profile, int x) {
  if (game == RuleKind::C && x != 3) return std::nullopt;
  return closed_form::metrics(game, profile);
}

void print_field(std::ostream& out, const std::optional<double>& v) {
  if (v) out << *v;
}

nlohmann::json json_or_null(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string game;
  ProfileArgs profile;
  int x = 3;
  bool json = false;
};

int run_eval(const EvalArgs& args) {
  const RuleKind game = require_game(args.game);
  const ServeProfile profile = resolve_profile(game, args.profile);
  const GameMetrics engine = metrics_exact(ServeSchedule::for_rule(game, args.x), profile);
  const auto closed = closed_form_for(game, profile, args.x);

  const std::vector<Metric> metrics{Metric::Win, Metric::BreakPointProb, Metric::Points,
                                    Metric::BreakPoints};
  bool disagree = false;
  nlohmann::json doc;
  std::cout << std::fixed << std::setprecision(6);
  if (!args.json) std::cout << "metric,closed_form,engine\n";
  for (Metric m : metrics) {
    const auto e = select(engine, m);
    if (!e) continue;
    const auto c = closed ? select(*closed, m) : std::nullopt;
    if (c && std::abs(*c - *e) > kAgreementTolerance) disagree = true;
    if (args.json) {
      doc[std::string(to_string(m))] = {{"closed_form", json_or_null(c)}, {"engine", *e}};
    } else {
      std::cout << to_string(m) << ',';
      print_field(std::cout, c);
      std::cout << ',' << *e << '\n';
    }
  }
  if (args.json) std::cout << doc.dump(2) << '\n';
  if (disagree) {
    std::cerr << "error: closed form and engine disagree beyond " << kAgreementTolerance << '\n';
    return kExitConsistency;
  }
  return 0;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::vector<std::string> games{"A", "T"};
  std::vector<std::string> metrics{"win", "bp", "points", "bps"};
  std::string variable = "p";
  double start = 0.0, stop = 1.0, step = 0.01;
  std::optional<double> delta, ps;
  int x = 3;
  std::string out;
  std::string svg;
};

int run_sweep(const SweepArgs& args) {
  SweepSpec spec;
  if (args.variable == "p") {
    spec.variable = SweepVariable::P;
  } else if (args.variable == "pf") {
    spec.variable = SweepVariable::PF;
  } else {
    throw UsageError("--var must be p or pf");
  }
  spec.start = args.start;
  spec.stop = args.stop;
  spec.step = args.step;
  spec.delta = args.delta;
  spec.fixed_ps = args.ps;
  spec.x = args.x;
  try {
    spec.validate();
  } catch (const RangeError& e) {
    throw UsageError(e.what());
  }

  std::vector<RuleKind> games;
  for (const auto& g : args.games) games.push_back(require_game(g));
  std::vector<Metric> metrics;
  for (const auto& m : args.metrics) {
    const auto metric = parse_metric(m);
    if (!metric) throw UsageError("unknown metric '" + m + "' (expected win, bp, points, bps)");
    metrics.push_back(*metric);
  }

  const SweepResult result = sweep(games, spec);
  const auto rows = sweep_rows(result, metrics);
  if (args.out.empty()) {
    write_sweep_csv(std::cout, rows, spec.variable);
  } else {
    std::ofstream file(args.out);
    if (!file) throw std::runtime_error("cannot write " + args.out);
    write_sweep_csv(file, rows, spec.variable);
  }
  if (!args.svg.empty()) {
    std::ofstream file(args.svg);
    if (!file) throw std::runtime_error("cannot write " + args.svg);
    write_sweep_svg(file, rows, spec.variable == SweepVariable::P ? "p" : "p_F");
  }
  return 0;
}

// ---------------------------------------------------------------- fit

StatsTable load_stats(const std::string& path) {
  StatsTable table = parse_stats_file(path);
  for (const auto& w : table.warnings) std::cerr << "warning: " << w << '\n';
  if (table.rows.empty()) throw UsageError(path + " contains no player rows");
  return table;
}

int run_fit(const std::string& path, bool json) {
  const StatsTable table = load_stats(path);
  const FitReport report = fit_report(table.rows);
  if (json) {
    nlohmann::json doc;
    for (const auto& r : report.rows) {
      doc["rows"].push_back({{"rank", r.stats.rank},
                             {"name", r.stats.name},
                             {"p_emp", r.p_emp},
                             {"predicted", r.predicted},
                             {"observed", r.stats.p_t_won
                                              ? nlohmann::json(r.stats.p_t_won->value())
                                              : nlohmann::json(nullptr)},
                             {"residual", json_or_null(r.residual)}});
    }
    const auto& s = report.summary;
    doc["summary"] = {{"observed_count", s.observed_count},
                      {"max_abs_residual", s.max_abs_residual},
                      {"mean_residual", s.mean_residual},
                      {"non_positive_count", s.non_positive_count}};
    std::cout << doc.dump(2) << '\n';
  } else {
    write_fit_csv(std::cout, report);
    write_fit_summary(std::cout, report.summary);
  }
  return 0;
}

// ---------------------------------------------------------------- shape

const PlayerStats& find_player(const std::vector<PlayerStats>& rows, const std::string& key) {
  const bool numeric = !key.empty() && std::all_of(key.begin(), key.end(), ::isdigit);
  for (const auto& row : rows) {
    if (numeric ? row.rank == std::stoi(key) : row.name == key) return row;
  }
  throw std::runtime_error("player '" + key + "' not found");
}

struct ShapeArgs {
  std::string data;
  std::string low = "T. Gabashvili";
  std::string high = "R. Federer";
  double low_target = 0.60;
  double high_target = 0.75;
  bool json = false;
};

int run_shape(const ShapeArgs& args) {
  const StatsTable table = load_stats(args.data);
  const PlayerStats& low = find_player(table.rows, args.low);
  const PlayerStats& high = find_player(table.rows, args.high);
  ShapingTargets targets{Probability(args.low_target), Probability(args.high_target)};
  try {
    targets.validate();
  } catch (const RangeError& e) {
    throw UsageError(e.what());
  }
  const ShapingSolution sol = recommend_cutoff(low, high, targets);
  if (sol.warning) std::cerr << "warning: " << *sol.warning << '\n';

  if (args.json) {
    nlohmann::json doc{{"p_trad", sol.p_trad},     {"p_exc", sol.p_exc},
                       {"x_low", sol.x_low},       {"x_high", sol.x_high},
                       {"x_recommended", sol.x_recommended}};
    if (sol.warning) doc["warning"] = *sol.warning;
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << std::fixed << std::setprecision(6) << "p_trad," << sol.p_trad << '\n'
              << "p_exc," << sol.p_exc << '\n'
              << std::setprecision(2) << "x_low," << sol.x_low << '\n'
              << "x_high," << sol.x_high << '\n'
              << "x_recommended," << sol.x_recommended << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- compare

int run_compare(const std::string& path, int x, bool json, bool pretty) {
  if (x < 0 || x > 6) throw UsageError("--x must lie in [0, 6]");
  const StatsTable table = load_stats(path);
  const auto rows = compare_table(table.rows, x);
  if (json) {
    write_compare_json(std::cout, rows, x);
  } else if (pretty) {
    write_compare_text(std::cout, rows);
  } else {
    write_compare_csv(std::cout, rows);
  }
  for (const auto& r : rows) {
    if (r.closed_form_gap && *r.closed_form_gap > kAgreementTolerance) {
      std::cerr << "error: closed form and engine disagree for rank " << r.rank << '\n';
      return kExitConsistency;
    }
  }
  return 0;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string game;
  ProfileArgs profile;
  int x = 3;
  std::uint64_t n = 1'000'000;
  std::uint64_t seed = 1;
  int threads = 0;
  bool json = false;
};

int run_simulate(const SimulateArgs& args) {
  const RuleKind game = require_game(args.game);
  const ServeProfile profile = resolve_profile(game, args.profile);
  const ServeSchedule schedule = ServeSchedule::for_rule(game, args.x);
  if (args.threads > 0) omp_set_num_threads(args.threads);

  SimConfig config;
  config.n_games = args.n;
  config.seed = args.seed;
  try {
    config.validate();
  } catch (const RangeError& e) {
    throw UsageError(e.what());
  }
  const SimResult sim = estimate_metrics(schedule, profile, config);
  const GameMetrics exact = metrics_exact(schedule, profile);

  struct Line {
    Metric metric;
    std::optional<Estimate> estimate;
  };
  const std::vector<Line> lines{{Metric::Win, sim.win},
                                {Metric::BreakPointProb, sim.bp_prob},
                                {Metric::Points, sim.points},
                                {Metric::BreakPoints, sim.bps}};

  nlohmann::json doc{{"n_games", sim.n_games}, {"seed", args.seed}};
  std::cout << std::fixed << std::setprecision(6);
  if (!args.json) std::cout << "metric,mean,std_err,exact,z\n";
  for (const auto& line : lines) {
    if (!line.estimate) continue;
    const double target = *select(exact, line.metric);
    std::optional<double> z;
    if (line.estimate->std_err && *line.estimate->std_err > 0.0) {
      z = (line.estimate->mean - target) / *line.estimate->std_err;
    }
    if (args.json) {
      doc[std::string(to_string(line.metric))] = {{"mean", line.estimate->mean},
                                                  {"std_err", json_or_null(line.estimate->std_err)},
                                                  {"exact", target},
                                                  {"z", json_or_null(z)}};
    } else {
      std::cout << to_string(line.metric) << ',' << line.estimate->mean << ',';
      if (line.estimate->std_err) {
        std::cout << *line.estimate->std_err;
      } else {
        std::cout << "NA";
      }
      std::cout << ',' << target << ',';
      if (z) {
        std::cout << *z;
      } else {
        std::cout << "NA";
      }
      std::cout << '\n';
    }
  }
  if (args.json) std::cout << doc.dump(2) << '\n';
  return 0;
}

void add_profile_options(CLI::App* cmd, ProfileArgs& p) {
  cmd->add_option("--p", p.p, "F's point-win probability (single-variable games)");
  cmd->add_option("--pf", p.pf, "p_F: point-win probability on full serve");
  cmd->add_option("--ps", p.ps, "p_S: point-win probability under the reduced condition");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markov-chain evaluation of tennis game rules"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Metrics for one game type (closed form and engine)");
  eval->add_option("--game", eval_args.game, "A, Bj, T, B or C")->required();
  add_profile_options(eval, eval_args.profile);
  eval->add_option("--x", eval_args.x, "C-game cutoff (second serve on the first x points)")
      ->check(CLI::Range(0, 6));
  eval->add_flag("--json", eval_args.json);

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Metric curves over a probability grid");
  sweep_cmd->add_option("--games", sweep_args.games, "comma-separated game types")
      ->delimiter(',');
  sweep_cmd->add_option("--metrics", sweep_args.metrics, "win,bp,points,bps")->delimiter(',');
  sweep_cmd->add_option("--var", sweep_args.variable, "p (p_F = p_S = p) or pf");
  sweep_cmd->add_option("--start", sweep_args.start);
  sweep_cmd->add_option("--stop", sweep_args.stop);
  sweep_cmd->add_option("--step", sweep_args.step);
  sweep_cmd->add_option("--delta", sweep_args.delta, "p_S = 1 - p_F + delta (pf sweeps)");
  sweep_cmd->add_option("--ps", sweep_args.ps, "fixed p_S (pf sweeps)");
  sweep_cmd->add_option("--x", sweep_args.x, "C-game cutoff")->check(CLI::Range(0, 6));
  sweep_cmd->add_option("--out", sweep_args.out, "CSV path (default stdout)");
  sweep_cmd->add_option("--svg", sweep_args.svg, "also write an SVG plot");

  std::string fit_data;
  bool fit_json = false;
  auto* fit = app.add_subcommand("fit", "Standard-game fit against observed service games");
  fit->add_option("--data", fit_data, "stats CSV")->required();
  fit->add_flag("--json", fit_json);

  ShapeArgs shape_args;
  auto* shape = app.add_subcommand("shape", "Solve for the single-serve cutoff x");
  shape->add_option("--data", shape_args.data, "stats CSV")->required();
  shape->add_option("--low", shape_args.low, "weaker player (rank or name)");
  shape->add_option("--high", shape_args.high, "stronger player (rank or name)");
  shape->add_option("--low-target", shape_args.low_target, "lower game-win target");
  shape->add_option("--high-target", shape_args.high_target, "upper game-win target");
  shape->add_flag("--json", shape_args.json);

  std::string compare_data;
  int compare_x = 3;
  bool compare_json = false;
  bool compare_pretty = false;
  auto* compare = app.add_subcommand("compare", "Existing vs proposed game per player");
  compare->add_option("--data", compare_data, "stats CSV")->required();
  compare->add_option("--x", compare_x, "cutoff for the proposed game");
  compare->add_flag("--json", compare_json);
  compare->add_flag("--pretty", compare_pretty, "three-decimal fixed-width table");

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate vs exact engine");
  simulate->add_option("--game", sim_args.game, "A, Bj, T, B or C")->required();
  add_profile_options(simulate, sim_args.profile);
  simulate->add_option("--x", sim_args.x, "C-game cutoff")->check(CLI::Range(0, 6));
  simulate->add_option("--n", sim_args.n, "number of games");
  simulate->add_option("--seed", sim_args.seed, "RNG seed");
  simulate->add_option("--threads", sim_args.threads, "OpenMP threads (0 = default)");
  simulate->add_flag("--json", sim_args.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eval) return run_eval(eval_args);
    if (*sweep_cmd) return run_sweep(sweep_args);
    if (*fit) return run_fit(fit_data, fit_json);
    if (*shape) return run_shape(shape_args);
    if (*compare) return run_compare(compare_data, compare_x, compare_json, compare_pretty);
    if (*simulate) return run_simulate(sim_args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
