#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tennis/types.hpp"

namespace tennis {

enum class SweepVariable { P, PF };

/// Grid over F's point probability. For `PF` sweeps the other coordinate is
/// either p_S = 1 - p_F + delta or a fixed p_S.
struct SweepSpec {
  SweepVariable variable = SweepVariable::P;
  double start = 0.0;
  double stop = 1.0;
  double step = 0.01;
  std::optional<double> delta;
  std::optional<double> fixed_ps;
  int x = 3;  ///< cutoff used for C games

  void validate() const;
  std::vector<double> grid() const;
};

enum class Metric { Win, BreakPointProb, Points, BreakPoints };

std::string_view to_string(Metric metric);
std::optional<Metric> parse_metric(std::string_view text);
std::optional<double> select(const GameMetrics& m, Metric metric);

struct SweepPoint {
  double p_f = 0.0;
  double p_s = 0.0;
  std::optional<GameMetrics> metrics;  ///< empty when singular or p_S off [0,1]
};

/// One evaluated grid per game; points ordered as SweepSpec::grid().
struct SweepResult {
  SweepSpec spec;
  std::vector<RuleKind> games;
  std::vector<std::vector<SweepPoint>> points;  ///< [game][grid index]
};

/// Exact-engine metrics on the grid, grid points spread over OpenMP threads.
SweepResult sweep(const std::vector<RuleKind>& games, const SweepSpec& spec);
/// Serial reference for `sweep`; identical output.
SweepResult sweep_serial(const std::vector<RuleKind>& games, const SweepSpec& spec);

struct SweepRow {
  std::string game;
  std::string metric;
  double p_f = 0.0;
  std::optional<double> p_s;  ///< only for PF sweeps
  double value = 0.0;
};

/// Flattens to rows ordered by game, then metric, then grid point. Metrics
/// absent for a game (e.g. break points under B) are omitted.
std::vector<SweepRow> sweep_rows(const SweepResult& result, const std::vector<Metric>& metrics);

/// `game,metric,p,value` for P sweeps, `game,metric,p_f,p_s,value` for PF.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, SweepVariable variable);
std::vector<SweepRow> read_sweep_csv(std::istream& in);

/// Minimal SVG 1.1 line chart: one polyline per game/metric, axes, legend.
void write_sweep_svg(std::ostream& out, const std::vector<SweepRow>& rows,
                     const std::string& x_label);

}  // namespace tennis
