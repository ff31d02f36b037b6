#include "tennis/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "tennis/errors.hpp"
#include "tennis/exact_engine.hpp"

namespace tennis {

void SweepSpec::validate() const {
  if (!(start >= 0.0 && stop <= 1.0)) throw RangeError("sweep bounds must lie in [0,1]");
  if (!(start < stop)) throw RangeError("sweep start must be below stop");
  if (!(step > 0.0 && step <= stop - start)) throw RangeError("sweep step must be in (0, stop-start]");
  if (delta && !(*delta >= 0.0 && *delta <= 0.5)) throw RangeError("delta must lie in [0, 0.5]");
  if (variable == SweepVariable::PF && !delta && !fixed_ps) {
    throw RangeError("a p_F sweep needs either delta or a fixed p_S");
  }
  if (fixed_ps) (void)Probability{*fixed_ps};
  if (x < 0 || x > 6) throw RangeError("cutoff x must lie in [0, 6]");
}

std::vector<double> SweepSpec::grid() const {
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = std::min(stop, start + static_cast<double>(i) * step);
  }
  return out;
}

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::Win: return "win";
    case Metric::BreakPointProb: return "bp";
    case Metric::Points: return "points";
    case Metric::BreakPoints: return "bps";
  }
  return "?";
}

std::optional<Metric> parse_metric(std::string_view text) {
  for (Metric m : {Metric::Win, Metric::BreakPointProb, Metric::Points, Metric::BreakPoints}) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

std::optional<double> select(const GameMetrics& m, Metric metric) {
  switch (metric) {
    case Metric::Win: return m.win_prob;
    case Metric::BreakPointProb: return m.bp_prob;
    case Metric::Points: return m.expected_points;
    case Metric::BreakPoints: return m.expected_bps;
  }
  return std::nullopt;
}

namespace {

SweepPoint evaluate(RuleKind game, const SweepSpec& spec, double p) {
  SweepPoint point;
  point.p_f = p;
  if (spec.variable == SweepVariable::P) {
    point.p_s = p;
  } else {
    point.p_s = spec.delta ? 1.0 - p + *spec.delta : *spec.fixed_ps;
  }
  if (point.p_s < 0.0 || point.p_s > 1.0) return point;
  try {
    point.metrics = metrics_exact(ServeSchedule::for_rule(game, spec.x), {point.p_f, point.p_s});
  } catch (const SingularProfile&) {
    // Left empty: the game has no finite answer at this profile.
  }
  return point;
}

SweepResult prepare(const std::vector<RuleKind>& games, const SweepSpec& spec,
                    std::size_t grid_size) {
  spec.validate();
  SweepResult result;
  result.spec = spec;
  result.games = games;
  result.points.assign(games.size(), std::vector<SweepPoint>(grid_size));
  return result;
}

}  // namespace

SweepResult sweep(const std::vector<RuleKind>& games, const SweepSpec& spec) {
  const std::vector<double> grid = spec.grid();
  SweepResult result = prepare(games, spec, grid.size());
  const auto cells = static_cast<long long>(games.size() * grid.size());

#pragma omp parallel for schedule(static)
  for (long long cell = 0; cell < cells; ++cell) {
    const auto g = static_cast<std::size_t>(cell) / grid.size();
    const auto i = static_cast<std::size_t>(cell) % grid.size();
    result.points[g][i] = evaluate(games[g], spec, grid[i]);
  }
  return result;
}

SweepResult sweep_serial(const std::vector<RuleKind>& games, const SweepSpec& spec) {
  const std::vector<double> grid = spec.grid();
  SweepResult result = prepare(games, spec, grid.size());
  for (std::size_t g = 0; g < games.size(); ++g) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      result.points[g][i] = evaluate(games[g], spec, grid[i]);
    }
  }
  return result;
}

std::vector<SweepRow> sweep_rows(const SweepResult& result, const std::vector<Metric>& metrics) {
  std::vector<SweepRow> rows;
  const bool two_var = result.spec.variable == SweepVariable::PF;
  for (std::size_t g = 0; g < result.games.size(); ++g) {
    for (Metric metric : metrics) {
      for (const SweepPoint& pt : result.points[g]) {
        if (!pt.metrics) continue;
        const auto value = select(*pt.metrics, metric);
        if (!value) continue;
        SweepRow row;
        row.game = std::string(to_string(result.games[g]));
        row.metric = std::string(to_string(metric));
        row.p_f = pt.p_f;
        if (two_var) row.p_s = pt.p_s;
        row.value = *value;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                     SweepVariable variable) {
  const bool two_var = variable == SweepVariable::PF;
  out << (two_var ? "game,metric,p_f,p_s,value\n" : "game,metric,p,value\n");
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << std::fixed << std::setprecision(6);
  for (const auto& r : rows) {
    out << r.game << ',' << r.metric << ',' << r.p_f << ',';
    if (two_var) out << r.p_s.value_or(0.0) << ',';
    out << r.value << '\n';
  }
  out.flags(old_flags);
  out.precision(old_precision);
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(1, "empty sweep file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  bool two_var = false;
  if (line == "game,metric,p_f,p_s,value") {
    two_var = true;
  } else if (line != "game,metric,p,value") {
    throw ParseError(1, "unrecognised sweep header '" + line + "'");
  }

  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != (two_var ? 5u : 4u)) throw ParseError(line_no, "wrong field count");
    try {
      SweepRow row;
      row.game = fields[0];
      row.metric = fields[1];
      row.p_f = std::stod(fields[2]);
      if (two_var) row.p_s = std::stod(fields[3]);
      row.value = std::stod(fields.back());
      rows.push_back(std::move(row));
    } catch (const std::logic_error&) {
      throw ParseError(line_no, "non-numeric field");
    }
  }
  return rows;
}

void write_sweep_svg(std::ostream& out, const std::vector<SweepRow>& rows,
                     const std::string& x_label) {
  constexpr double kWidth = 640, kHeight = 420;
  constexpr double kLeft = 60, kRight = 150, kTop = 20, kBottom = 50;
  constexpr double kPlotW = kWidth - kLeft - kRight;
  constexpr double kPlotH = kHeight - kTop - kBottom;
  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                            "#9467bd", "#8c564b", "#e377c2", "#17becf"};

  std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>> series;
  std::map<std::string, std::size_t> index;
  double y_min = 0.0, y_max = 1.0;
  bool first = true;
  for (const auto& r : rows) {
    const std::string key = r.game + " " + r.metric;
    auto [it, inserted] = index.emplace(key, series.size());
    if (inserted) series.push_back({key, {}});
    series[it->second].second.emplace_back(r.p_f, r.value);
    if (first) {
      y_min = y_max = r.value;
      first = false;
    }
    y_min = std::min(y_min, r.value);
    y_max = std::max(y_max, r.value);
  }
  y_min = std::min(y_min, 0.0);
  if (y_max <= y_min) y_max = y_min + 1.0;

  const auto sx = [&](double x) { return kLeft + x * kPlotW; };
  const auto sy = [&](double y) { return kTop + (1.0 - (y - y_min) / (y_max - y_min)) * kPlotH; };

  out << std::fixed << std::setprecision(2);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + kPlotH << "\" x2=\"" << kLeft + kPlotW
      << "\" y2=\"" << kTop + kPlotH << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kTop + kPlotH << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = i / 4.0;
    const double fy = y_min + (y_max - y_min) * i / 4.0;
    out << "<text x=\"" << sx(fx) << "\" y=\"" << kTop + kPlotH + 16
        << "\" font-size=\"11\" text-anchor=\"middle\">" << fx << "</text>\n"
        << "<text x=\"" << kLeft - 6 << "\" y=\"" << sy(fy) + 4
        << "\" font-size=\"11\" text-anchor=\"end\">" << fy << "</text>\n";
  }
  out << "<text x=\"" << kLeft + kPlotW / 2 << "\" y=\"" << kHeight - 12
      << "\" font-size=\"12\" text-anchor=\"middle\">" << x_label << "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kColors[s % std::size(kColors)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : series[s].second) out << sx(x) << ',' << sy(y) << ' ';
    out << "\"/>\n";
    const double ly = kTop + 14 + 16 * static_cast<double>(s);
    out << "<line x1=\"" << kWidth - kRight + 10 << "\" y1=\"" << ly - 4 << "\" x2=\""
        << kWidth - kRight + 30 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << kWidth - kRight + 36 << "\" y=\"" << ly
        << "\" font-size=\"11\">" << series[s].first << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace tennis
