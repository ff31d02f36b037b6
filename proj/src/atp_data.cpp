#include "tennis/atp_data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string_view>

#include "tennis/closed_form.hpp"
#include "tennis/errors.hpp"

namespace tennis {

namespace {

constexpr std::string_view kHeader = "rank,name,p_f_in,p_f_won,p_s_won,p_t_won";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_number(std::string_view field, std::size_t line, const char* column) {
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ParseError(line, std::string("column ") + column + ": not a number: '" +
                               std::string(field) + "'");
  }
  return value;
}

Probability parse_rate(std::string_view field, std::size_t line, const char* column) {
  const double value = parse_number(field, line, column);
  if (value < 0.0 || value > 1.0) {
    throw RangeError("line " + std::to_string(line) + ": column " + column + " = " +
                     std::string(field) + " is outside [0,1] (rates are decimals, not percent)");
  }
  return Probability(value);
}

int parse_rank(std::string_view field, std::size_t line) {
  int value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(line, "rank is not an integer: '" + std::string(field) + "'");
  }
  if (value < 1) throw RangeError("line " + std::to_string(line) + ": rank must be >= 1");
  return value;
}

}  // namespace

StatsTable parse_stats(std::istream& in) {
  StatsTable table;
  std::map<int, std::size_t> seen_ranks;
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kHeader) {
        throw ParseError(line_no, "expected header '" + std::string(kHeader) + "'");
      }
      header_seen = true;
      continue;
    }

    const auto fields = split(line);
    if (fields.size() != 6) {
      throw ParseError(line_no, "expected 6 fields, found " + std::to_string(fields.size()));
    }
    PlayerStats row;
    row.rank = parse_rank(fields[0], line_no);
    row.name = std::string(fields[1]);
    if (row.name.empty()) throw ParseError(line_no, "empty name");
    row.p_f_in = parse_rate(fields[2], line_no, "p_f_in");
    row.p_f_won = parse_rate(fields[3], line_no, "p_f_won");
    row.p_s_won = parse_rate(fields[4], line_no, "p_s_won");
    if (!fields[5].empty()) row.p_t_won = parse_rate(fields[5], line_no, "p_t_won");

    if (auto [it, inserted] = seen_ranks.emplace(row.rank, line_no); !inserted) {
      table.warnings.push_back("line " + std::to_string(line_no) + ": duplicate rank " +
                               std::to_string(row.rank) + " (first on line " +
                               std::to_string(it->second) + ")");
    }
    table.rows.push_back(std::move(row));
  }
  if (!header_seen) throw ParseError(line_no, "missing header");
  return table;
}

StatsTable parse_stats_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_stats(in);
}

Probability p_emp(const PlayerStats& s) {
  const double first_in = s.p_f_in.value();
  const double value = first_in * s.p_f_won.value() + (1.0 - first_in) * s.p_s_won.value();
  // Convex combination; clamp rounding spill beyond [0,1].
  return Probability(std::clamp(value, 0.0, 1.0));
}

Probability dbl_fault_correct(Probability p_emp_value, Probability p_dbl) {
  if (p_dbl.value() > 0.05) {
    throw RangeError("double-fault rate above the 0.05 sanity bound");
  }
  return Probability(p_emp_value.value() * (1.0 - p_dbl.value()));
}

FitReport fit_report(const std::vector<PlayerStats>& rows) {
  if (rows.empty()) throw RangeError("fit_report needs at least one row");
  FitReport report;
  double residual_sum = 0.0;
  for (const auto& stats : rows) {
    FitRow row;
    row.stats = stats;
    const Probability p = p_emp(stats);
    row.p_emp = p.value();
    row.predicted = closed_form::p_win_T(p);
    if (stats.p_t_won) {
      const double r = stats.p_t_won->value() - row.predicted;
      row.residual = r;
      auto& s = report.summary;
      ++s.observed_count;
      s.max_abs_residual = std::max(s.max_abs_residual, std::abs(r));
      if (r <= 0.0) ++s.non_positive_count;
      residual_sum += r;
    }
    report.rows.push_back(std::move(row));
  }
  if (report.summary.observed_count > 0) {
    report.summary.mean_residual =
        residual_sum / static_cast<double>(report.summary.observed_count);
  }
  return report;
}

void write_fit_csv(std::ostream& out, const FitReport& report) {
  out << "rank,name,p_emp,predicted,observed,residual\n";
  out << std::fixed << std::setprecision(6);
  for (const auto& row : report.rows) {
    out << row.stats.rank << ',' << row.stats.name << ',' << row.p_emp << ',' << row.predicted
        << ',';
    if (row.stats.p_t_won) out << row.stats.p_t_won->value();
    out << ',';
    if (row.residual) out << *row.residual;
    out << '\n';
  }
}

void write_fit_summary(std::ostream& out, const FitSummary& s) {
  std::ostringstream block;
  block << std::fixed << std::setprecision(6);
  block << "# observed rows:       " << s.observed_count << '\n'
        << "# max |residual|:      " << s.max_abs_residual << '\n'
        << "# mean residual:       " << s.mean_residual << '\n'
        << "# residuals <= 0:      " << s.non_positive_count << " of " << s.observed_count
        << '\n';
  out << block.str();
}

}  // namespace tennis
