#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tennis/types.hpp"

namespace tennis {

/// One row of serve statistics. `p_t_won` (service games won) may be
/// missing for players known only through their serve rates.
struct PlayerStats {
  int rank = 0;
  std::string name;
  Probability p_f_in;
  Probability p_f_won;
  Probability p_s_won;
  std::optional<Probability> p_t_won;
};

struct StatsTable {
  std::vector<PlayerStats> rows;
  std::vector<std::string> warnings;
};

/// CSV with header `rank,name,p_f_in,p_f_won,p_s_won,p_t_won`. Blank lines
/// and lines starting with '#' are skipped. Rates are decimals in [0, 1].
/// Throws ParseError for malformed rows, RangeError for out-of-range rates.
StatsTable parse_stats(std::istream& in);
StatsTable parse_stats_file(const std::filesystem::path& path);

/// Blended point-win probability behind first and second serves.
Probability p_emp(const PlayerStats& stats);

/// Removes the share of points lost to double faults logged apart from
/// second-serve points. p_dbl must lie in [0, 0.05].
Probability dbl_fault_correct(Probability p_emp, Probability p_dbl);

struct FitRow {
  PlayerStats stats;
  double p_emp = 0.0;
  double predicted = 0.0;
  std::optional<double> residual;  ///< observed - predicted
};

struct FitSummary {
  std::size_t observed_count = 0;
  double max_abs_residual = 0.0;
  double mean_residual = 0.0;
  std::size_t non_positive_count = 0;  ///< residuals <= 0
};

struct FitReport {
  std::vector<FitRow> rows;
  FitSummary summary;
};

/// Standard-game prediction at p_emp for every row. Throws RangeError on
/// an empty list.
FitReport fit_report(const std::vector<PlayerStats>& rows);

/// rank,name,p_emp,predicted,observed,residual (6 decimals; blanks for
/// missing observations).
void write_fit_csv(std::ostream& out, const FitReport& report);
void write_fit_summary(std::ostream& out, const FitSummary& summary);

}  // namespace tennis
