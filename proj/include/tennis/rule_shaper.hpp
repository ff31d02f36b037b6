#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tennis/atp_data.hpp"
#include "tennis/types.hpp"

namespace tennis {

/// Desired interval for the standard-game win probability.
struct ShapingTargets {
  Probability p_win_low{0.60};
  Probability p_win_high{0.75};

  /// Throws RangeError unless 0.5 < low < high < 1.
  void validate() const;
};

struct ShapingSolution {
  double p_trad = 0.0;  ///< point probability giving p_win_low
  double p_exc = 0.0;   ///< point probability giving p_win_high
  double x_low = 0.0;
  double x_high = 0.0;
  int x_recommended = 0;
  std::optional<std::string> warning;
};

/// Unique p in (0,1) with p_win_T(p) = target, by bisection on
/// [1e-6, 1 - 1e-6] to |dp| <= 1e-9. Throws RangeError unless 0 < target < 1.
double invert_p_win_T(Probability target);

/// Number of full-serve points x such that the expected-length-weighted
/// blend of p_emp and p_s_won equals p_target. E_T is taken at p_target.
/// Not clamped; throws DegenerateProfile when p_emp == p_s_won.
double solve_x(const PlayerStats& stats, Probability p_target);

/// x_low from the weaker player at p_trad, x_high from the stronger at
/// p_exc. When the rounded values differ, the weaker player's value wins
/// and a warning is attached.
ShapingSolution recommend_cutoff(const PlayerStats& low, const PlayerStats& high,
                                 const ShapingTargets& targets = {});

struct CompareRow {
  int rank = 0;
  std::string name;
  double p_emp = 0.0;
  double p_s_won = 0.0;
  GameMetrics standard;  ///< T at p_emp
  GameMetrics proposed;  ///< C(x) at (p_emp, p_s_won)
  std::optional<double> closed_form_gap;  ///< max |closed-form - engine| for C, x == 3 only
};

/// Existing vs proposed game per player; x must lie in [0, 6].
std::vector<CompareRow> compare_table(const std::vector<PlayerStats>& rows, int x);

/// Columns: rank,name,p_emp,p_s_won,P_T,P_C,P_T_br,P_C_br,E_T,E_C,E_T_br,E_C_br
void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows, int precision = 6);
void write_compare_json(std::ostream& out, const std::vector<CompareRow>& rows, int x);
/// Fixed-width three-decimal layout for eyeballing against published tables.
void write_compare_text(std::ostream& out, const std::vector<CompareRow>& rows);

}  // namespace tennis
