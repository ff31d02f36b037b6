#include "tennis/rule_shaper.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "tennis/closed_form.hpp"
#include "tennis/errors.hpp"
#include "tennis/exact_engine.hpp"

namespace tennis {

void ShapingTargets::validate() const {
  const double lo = p_win_low.value();
  const double hi = p_win_high.value();
  if (!(0.5 < lo && lo < hi && hi < 1.0)) {
    throw RangeError("shaping targets must satisfy 0.5 < low < high < 1");
  }
}

double invert_p_win_T(Probability target) {
  const double t = target.value();
  if (!(t > 0.0 && t < 1.0)) throw RangeError("target win probability must lie in (0,1)");

  double lo = 1e-6;
  double hi = 1.0 - 1e-6;
  if (closed_form::p_win_T(Probability(lo)) >= t) return lo;
  if (closed_form::p_win_T(Probability(hi)) <= t) return hi;
  for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (closed_form::p_win_T(Probability(mid)) < t) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double solve_x(const PlayerStats& stats, Probability p_target) {
  const double blended = p_emp(stats).value();
  const double single = stats.p_s_won.value();
  if (blended == single) {
    throw DegenerateProfile("p_emp equals p_s_won for " + stats.name + ": no cutoff changes p");
  }
  return (p_target.value() - single) / (blended - single) * closed_form::e_points_T(p_target);
}

ShapingSolution recommend_cutoff(const PlayerStats& low, const PlayerStats& high,
                                 const ShapingTargets& targets) {
  targets.validate();
  ShapingSolution sol;
  sol.p_trad = invert_p_win_T(targets.p_win_low);
  sol.p_exc = invert_p_win_T(targets.p_win_high);
  sol.x_low = solve_x(low, Probability(sol.p_trad));
  sol.x_high = solve_x(high, Probability(sol.p_exc));

  const auto rounded_low = static_cast<int>(std::lround(sol.x_low));
  const auto rounded_high = static_cast<int>(std::lround(sol.x_high));
  sol.x_recommended = rounded_low;
  if (rounded_low != rounded_high) {
    std::ostringstream msg;
    msg << std::fixed << std::setprecision(2) << "cutoffs disagree after rounding (x_low "
        << sol.x_low << " -> " << rounded_low << ", x_high " << sol.x_high << " -> "
        << rounded_high << "); using the weaker player's value " << rounded_low;
    sol.warning = msg.str();
  }
  return sol;
}

std::vector<CompareRow> compare_table(const std::vector<PlayerStats>& rows, int x) {
  const ServeSchedule standard = ServeSchedule::standard();
  const ServeSchedule proposed = ServeSchedule::single_serve_after(x);

  std::vector<CompareRow> out;
  out.reserve(rows.size());
  for (const auto& stats : rows) {
    CompareRow row;
    row.rank = stats.rank;
    row.name = stats.name;
    const Probability blended = p_emp(stats);
    row.p_emp = blended.value();
    row.p_s_won = stats.p_s_won.value();
    const ServeProfile profile{blended, stats.p_s_won};
    row.standard = metrics_exact(standard, ServeProfile{blended, blended});
    row.proposed = metrics_exact(proposed, profile);
    if (x == 3) {
      const GameMetrics cf = closed_form::metrics(RuleKind::C, profile);
      row.closed_form_gap = std::max({std::abs(cf.win_prob - row.proposed.win_prob),
                                      std::abs(*cf.bp_prob - *row.proposed.bp_prob),
                                      std::abs(cf.expected_points - row.proposed.expected_points),
                                      std::abs(*cf.expected_bps - *row.proposed.expected_bps)});
    }
    out.push_back(std::move(row));
  }
  return out;
}

void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows, int precision) {
  out << "rank,name,p_emp,p_s_won,P_T,P_C,P_T_br,P_C_br,E_T,E_C,E_T_br,E_C_br\n";
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << std::fixed << std::setprecision(precision);
  for (const auto& r : rows) {
    out << r.rank << ',' << r.name << ',' << r.p_emp << ',' << r.p_s_won << ','
        << r.standard.win_prob << ',' << r.proposed.win_prob << ',' << *r.standard.bp_prob << ','
        << *r.proposed.bp_prob << ',' << r.standard.expected_points << ','
        << r.proposed.expected_points << ',' << *r.standard.expected_bps << ','
        << *r.proposed.expected_bps << '\n';
  }
  out.flags(old_flags);
  out.precision(old_precision);
}

void write_compare_json(std::ostream& out, const std::vector<CompareRow>& rows, int x) {
  nlohmann::json doc;
  doc["x"] = x;
  doc["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row{{"rank", r.rank},
                       {"name", r.name},
                       {"p_emp", r.p_emp},
                       {"p_s_won", r.p_s_won},
                       {"P_T", r.standard.win_prob},
                       {"P_C", r.proposed.win_prob},
                       {"P_T_br", *r.standard.bp_prob},
                       {"P_C_br", *r.proposed.bp_prob},
                       {"E_T", r.standard.expected_points},
                       {"E_C", r.proposed.expected_points},
                       {"E_T_br", *r.standard.expected_bps},
                       {"E_C_br", *r.proposed.expected_bps}};
    if (r.closed_form_gap) row["closed_form_gap"] = *r.closed_form_gap;
    doc["rows"].push_back(std::move(row));
  }
  out << doc.dump(2) << '\n';
}

void write_compare_text(std::ostream& out, const std::vector<CompareRow>& rows) {
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << std::left << std::setw(6) << "rank" << std::right;
  for (const char* h : {"p_emp", "p_s_won", "P_T", "P_C", "P_T_br", "P_C_br", "E_T", "E_C",
                        "E_T_br", "E_C_br"}) {
    out << std::setw(9) << h;
  }
  out << '\n' << std::fixed << std::setprecision(3);
  for (const auto& r : rows) {
    out << std::left << std::setw(6) << r.rank << std::right;
    for (double v : {r.p_emp, r.p_s_won, r.standard.win_prob, r.proposed.win_prob,
                     *r.standard.bp_prob, *r.proposed.bp_prob, r.standard.expected_points,
                     r.proposed.expected_points, *r.standard.expected_bps,
                     *r.proposed.expected_bps}) {
      out << std::setw(9) << v;
    }
    out << '\n';
  }
  out.flags(old_flags);
  out.precision(old_precision);
}

}  // namespace tennis
