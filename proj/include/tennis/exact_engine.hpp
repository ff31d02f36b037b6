#pragma once

#include <optional>
#include <span>

#include "tennis/types.hpp"

namespace tennis {

/// Pre-deuce score with a flag for "a break point has already been played".
/// Scores of 4 are absorbing and never stored; 3:3 hands over to the deuce
/// closure.
struct ScoreState {
  int f_points = 0;
  int s_points = 0;
  bool bp_seen = false;

  /// S is one point from taking F's service game.
  constexpr bool is_break_point() const noexcept { return s_points == 3 && f_points <= 2; }
};

/// One point of the repeating deuce unit.
struct CyclePoint {
  double p = 0.0;
  Server server = Server::F;
};

struct DeuceClosure {
  double win = 0.0;
  double expected_len = 0.0;
  std::optional<double> bp_indicator;
  std::optional<double> bp_count;
};

/// Closed-form resolution of the deuce loop for a unit of one or two
/// points. Throws SingularProfile when p_a p_b + q_a q_b underflows.
DeuceClosure deuce_closure(std::span<const CyclePoint> cycle);

/// Mass split after propagating the pre-deuce lattice.
struct LatticeOutcome {
  double f_win_mass = 0.0;
  double s_win_mass = 0.0;
  double deuce_mass = 0.0;
  double deuce_mass_without_bp = 0.0;
  double points_before_deuce = 0.0;  ///< sum of k * P(absorbed at point k)
  double bp_first_passage = 0.0;     ///< mass entering its first break point pre-deuce
  double bp_occupancy = 0.0;         ///< expected pre-deuce break points
};

LatticeOutcome propagate_lattice(const ServeSchedule& schedule, const ServeProfile& profile);

enum class BreakPointPolicy {
  IfDefined,  ///< leave bp fields empty for mixed-server schedules
  Required    ///< throw MixedServerBreakpoint instead
};

/// Exact game metrics for any schedule; the ground truth for the
/// closed-form evaluators.
GameMetrics metrics_exact(const ServeSchedule& schedule, const ServeProfile& profile,
                          BreakPointPolicy policy = BreakPointPolicy::IfDefined);

/// Expected steps for a +-1 walk started at 0 to reach +n or -n, where a
/// step goes up with probability p. Solved as a tridiagonal system.
/// n must lie in [1, 10^4].
double walk_expected_duration(int n, Probability p);

}  // namespace tennis
