#pragma once

#include "tennis/types.hpp"

// Direct polynomial evaluators for each game type. Single-variable forms
// take F's point-win probability p; two-variable forms take the full
// ServeProfile (p_F, p_S). The exact engine is the reference these are
// checked against.

namespace tennis::closed_form {

// Deuce only, F serving throughout.
double p_win_A(Probability p);
double p_bp_A(Probability p);
double e_points_A(Probability p);
double e_bp_A(Probability p);

// Deuce only, alternating servers. Throw SingularProfile at (1,0) and (0,1).
double p_win_Bj(const ServeProfile& profile);
double e_points_Bj(const ServeProfile& profile);

// Standard game.
double p_win_T(Probability p);
double p_win_T_omalley(Probability p);
double p_bp_T(Probability p);
double e_points_T(Probability p);
double e_bp_T(Probability p);

// Alternating-server game. Throw SingularProfile when deuce cannot resolve.
double p_win_B(const ServeProfile& profile);
double e_points_B(const ServeProfile& profile);

// Second serve on the first three points only; deuce at p_S.
double p_win_C(const ServeProfile& profile);
double p_bp_C(const ServeProfile& profile);
double e_points_C(const ServeProfile& profile);
double e_bp_C(const ServeProfile& profile);

/// All metrics the closed forms provide for a rule (bp fields only where
/// defined). C is the three-point cutoff.
GameMetrics metrics(RuleKind kind, const ServeProfile& profile);

}  // namespace tennis::closed_form
