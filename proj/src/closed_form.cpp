#include "tennis/closed_form.hpp"

#include <initializer_list>

#include "tennis/errors.hpp"

namespace tennis::closed_form {

namespace {

constexpr double kSingularThreshold = 1e-300;

// Shorthand for mini-algebra terms: coeff * [alpha, beta, gamma, delta],
// i.e. p_S^alpha q_S^beta p_F^gamma q_F^delta.
constexpr AlgebraTerm term(unsigned coeff, unsigned a, unsigned b, unsigned c, unsigned d) {
  return {coeff, {a, b, c, d}, false};
}
constexpr AlgebraTerm sym(unsigned coeff, unsigned a, unsigned b, unsigned c, unsigned d) {
  return {coeff, {a, b, c, d}, true};
}

double sum(std::initializer_list<AlgebraTerm> terms, const ServeProfile& profile) {
  double total = 0.0;
  for (const auto& t : terms) total += eval_term(t, profile);
  return total;
}

double checked_denominator(double value, const char* what) {
  if (value < kSingularThreshold) {
    throw SingularProfile(std::string(what) + ": deuce denominator vanishes");
  }
  return value;
}

// 3:3 reached after six points in the alternating and single-serve games.
// Both place three F-type and three S-type points in the first six.
double deuce_entry(const ServeProfile& profile) {
  return sum({sym(9, 1, 2, 2, 1), sym(1, 3, 0, 0, 3)}, profile);
}

}  // namespace

double p_win_A(Probability p) {
  const double pv = p.value();
  const double q = p.complement();
  return pv * pv / (pv * pv + q * q);
}

double p_bp_A(Probability p) {
  const double pv = p.value();
  const double q = p.complement();
  return q / (q + pv * pv);
}

double e_points_A(Probability p) {
  const double pv = p.value();
  const double q = p.complement();
  return 2.0 / (pv * pv + q * q);
}

double e_bp_A(Probability p) {
  const double pv = p.value();
  const double q = p.complement();
  return q / (pv * pv + q * q);
}

double p_win_Bj(const ServeProfile& profile) {
  const double pf = profile.full.value();
  const double ps = profile.reduced.value();
  const double den = checked_denominator(
      pf * ps + profile.full.complement() * profile.reduced.complement(), "p_win_Bj");
  return pf * ps / den;
}

double e_points_Bj(const ServeProfile& profile) {
  const double den = checked_denominator(
      profile.full.value() * profile.reduced.value() +
          profile.full.complement() * profile.reduced.complement(),
      "e_points_Bj");
  return 2.0 / den;
}

double p_win_T(Probability p) {
  const double pv = p.value();
  const double q = p.complement();
  const double p2 = pv * pv;
  const double p3 = p2 * pv;
  const double p4 = p2 * p2;
  const double q2 = q * q;
  const double q3 = q2 * q;
  return p4 + 4.0 * p4 * q + 10.0 * p4 * q2 + 20.0 * p3 * q3 * p2 / (p2 + q2);
}

double p_win_T_omalley(Probability p) {
  const double pv = p.value();
  const double p4 = pv * pv * pv * pv;
  return p4 * (15.0 - 4.0 * pv - 10.0 * pv * pv / (1.0 - 2.0 * pv * (1.0 - pv)));
}

double p_bp_T(Probability p) {
  const double pv = p.value();
  const double q = p.complement();
  const double p2 = pv * pv;
  const double q3 = q * q * q;
  return q3 + 3.0 * pv * q3 + 6.0 * p2 * q3 + 10.0 * p2 * pv * q3 * q / (q + p2);
}

double e_points_T(Probability p) {
  const double pv = p.value();
  const double q = p.complement();
  const double p2 = pv * pv;
  const double q2 = q * q;
  const double p3q3 = p2 * pv * q2 * q;
  return 4.0 * (p2 * p2 + q2 * q2) + 20.0 * pv * q * (p2 * pv + q2 * q) +
         60.0 * p2 * q2 * (p2 + q2) + 120.0 * p3q3 + 20.0 * p3q3 * 2.0 / (p2 + q2);
}

double e_bp_T(Probability p) {
  const double pv = p.value();
  const double q = p.complement();
  const double p2 = pv * pv;
  const double q2 = q * q;
  const double q3 = q2 * q;
  return q3 + 4.0 * pv * q3 + 10.0 * p2 * q3 + 20.0 * p2 * pv * q3 * q / (p2 + q2);
}

double p_win_B(const ServeProfile& profile) {
  const double decided =
      checked_denominator(eval_term(sym(1, 1, 0, 1, 0), profile), "p_win_B");
  const double before_deuce =
      sum({term(1, 2, 0, 2, 0), term(2, 1, 1, 3, 0), term(2, 2, 0, 2, 1), term(6, 2, 1, 2, 1),
           term(3, 3, 0, 1, 2), term(1, 1, 2, 3, 0)},
          profile);
  // Deuce won with probability p_F p_S / (p_F p_S + q_F q_S): the numerator
  // is the plain term, not its symmetric pair.
  return before_deuce + deuce_entry(profile) * eval_term(term(1, 1, 0, 1, 0), profile) / decided;
}

double e_points_B(const ServeProfile& profile) {
  const double decided =
      checked_denominator(eval_term(sym(1, 1, 0, 1, 0), profile), "e_points_B");
  // Each finishing score carries the path count of its plain term.
  return 4.0 * sum({sym(1, 2, 0, 2, 0)}, profile) +
         5.0 * sum({sym(2, 2, 0, 2, 1), sym(2, 1, 1, 3, 0)}, profile) +
         6.0 * sum({sym(3, 3, 0, 1, 2), sym(6, 2, 1, 2, 1), sym(1, 1, 2, 3, 0)}, profile) +
         deuce_entry(profile) * (2.0 / decided + 6.0);
}

double p_win_C(const ServeProfile& profile) {
  const double decided = eval_term(sym(1, 2, 0, 0, 0), profile);
  return sum({term(1, 1, 0, 3, 0), term(1, 1, 1, 3, 0), term(3, 2, 0, 2, 1), term(1, 1, 2, 3, 0),
              term(6, 2, 1, 2, 1), term(3, 3, 0, 1, 2)},
             profile) +
         deuce_entry(profile) * eval_term(term(1, 2, 0, 0, 0), profile) / decided;
}

double p_bp_C(const ServeProfile& profile) {
  const double qs = eval_term(term(1, 0, 1, 0, 0), profile);
  const double ps2 = eval_term(term(1, 2, 0, 0, 0), profile);
  const double first_passage =
      sum({term(1, 0, 0, 0, 3), term(3, 0, 1, 1, 2), term(3, 0, 2, 2, 1), term(3, 1, 1, 1, 2)},
          profile);
  const double deuce_without_bp =
      sum({term(6, 1, 2, 2, 1), term(3, 2, 1, 1, 2), term(1, 0, 3, 3, 0)}, profile);
  return first_passage + deuce_without_bp * qs / (qs + ps2);
}

double e_points_C(const ServeProfile& profile) {
  const double decided = eval_term(sym(1, 2, 0, 0, 0), profile);
  return 4.0 * sum({sym(1, 1, 0, 3, 0)}, profile) +
         5.0 * sum({sym(1, 1, 1, 3, 0), sym(3, 2, 0, 2, 1)}, profile) +
         6.0 * sum({sym(3, 3, 0, 1, 2), sym(6, 2, 1, 2, 1), sym(1, 1, 2, 3, 0)}, profile) +
         deuce_entry(profile) * (2.0 / decided + 6.0);
}

double e_bp_C(const ServeProfile& profile) {
  const double decided = eval_term(sym(1, 2, 0, 0, 0), profile);
  const double occupancy =
      sum({term(1, 0, 0, 0, 3), term(1, 1, 0, 0, 3), term(3, 0, 1, 1, 2), term(1, 2, 0, 0, 3),
           term(6, 1, 1, 1, 2), term(3, 0, 2, 2, 1)},
          profile);
  // Advantage-S visits per deuce: q_S / (p_S^2 + q_S^2), plain q_S on top.
  return occupancy + deuce_entry(profile) * eval_term(term(1, 0, 1, 0, 0), profile) / decided;
}

GameMetrics metrics(RuleKind kind, const ServeProfile& profile) {
  GameMetrics m;
  switch (kind) {
    case RuleKind::A:
      m.win_prob = p_win_A(profile.full);
      m.bp_prob = p_bp_A(profile.full);
      m.expected_points = e_points_A(profile.full);
      m.expected_bps = e_bp_A(profile.full);
      break;
    case RuleKind::Bj:
      m.win_prob = p_win_Bj(profile);
      m.expected_points = e_points_Bj(profile);
      break;
    case RuleKind::T:
      m.win_prob = p_win_T(profile.full);
      m.bp_prob = p_bp_T(profile.full);
      m.expected_points = e_points_T(profile.full);
      m.expected_bps = e_bp_T(profile.full);
      break;
    case RuleKind::B:
      m.win_prob = p_win_B(profile);
      m.expected_points = e_points_B(profile);
      break;
    case RuleKind::C:
      m.win_prob = p_win_C(profile);
      m.bp_prob = p_bp_C(profile);
      m.expected_points = e_points_C(profile);
      m.expected_bps = e_bp_C(profile);
      break;
  }
  return m;
}

}  // namespace tennis::closed_form
