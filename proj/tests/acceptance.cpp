// Acceptance gate. One PASS/FAIL line per criterion; exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tennis/atp_data.hpp"
#include "tennis/closed_form.hpp"
#include "tennis/errors.hpp"
#include "tennis/exact_engine.hpp"
#include "tennis/monte_carlo.hpp"
#include "tennis/rule_shaper.hpp"

using namespace tennis;
namespace cf = tennis::closed_form;

namespace {

struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const char* fmt, auto... args) {
    if (ok) return;
    char buf[256];
    std::snprintf(buf, sizeof buf, fmt, args...);
    failures.emplace_back(buf);
  }
  void near(double got, double want, double tol, const char* label) {
    expect(std::abs(got - want) <= tol, "%s: got %.6f, want %.6f +/- %g", label, got, want, tol);
  }
};

Probability P(double p) { return Probability(p); }

// Published comparison table: rank, p_emp, p_s_won, P_T, P_C, P_T_br,
// P_C_br, E_T, E_C, E_T_br, E_C_br.
struct TableRow {
  int rank;
  double cols[10];
};
constexpr TableRow kTable[] = {
    {7, {0.696, 0.55, 0.896, 0.749, 0.205, 0.345, 5.861, 6.378, 0.918, 1.410}},
    {27, {0.666, 0.52, 0.855, 0.683, 0.258, 0.410, 6.079, 6.538, 1.027, 1.512}},
    {107, {0.626, 0.51, 0.787, 0.633, 0.336, 0.463, 6.340, 6.637, 1.173, 1.541}},
    {187, {0.608, 0.49, 0.752, 0.586, 0.373, 0.505, 6.443, 6.694, 1.237, 1.600}},
};
constexpr const char* kColumns[] = {"p_emp", "p_s_won", "P_T",    "P_C",    "P_T_br",
                                    "P_C_br", "E_T",     "E_C",    "E_T_br", "E_C_br"};

struct EngineRow {
  GameMetrics t, c;
};

EngineRow engine_row(const TableRow& row) {
  const double p = row.cols[0], ps = row.cols[1];
  return {metrics_exact(ServeSchedule::standard(), ServeProfile::uniform(p)),
          metrics_exact(ServeSchedule::single_serve_after(3), {p, ps})};
}

std::vector<double> unit_grid(int n) {
  std::vector<double> out;
  for (int i = 1; i < n; ++i) out.push_back(static_cast<double>(i) / n);
  return out;
}

// ---------------------------------------------------------------------------

void table_reproduction(Check& c) {
  for (const auto& row : kTable) {
    const auto e = engine_row(row);
    const double p = row.cols[0], ps = row.cols[1];
    const double got[10] = {p_emp({row.rank, "", P(1.0), P(p), P(ps), {}}).value(),
                            ps,
                            e.t.win_prob,
                            e.c.win_prob,
                            *e.t.bp_prob,
                            *e.c.bp_prob,
                            e.t.expected_points,
                            e.c.expected_points,
                            *e.t.expected_bps,
                            *e.c.expected_bps};
    for (int k = 0; k < 10; ++k) {
      const std::string label = "rank " + std::to_string(row.rank) + " " + kColumns[k];
      c.near(got[k], row.cols[k], 0.003, label.c_str());
    }
    const ServeProfile prof{p, ps};
    const double gaps[4] = {cf::p_win_C(prof) - e.c.win_prob, cf::p_bp_C(prof) - *e.c.bp_prob,
                            cf::e_points_C(prof) - e.c.expected_points,
                            cf::e_bp_C(prof) - *e.c.expected_bps};
    for (double g : gaps) {
      c.expect(std::abs(g) <= 1e-9, "rank %d: closed-form C differs from engine by %.3g",
               row.rank, g);
    }
  }
}

void shaping_numbers(Check& c) {
  const PlayerStats federer{1, "R. Federer", P(0.62), P(0.77), P(0.57), P(0.88)};
  const PlayerStats gabashvili{200, "T. Gabashvili", P(0.57), P(0.70), P(0.48), P(0.74)};
  c.near(invert_p_win_T(P(0.60)), 0.537, 0.001, "invert_p_win_T(0.60)");
  c.near(invert_p_win_T(P(0.75)), 0.617, 0.001, "invert_p_win_T(0.75)");
  c.near(cf::e_points_T(P(0.537)), 6.70, 0.01, "E_T(0.537)");
  c.near(cf::e_points_T(P(0.617)), 6.38, 0.01, "E_T(0.617)");
  c.near(solve_x(gabashvili, P(0.537)), 3.07, 0.02, "solve_x(Gabashvili, 0.537)");
  c.near(solve_x(federer, P(0.617)), 2.42, 0.02, "solve_x(Federer, 0.617)");
  const auto sol = recommend_cutoff(gabashvili, federer);
  c.expect(sol.x_recommended == 3, "recommend_cutoff: got %d, want 3", sol.x_recommended);
}

void calibration_anchors(Check& c) {
  const PlayerStats federer{1, "R. Federer", P(0.62), P(0.77), P(0.57), P(0.88)};
  const PlayerStats gabashvili{200, "T. Gabashvili", P(0.57), P(0.70), P(0.48), P(0.74)};
  const Probability pf = p_emp(federer);
  const Probability pg = p_emp(gabashvili);
  c.near(pf.value(), 0.694, 0.0005, "p_emp(.62,.77,.57)");
  c.near(cf::p_win_T(pf), 0.888, 0.0005, "p_win_T(p_emp Federer)");
  c.near(pg.value(), 0.605, 0.0005, "p_emp(.57,.70,.48)");
  c.near(cf::p_win_T(pg), 0.756, 0.0005, "p_win_T(p_emp Gabashvili)");
}

void closed_form_vs_engine(Check& c) {
  double worst = 0.0, worst_omalley = 0.0;
  const auto track = [&](double a, double b, const char* what, double p1, double p2) {
    const double d = std::abs(a - b);
    if (d > worst) worst = d;
    c.expect(d <= 1e-9, "%s at (%.2f, %.2f): |diff| = %.3g", what, p1, p2, d);
  };
  const auto t_sched = ServeSchedule::standard();
  const auto a_sched = ServeSchedule::deuce_a();
  for (double p : unit_grid(100)) {
    const auto prof = ServeProfile::uniform(p);
    const auto a = metrics_exact(a_sched, prof);
    track(cf::p_win_A(P(p)), a.win_prob, "p_win_A", p, p);
    track(cf::p_bp_A(P(p)), *a.bp_prob, "p_bp_A", p, p);
    track(cf::e_points_A(P(p)), a.expected_points, "e_points_A", p, p);
    track(cf::e_bp_A(P(p)), *a.expected_bps, "e_bp_A", p, p);
    const auto t = metrics_exact(t_sched, prof);
    track(cf::p_win_T(P(p)), t.win_prob, "p_win_T", p, p);
    track(cf::p_bp_T(P(p)), *t.bp_prob, "p_bp_T", p, p);
    track(cf::e_points_T(P(p)), t.expected_points, "e_points_T", p, p);
    track(cf::e_bp_T(P(p)), *t.expected_bps, "e_bp_T", p, p);
    const double om = std::abs(cf::p_win_T_omalley(P(p)) - cf::p_win_T(P(p)));
    if (om > worst_omalley) worst_omalley = om;
    c.expect(om <= 1e-12, "p_win_T_omalley at %.2f: |diff| = %.3g", p, om);
  }
  const auto bj = ServeSchedule::deuce_bj(1);
  const auto b = ServeSchedule::alternating(1);
  const auto c3 = ServeSchedule::single_serve_after(3);
  for (double pf : unit_grid(100)) {
    for (double ps : unit_grid(100)) {
      const ServeProfile prof{pf, ps};
      const auto mj = metrics_exact(bj, prof);
      track(cf::p_win_Bj(prof), mj.win_prob, "p_win_Bj", pf, ps);
      track(cf::e_points_Bj(prof), mj.expected_points, "e_points_Bj", pf, ps);
      const auto mb = metrics_exact(b, prof);
      track(cf::p_win_B(prof), mb.win_prob, "p_win_B", pf, ps);
      track(cf::e_points_B(prof), mb.expected_points, "e_points_B", pf, ps);
      const auto mc = metrics_exact(c3, prof);
      track(cf::p_win_C(prof), mc.win_prob, "p_win_C", pf, ps);
      track(cf::p_bp_C(prof), *mc.bp_prob, "p_bp_C", pf, ps);
      track(cf::e_points_C(prof), mc.expected_points, "e_points_C", pf, ps);
      track(cf::e_bp_C(prof), *mc.expected_bps, "e_bp_C", pf, ps);
    }
  }
  char note[128];
  std::snprintf(note, sizeof note, "max |closed form - engine| = %.3g, max |O'Malley - standard| = %.3g",
                worst, worst_omalley);
  c.notes.emplace_back(note);
}

void identities(Check& c) {
  const auto grid = unit_grid(200);
  for (double a : grid) {
    c.expect(std::abs(cf::p_win_Bj({0.5, a}) - a) <= 1e-12, "P_Bj(1/2, %.3f) != %.3f", a, a);
    c.expect(std::abs(cf::p_win_Bj({a, 1.0 - a}) - 0.5) <= 1e-12, "P_Bj(%.3f, 1-p) != 1/2", a);
    c.expect(std::abs(cf::p_win_A(P(a)) + cf::p_win_A(P(1.0 - a)) - 1.0) <= 1e-12,
             "P_A(p) + P_A(q) != 1 at %.3f", a);
    c.expect(std::abs(cf::p_win_T(P(a)) + cf::p_win_T(P(1.0 - a)) - 1.0) <= 1e-12,
             "P_T(p) + P_T(q) != 1 at %.3f", a);
    for (double b : grid) {
      c.expect(std::abs(cf::p_win_Bj({a, b}) - cf::p_win_Bj({b, a})) <= 1e-12,
               "P_Bj not symmetric at (%.3f, %.3f)", a, b);
      c.expect(std::abs(cf::p_win_Bj({a, b}) + cf::p_win_Bj({1.0 - a, 1.0 - b}) - 1.0) <= 1e-12,
               "P_Bj complement fails at (%.3f, %.3f)", a, b);
    }
  }
  c.near(cf::e_points_A(P(0.5)), 4.0, 1e-12, "E_A(1/2)");
  c.near(cf::e_points_T(P(0.5)), 6.75, 1e-12, "E_T(1/2)");

  double best_p = 0.0, best = -1.0;
  for (int i = 0; i <= 100000; ++i) {
    const double p = i / 100000.0;
    const double v = cf::e_bp_A(P(p));
    if (v > best) {
      best = v;
      best_p = p;
    }
  }
  c.near(best_p, (2.0 - std::sqrt(2.0)) / 2.0, 0.005, "argmax e_bp_A");

  for (int n = 1; n <= 10; ++n) {
    c.near(walk_expected_duration(n, P(0.5)), n * n, 1e-10, "walk_expected_duration(n, 1/2)");
  }
}

void monte_carlo(Check& c) {
  SimConfig cfg;
  cfg.n_games = 1'000'000;
  cfg.seed = 1;
  for (const auto& row : kTable) {
    const double p = row.cols[0], ps = row.cols[1];
    const std::pair<const char*, std::pair<ServeSchedule, ServeProfile>> cases[] = {
        {"T", {ServeSchedule::standard(), ServeProfile::uniform(p)}},
        {"C(3)", {ServeSchedule::single_serve_after(3), ServeProfile{p, ps}}},
    };
    for (const auto& [name, sp] : cases) {
      const auto& [schedule, prof] = sp;
      const SimResult sim = estimate_metrics(schedule, prof, cfg);
      const GameMetrics exact = metrics_exact(schedule, prof);
      c.expect(sim.truncated_games == 0, "%s rank %d: truncated games", name, row.rank);
      const std::pair<const char*, std::pair<Estimate, double>> metrics[] = {
          {"win", {sim.win, exact.win_prob}},
          {"bp", {*sim.bp_prob, *exact.bp_prob}},
          {"points", {sim.points, exact.expected_points}},
          {"bps", {*sim.bps, *exact.expected_bps}},
      };
      for (const auto& [metric, pair] : metrics) {
        const auto& [est, want] = pair;
        const double z = (est.mean - want) / *est.std_err;
        c.expect(std::abs(z) <= 4.0, "%s rank %d %s: mean %.5f vs exact %.5f (z = %.2f)", name,
                 row.rank, metric, est.mean, want, z);
      }
      const SimResult again = estimate_metrics(schedule, prof, cfg);
      c.expect(again == sim, "%s rank %d: rerun with the same seed differs", name, row.rank);
    }
  }
}

void schedule_equivalence(Check& c) {
  double worst = 0.0;
  for (double pf : unit_grid(100)) {
    for (double ps : unit_grid(100)) {
      const ServeProfile prof{pf, ps};
      const auto b1 = metrics_exact(ServeSchedule::alternating(1), prof);
      const auto b2 = metrics_exact(ServeSchedule::alternating(2), prof);
      const auto j1 = metrics_exact(ServeSchedule::deuce_bj(1), prof);
      const auto j2 = metrics_exact(ServeSchedule::deuce_bj(2), prof);
      for (double d : {b1.win_prob - b2.win_prob, b1.expected_points - b2.expected_points,
                       j1.win_prob - j2.win_prob, j1.expected_points - j2.expected_points}) {
        worst = std::max(worst, std::abs(d));
        c.expect(std::abs(d) <= 1e-14, "order variants differ by %.3g at (%.2f, %.2f)", d, pf,
                 ps);
      }
    }
  }
  char note[64];
  std::snprintf(note, sizeof note, "max |order 1 - order 2| = %.3g", worst);
  c.notes.emplace_back(note);
}

void orderings(Check& c) {
  for (int i = 0; i <= 5000; ++i) {
    const double p = 0.5 + i * 0.0001;
    c.expect(cf::p_win_T(P(p)) >= cf::p_win_A(P(p)), "P_T < P_A at p = %.4f", p);
  }
  int bp_violations = 0;
  double first_bad = -1.0, last_bad = -1.0;
  for (int i = 0; i < 6000; ++i) {
    const double p = 0.4 + i * 0.0001;
    if (cf::p_bp_T(P(p)) > cf::p_bp_A(P(p))) {
      if (bp_violations++ == 0) first_bad = p;
      last_bad = p;
    }
  }
  c.expect(bp_violations == 0, "P_T_br > P_A_br on %d grid points in [%.4f, %.4f]", bp_violations,
           first_bad, last_bad);
  for (const auto& row : kTable) {
    const auto e = engine_row(row);
    c.expect(e.c.win_prob < e.t.win_prob, "rank %d: P_C >= P_T", row.rank);
    c.expect(*e.c.bp_prob > *e.t.bp_prob, "rank %d: P_C_br <= P_T_br", row.rank);
    c.expect(e.c.expected_points > e.t.expected_points, "rank %d: E_C <= E_T", row.rank);
    c.expect(*e.c.expected_bps > *e.t.expected_bps, "rank %d: E_C_br <= E_T_br", row.rank);
    c.expect(e.c.win_prob >= 0.586 - 0.003 && e.c.win_prob <= 0.749 + 0.003,
             "rank %d: P_C = %.4f outside [0.583, 0.752]", row.rank, e.c.win_prob);
  }
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0: no runtime bound
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "comparison table reproduction", 1.0, table_reproduction},
      {2, "shaping numbers", 1.0, shaping_numbers},
      {3, "calibration anchors", 0.0, calibration_anchors},
      {4, "closed form vs engine", 10.0, closed_form_vs_engine},
      {5, "identities", 0.0, identities},
      {6, "Monte Carlo concordance", 60.0, monte_carlo},
      {7, "schedule equivalence", 0.0, schedule_equivalence},
      {8, "ordering properties", 0.0, orderings},
  };

  int failed = 0;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (crit.budget_s > 0.0) {
      check.expect(secs < crit.budget_s, "runtime %.2f s exceeds %.0f s", secs, crit.budget_s);
    }
    const bool ok = check.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("[%s] criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", crit.id, crit.name,
                secs);
    for (const auto& note : check.notes) std::printf("      %s\n", note.c_str());
    constexpr std::size_t kShown = 12;
    for (std::size_t i = 0; i < check.failures.size() && i < kShown; ++i) {
      std::printf("      %s\n", check.failures[i].c_str());
    }
    if (check.failures.size() > kShown) {
      std::printf("      ... %zu more\n", check.failures.size() - kShown);
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
