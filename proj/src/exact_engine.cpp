#include "tennis/exact_engine.hpp"

#include <array>
#include <string>
#include <vector>

#include "tennis/errors.hpp"

namespace tennis {

namespace {

constexpr double kSingularThreshold = 1e-300;

// mass[f][s][seen]
using Lattice = std::array<std::array<std::array<double, 2>, 4>, 4>;

}  // namespace

DeuceClosure deuce_closure(std::span<const CyclePoint> cycle) {
  if (cycle.empty() || cycle.size() > 2) {
    throw RangeError("deuce cycle must have length 1 or 2");
  }
  const CyclePoint first = cycle.front();
  const CyclePoint second = cycle.back();
  const double a = first.p;
  const double b = second.p;
  const double decided = a * b + (1.0 - a) * (1.0 - b);
  if (decided < kSingularThreshold) {
    throw SingularProfile("deuce never resolves: p_a*p_b + q_a*q_b = 0 (a=" + std::to_string(a) +
                          ", b=" + std::to_string(b) + ")");
  }

  DeuceClosure out;
  out.win = a * b / decided;
  out.expected_len = 2.0 / decided;
  if (first.server == Server::F && second.server == Server::F) {
    // Break point = advantage S, reached by losing the first point of a unit.
    out.bp_indicator = (1.0 - a) / (1.0 - a * (1.0 - b));
    out.bp_count = (1.0 - a) / decided;
  }
  return out;
}

LatticeOutcome propagate_lattice(const ServeSchedule& schedule, const ServeProfile& profile) {
  LatticeOutcome out;
  if (schedule.deuce_only()) {
    out.deuce_mass = 1.0;
    out.deuce_mass_without_bp = 1.0;
    return out;
  }

  Lattice mass{};
  mass[0][0][0] = 1.0;
  for (std::size_t k = 0; k < ServeSchedule::kPrefixLength; ++k) {
    const PointSource src = schedule.source(k);
    const double p = src.probability(profile);
    const double points_played = static_cast<double>(k + 1);
    Lattice next{};

    for (int f = 0; f < 4; ++f) {
      for (int s = 0; s < 4; ++s) {
        for (int seen = 0; seen < 2; ++seen) {
          const double m = mass[f][s][seen];
          if (m == 0.0) continue;

          const auto advance = [&](ScoreState to, double weight) {
            if (weight == 0.0) return;
            if (to.f_points == 4) {
              out.f_win_mass += weight;
              out.points_before_deuce += points_played * weight;
              return;
            }
            if (to.s_points == 4) {
              out.s_win_mass += weight;
              out.points_before_deuce += points_played * weight;
              return;
            }
            // Upcoming point is on F's serve in every schedule that reports
            // break points; mixed schedules discard these sums.
            if (to.is_break_point()) {
              out.bp_occupancy += weight;
              if (!to.bp_seen) out.bp_first_passage += weight;
              to.bp_seen = true;
            }
            next[to.f_points][to.s_points][to.bp_seen ? 1 : 0] += weight;
          };

          advance({f + 1, s, seen == 1}, m * p);
          advance({f, s + 1, seen == 1}, m * (1.0 - p));
        }
      }
    }
    mass = next;
  }

  out.deuce_mass = mass[3][3][0] + mass[3][3][1];
  out.deuce_mass_without_bp = mass[3][3][0];
  return out;
}

GameMetrics metrics_exact(const ServeSchedule& schedule, const ServeProfile& profile,
                          BreakPointPolicy policy) {
  const bool bp_defined = schedule.all_f_serving();
  if (!bp_defined && policy == BreakPointPolicy::Required) {
    throw MixedServerBreakpoint("break points are undefined when S serves some points");
  }

  std::vector<CyclePoint> cycle;
  for (const PointSource& src : schedule.deuce_cycle()) {
    cycle.push_back({src.probability(profile), src.server()});
  }
  const LatticeOutcome lattice = propagate_lattice(schedule, profile);

  GameMetrics metrics;
  if (lattice.deuce_mass == 0.0) {
    // Deuce unreachable; its closure (possibly singular) never contributes.
    metrics.win_prob = lattice.f_win_mass;
    metrics.expected_points = lattice.points_before_deuce;
    if (bp_defined) {
      metrics.bp_prob = lattice.bp_first_passage;
      metrics.expected_bps = lattice.bp_occupancy;
    }
    return metrics;
  }

  const DeuceClosure deuce = deuce_closure(cycle);
  const double deuce_offset = schedule.deuce_only() ? 0.0 : 6.0;
  metrics.win_prob = lattice.f_win_mass + lattice.deuce_mass * deuce.win;
  metrics.expected_points =
      lattice.points_before_deuce + lattice.deuce_mass * (deuce_offset + deuce.expected_len);
  if (bp_defined) {
    metrics.bp_prob = lattice.bp_first_passage + lattice.deuce_mass_without_bp * *deuce.bp_indicator;
    metrics.expected_bps = lattice.bp_occupancy + lattice.deuce_mass * *deuce.bp_count;
  }
  return metrics;
}

double walk_expected_duration(int n, Probability p) {
  if (n < 1 || n > 10'000) {
    throw RangeError("barrier distance n must lie in [1, 10000]");
  }
  const double up = p.value();
  const double down = p.complement();
  const std::size_t m = static_cast<std::size_t>(2 * n - 1);

  // E_i - up*E_{i+1} - down*E_{i-1} = 1 on interior states, E = 0 at the barriers.
  std::vector<double> c_prime(m, 0.0);
  std::vector<double> d_prime(m, 0.0);
  double denom = 1.0;
  c_prime[0] = -up / denom;
  d_prime[0] = 1.0 / denom;
  for (std::size_t i = 1; i < m; ++i) {
    denom = 1.0 - (-down) * c_prime[i - 1];
    c_prime[i] = -up / denom;
    d_prime[i] = (1.0 - (-down) * d_prime[i - 1]) / denom;
  }
  std::vector<double> e(m, 0.0);
  e[m - 1] = d_prime[m - 1];
  for (std::size_t i = m - 1; i-- > 0;) {
    e[i] = d_prime[i] - c_prime[i] * e[i + 1];
  }
  return e[static_cast<std::size_t>(n - 1)];
}

}  // namespace tennis
