#include "tennis/monte_carlo.hpp"

#include <cmath>
#include <string>

#include "tennis/errors.hpp"

namespace tennis {

void SimConfig::validate() const {
  if (n_games < 1) throw RangeError("n_games must be at least 1");
  if (max_deuce_cycles < 1) throw RangeError("max_deuce_cycles must be at least 1");
}

GameOutcome simulate_game(const ServeSchedule& schedule, const ServeProfile& profile,
                          Xoshiro256& rng, std::uint64_t max_deuce_cycles) {
  const bool bp_defined = schedule.all_f_serving();
  int f = schedule.deuce_only() ? 3 : 0;
  int s = f;
  std::uint64_t deuce_visits = 0;
  GameOutcome out;

  for (std::size_t k = 0;; ++k) {
    if ((f >= 4 || s >= 4) && std::abs(f - s) >= 2) break;
    if (f == s && f >= 3) {
      if (++deuce_visits > max_deuce_cycles) {
        throw DeuceCapExceeded("deuce revisited more than " + std::to_string(max_deuce_cycles) +
                               " times");
      }
      // Keep the counters small; only the difference matters from here on.
      f = s = 3;
    }
    if (bp_defined && s >= 3 && s > f) ++out.bps;

    const double p = schedule.source(k).probability(profile);
    if (rng.uniform() < p) {
      ++f;
    } else {
      ++s;
    }
    ++out.points;
  }
  out.f_won = f > s;
  return out;
}

void SimTally::add(const GameOutcome& g) noexcept {
  const auto pts = static_cast<std::uint64_t>(g.points);
  const auto b = static_cast<std::uint64_t>(g.bps);
  ++games;
  wins += g.f_won ? 1 : 0;
  bp_games += b > 0 ? 1 : 0;
  points += pts;
  points_sq += pts * pts;
  bps += b;
  bps_sq += b * b;
}

void SimTally::merge(const SimTally& o) noexcept {
  games += o.games;
  wins += o.wins;
  bp_games += o.bp_games;
  points += o.points;
  points_sq += o.points_sq;
  bps += o.bps;
  bps_sq += o.bps_sq;
  truncated += o.truncated;
}

namespace {

Estimate estimate_from(std::uint64_t sum, std::uint64_t sum_sq, std::uint64_t n) {
  Estimate e;
  const long double ln = static_cast<long double>(n);
  const long double mean = static_cast<long double>(sum) / ln;
  e.mean = static_cast<double>(mean);
  if (n >= 2) {
    long double var = (static_cast<long double>(sum_sq) - ln * mean * mean) / (ln - 1.0L);
    if (var < 0.0L) var = 0.0L;
    e.std_err = static_cast<double>(std::sqrt(var / ln));
  }
  return e;
}

void play_one(const ServeSchedule& schedule, const ServeProfile& profile,
              const SimConfig& config, std::uint64_t index, SimTally& tally) {
  Xoshiro256 rng = Xoshiro256::for_game(config.seed, index);
  try {
    tally.add(simulate_game(schedule, profile, rng, config.max_deuce_cycles));
  } catch (const DeuceCapExceeded&) {
    if (!config.allow_truncation) throw;
    ++tally.truncated;
  }
}

}  // namespace

SimResult summarize(const SimTally& t, bool bp_defined) {
  SimResult r;
  r.n_games = t.games;
  r.truncated_games = t.truncated;
  if (t.games == 0) {
    throw DeuceCapExceeded("every simulated game hit the deuce cap");
  }
  // Indicators: x^2 == x.
  r.win = estimate_from(t.wins, t.wins, t.games);
  r.points = estimate_from(t.points, t.points_sq, t.games);
  if (bp_defined) {
    r.bp_prob = estimate_from(t.bp_games, t.bp_games, t.games);
    r.bps = estimate_from(t.bps, t.bps_sq, t.games);
  }
  return r;
}

SimResult estimate_metrics_serial(const ServeSchedule& schedule, const ServeProfile& profile,
                                  const SimConfig& config) {
  config.validate();
  SimTally tally;
  for (std::uint64_t i = 0; i < config.n_games; ++i) {
    play_one(schedule, profile, config, i, tally);
  }
  return summarize(tally, schedule.all_f_serving());
}

SimResult estimate_metrics(const ServeSchedule& schedule, const ServeProfile& profile,
                           const SimConfig& config) {
  config.validate();
  SimTally total;
  bool failed = false;
  std::string failure;
  const auto n = static_cast<long long>(config.n_games);

#pragma omp parallel
  {
    SimTally local;
#pragma omp for schedule(static)
    for (long long i = 0; i < n; ++i) {
      bool stop = false;
#pragma omp atomic read
      stop = failed;
      if (stop) continue;
      try {
        play_one(schedule, profile, config, static_cast<std::uint64_t>(i), local);
      } catch (const DeuceCapExceeded& e) {
#pragma omp critical(tennis_mc_failure)
        {
          if (failure.empty()) failure = e.what();
        }
#pragma omp atomic write
        failed = true;
      }
    }
#pragma omp critical(tennis_mc_merge)
    total.merge(local);
  }

  if (failed) throw DeuceCapExceeded(failure);
  return summarize(total, schedule.all_f_serving());
}

}  // namespace tennis
