#pragma once

#include <cstdint>
#include <optional>

#include "tennis/rng.hpp"
#include "tennis/types.hpp"

namespace tennis {

struct SimConfig {
  std::uint64_t n_games = 1'000'000;
  std::uint64_t seed = 1;
  std::uint64_t max_deuce_cycles = 1'000'000;
  /// When false a game hitting the deuce cap aborts the run with
  /// DeuceCapExceeded; when true it is dropped and counted.
  bool allow_truncation = false;

  void validate() const;
};

struct GameOutcome {
  bool f_won = false;
  int points = 0;
  int bps = 0;  ///< break points played; always 0 for mixed-server schedules
};

/// Plays one game point by point, deuce included, drawing from `rng`.
GameOutcome simulate_game(const ServeSchedule& schedule, const ServeProfile& profile,
                          Xoshiro256& rng, std::uint64_t max_deuce_cycles = 1'000'000);

struct Estimate {
  double mean = 0.0;
  std::optional<double> std_err;  ///< absent when fewer than two games

  friend bool operator==(const Estimate&, const Estimate&) = default;
};

struct SimResult {
  Estimate win;
  std::optional<Estimate> bp_prob;
  Estimate points;
  std::optional<Estimate> bps;
  std::uint64_t n_games = 0;
  std::uint64_t truncated_games = 0;

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

/// Integer tallies over a set of games. Sums of integers are exact, so
/// merging partial tallies in any order gives the same result.
struct SimTally {
  std::uint64_t games = 0;
  std::uint64_t wins = 0;
  std::uint64_t bp_games = 0;
  std::uint64_t points = 0;
  std::uint64_t points_sq = 0;
  std::uint64_t bps = 0;
  std::uint64_t bps_sq = 0;
  std::uint64_t truncated = 0;

  void add(const GameOutcome& g) noexcept;
  void merge(const SimTally& other) noexcept;
};

SimResult summarize(const SimTally& tally, bool bp_defined);

/// Monte Carlo estimate, games sharded across OpenMP threads.
SimResult estimate_metrics(const ServeSchedule& schedule, const ServeProfile& profile,
                           const SimConfig& config);

/// Single-threaded reference; bit-identical to estimate_metrics.
SimResult estimate_metrics_serial(const ServeSchedule& schedule, const ServeProfile& profile,
                                  const SimConfig& config);

}  // namespace tennis
