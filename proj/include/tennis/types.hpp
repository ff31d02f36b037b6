#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tennis {

/// A real in [0, 1]. Complements are computed on demand, never stored.
class Probability {
 public:
  constexpr Probability() = default;
  explicit Probability(double value);

  constexpr double value() const noexcept { return value_; }
  constexpr double complement() const noexcept { return 1.0 - value_; }

  friend constexpr bool operator==(Probability, Probability) = default;

 private:
  double value_ = 0.0;
};

/// F's point-win chances: on a full (two-attempt) serve, and under the
/// reduced condition (S serving, or F restricted to a single serve).
struct ServeProfile {
  Probability full;
  Probability reduced;

  ServeProfile() = default;
  ServeProfile(Probability full_, Probability reduced_) : full(full_), reduced(reduced_) {}
  ServeProfile(double full_, double reduced_) : full(full_), reduced(reduced_) {}

  /// Profile with the same chance everywhere.
  static ServeProfile uniform(double p) { return {p, p}; }

  /// Complementary profile (q_F, q_S): the game seen from S's side.
  ServeProfile swapped_outcomes() const { return {full.complement(), reduced.complement()}; }
};

enum class Server { F, S };

enum class SourceKind {
  FullServe,    ///< F serves with a second serve available; resolves to p_F
  SingleServe,  ///< F serves without a second serve; resolves to p_S
  ReceiverServe ///< S serves; resolves to p_S
};

struct PointSource {
  SourceKind kind = SourceKind::FullServe;

  constexpr Server server() const noexcept {
    return kind == SourceKind::ReceiverServe ? Server::S : Server::F;
  }
  constexpr double probability(const ServeProfile& profile) const noexcept {
    return kind == SourceKind::FullServe ? profile.full.value() : profile.reduced.value();
  }
  friend constexpr bool operator==(PointSource, PointSource) = default;
};

inline constexpr PointSource kFullServe{SourceKind::FullServe};
inline constexpr PointSource kSingleServe{SourceKind::SingleServe};
inline constexpr PointSource kReceiverServe{SourceKind::ReceiverServe};

enum class RuleKind { A, Bj, T, B, C };

std::string_view to_string(RuleKind kind);
std::optional<RuleKind> parse_rule_kind(std::string_view text);

/// Deuce-only games ignore the pre-deuce lattice entirely.
constexpr bool is_deuce_only(RuleKind kind) { return kind == RuleKind::A || kind == RuleKind::Bj; }

/// Per-point source pattern. The prefix covers points 1..6 (empty for
/// games that start at deuce); the cycle repeats from 3:3 onward.
class ServeSchedule {
 public:
  static constexpr std::size_t kPrefixLength = 6;

  /// Throws RangeError unless prefix has 0 or 6 entries and the cycle 1 or 2.
  ServeSchedule(std::vector<PointSource> prefix, std::vector<PointSource> deuce_cycle);

  static ServeSchedule deuce_a();
  /// order 1: F,S ; order 2: S,F
  static ServeSchedule deuce_bj(int order = 1);
  static ServeSchedule standard();
  /// order 1: FSFSFS ; order 2: FSSFFS
  static ServeSchedule alternating(int order = 1);
  /// Second serve allowed on the first x points only; x in [0, 6].
  static ServeSchedule single_serve_after(int x);
  static ServeSchedule for_rule(RuleKind kind, int x = 3);

  const std::vector<PointSource>& prefix() const noexcept { return prefix_; }
  const std::vector<PointSource>& deuce_cycle() const noexcept { return cycle_; }
  bool deuce_only() const noexcept { return prefix_.empty(); }
  bool all_f_serving() const noexcept;

  /// Source of the point with 0-based index `point` counted from the first
  /// point the schedule plays.
  PointSource source(std::size_t point) const noexcept;

 private:
  std::vector<PointSource> prefix_;
  std::vector<PointSource> cycle_;
};

/// Win probability, break-point probability, expected points, expected
/// break points. Break-point fields are absent when S serves any point.
struct GameMetrics {
  double win_prob = 0.0;
  std::optional<double> bp_prob;
  double expected_points = 0.0;
  std::optional<double> expected_bps;
};

/// coeff * p_S^a * q_S^b * p_F^c * q_F^d; the symmetric form adds the
/// twin with (a<->b, c<->d).
struct AlgebraTerm {
  unsigned coeff = 1;
  std::array<unsigned, 4> exponents{};
  bool symmetric = false;
};

double eval_term(const AlgebraTerm& term, const ServeProfile& profile);

}  // namespace tennis
