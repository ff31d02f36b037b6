#include "tennis/types.hpp"

#include <cmath>
#include <utility>

#include "tennis/errors.hpp"

namespace tennis {

Probability::Probability(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw RangeError("probability out of [0,1]: " + std::to_string(value));
  }
}

std::string_view to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::A: return "A";
    case RuleKind::Bj: return "Bj";
    case RuleKind::T: return "T";
    case RuleKind::B: return "B";
    case RuleKind::C: return "C";
  }
  return "?";
}

std::optional<RuleKind> parse_rule_kind(std::string_view text) {
  if (text == "A") return RuleKind::A;
  if (text == "Bj") return RuleKind::Bj;
  if (text == "T") return RuleKind::T;
  if (text == "B") return RuleKind::B;
  if (text == "C") return RuleKind::C;
  return std::nullopt;
}

ServeSchedule::ServeSchedule(std::vector<PointSource> prefix, std::vector<PointSource> deuce_cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(deuce_cycle)) {
  if (!prefix_.empty() && prefix_.size() != kPrefixLength) {
    throw RangeError("schedule prefix must cover points 1-6 (or be empty for deuce-only games)");
  }
  if (cycle_.empty() || cycle_.size() > 2) {
    throw RangeError("deuce cycle must have length 1 or 2");
  }
}

ServeSchedule ServeSchedule::deuce_a() { return {{}, {kFullServe}}; }

ServeSchedule ServeSchedule::deuce_bj(int order) {
  if (order == 1) return {{}, {kFullServe, kReceiverServe}};
  if (order == 2) return {{}, {kReceiverServe, kFullServe}};
  throw RangeError("Bj order must be 1 or 2");
}

ServeSchedule ServeSchedule::standard() {
  return {std::vector<PointSource>(kPrefixLength, kFullServe), {kFullServe}};
}

ServeSchedule ServeSchedule::alternating(int order) {
  const auto F = kFullServe;
  const auto S = kReceiverServe;
  if (order == 1) return {{F, S, F, S, F, S}, {F, S}};
  // ABBA order: the next two points after FSSFFS are S, F.
  if (order == 2) return {{F, S, S, F, F, S}, {S, F}};
  throw RangeError("B order must be 1 or 2");
}

ServeSchedule ServeSchedule::single_serve_after(int x) {
  if (x < 0 || x > static_cast<int>(kPrefixLength)) {
    throw RangeError("single-serve cutoff x must lie in [0, 6]");
  }
  std::vector<PointSource> prefix(kPrefixLength, kSingleServe);
  for (int i = 0; i < x; ++i) prefix[static_cast<std::size_t>(i)] = kFullServe;
  return {std::move(prefix), {kSingleServe}};
}

ServeSchedule ServeSchedule::for_rule(RuleKind kind, int x) {
  switch (kind) {
    case RuleKind::A: return deuce_a();
    case RuleKind::Bj: return deuce_bj(1);
    case RuleKind::T: return standard();
    case RuleKind::B: return alternating(1);
    case RuleKind::C: return single_serve_after(x);
  }
  throw RangeError("unknown rule kind");
}

bool ServeSchedule::all_f_serving() const noexcept {
  for (const auto& s : prefix_)
    if (s.server() != Server::F) return false;
  for (const auto& s : cycle_)
    if (s.server() != Server::F) return false;
  return true;
}

PointSource ServeSchedule::source(std::size_t point) const noexcept {
  if (point < prefix_.size()) return prefix_[point];
  return cycle_[(point - prefix_.size()) % cycle_.size()];
}

namespace {

double monomial(const std::array<unsigned, 4>& e, double ps, double qs, double pf, double qf) {
  return std::pow(ps, e[0]) * std::pow(qs, e[1]) * std::pow(pf, e[2]) * std::pow(qf, e[3]);
}

}  // namespace

double eval_term(const AlgebraTerm& term, const ServeProfile& profile) {
  const double ps = profile.reduced.value();
  const double qs = profile.reduced.complement();
  const double pf = profile.full.value();
  const double qf = profile.full.complement();
  double value = monomial(term.exponents, ps, qs, pf, qf);
  if (term.symmetric) {
    const auto& e = term.exponents;
    value += monomial({e[1], e[0], e[3], e[2]}, ps, qs, pf, qf);
  }
  return term.coeff * value;
}

}  // namespace tennis
