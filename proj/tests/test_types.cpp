#include <cmath>

#include "doctest.h"
#include "tennis/errors.hpp"
#include "tennis/types.hpp"

using namespace tennis;

TEST_CASE("probability bounds") {
  CHECK(Probability(0.0).value() == 0.0);
  CHECK(Probability(1.0).value() == 1.0);
  CHECK(Probability(0.3).complement() == doctest::Approx(0.7));
  CHECK_THROWS_AS(Probability(1.0000001), RangeError);
  CHECK_THROWS_AS(Probability(-1e-12), RangeError);
  CHECK_THROWS_AS(Probability(std::nan("")), RangeError);
}

TEST_CASE("point sources resolve against the profile") {
  const ServeProfile profile{0.7, 0.4};
  CHECK(kFullServe.probability(profile) == 0.7);
  CHECK(kSingleServe.probability(profile) == 0.4);
  CHECK(kReceiverServe.probability(profile) == 0.4);
  CHECK(kSingleServe.server() == Server::F);
  CHECK(kReceiverServe.server() == Server::S);

  const auto swapped = profile.swapped_outcomes();
  CHECK(swapped.full.value() == doctest::Approx(0.3));
  CHECK(swapped.reduced.value() == doctest::Approx(0.6));
}

TEST_CASE("rule kind names round-trip") {
  for (RuleKind k : {RuleKind::A, RuleKind::Bj, RuleKind::T, RuleKind::B, RuleKind::C}) {
    CHECK(parse_rule_kind(to_string(k)) == k);
  }
  CHECK_FALSE(parse_rule_kind("D").has_value());
  CHECK(is_deuce_only(RuleKind::A));
  CHECK(is_deuce_only(RuleKind::Bj));
  CHECK_FALSE(is_deuce_only(RuleKind::T));
}

TEST_CASE("schedule shapes") {
  SUBCASE("standard game") {
    const auto t = ServeSchedule::standard();
    CHECK(t.prefix().size() == 6);
    CHECK(t.all_f_serving());
    for (std::size_t k = 0; k < 20; ++k) CHECK(t.source(k) == kFullServe);
  }
  SUBCASE("deuce-only games have no prefix") {
    CHECK(ServeSchedule::deuce_a().deuce_only());
    CHECK(ServeSchedule::deuce_bj(2).deuce_only());
    CHECK_FALSE(ServeSchedule::deuce_bj(1).all_f_serving());
  }
  SUBCASE("C(x) switches to single serve after x points") {
    for (int x = 0; x <= 6; ++x) {
      const auto c = ServeSchedule::single_serve_after(x);
      for (int k = 0; k < 6; ++k) {
        CHECK(c.source(static_cast<std::size_t>(k)) == (k < x ? kFullServe : kSingleServe));
      }
      CHECK(c.source(6) == kSingleServe);
      CHECK(c.source(7) == kSingleServe);
      CHECK(c.all_f_serving());
    }
  }
  SUBCASE("alternating orders serve three points each before deuce") {
    for (int order : {1, 2}) {
      const auto b = ServeSchedule::alternating(order);
      int f_serves = 0;
      for (const auto& s : b.prefix()) f_serves += s.server() == Server::F;
      CHECK(f_serves == 3);
      // Every two-point window past deuce has one serve each.
      CHECK(b.source(6).server() != b.source(7).server());
      CHECK(b.source(8) == b.source(6));
    }
  }
  SUBCASE("invalid shapes") {
    CHECK_THROWS_AS(ServeSchedule({kFullServe}, {kFullServe}), RangeError);
    CHECK_THROWS_AS(ServeSchedule({}, {}), RangeError);
    CHECK_THROWS_AS(ServeSchedule({}, {kFullServe, kFullServe, kFullServe}), RangeError);
    CHECK_THROWS_AS(ServeSchedule::single_serve_after(7), RangeError);
    CHECK_THROWS_AS(ServeSchedule::single_serve_after(-1), RangeError);
    CHECK_THROWS_AS(ServeSchedule::alternating(3), RangeError);
  }
}

TEST_CASE("algebra terms") {
  const ServeProfile profile{0.7, 0.4};
  const double ps = 0.4, qs = 0.6, pf = 0.7, qf = 0.3;
  CHECK(eval_term({1, {1, 0, 1, 0}, false}, profile) == doctest::Approx(ps * pf));
  CHECK(eval_term({2, {2, 1, 0, 3}, false}, profile) ==
        doctest::Approx(2 * ps * ps * qs * qf * qf * qf));
  CHECK(eval_term({3, {1, 2, 2, 1}, true}, profile) ==
        doctest::Approx(3 * (ps * qs * qs * pf * pf * qf + qs * ps * ps * qf * qf * pf)));
  CHECK(eval_term({1, {0, 0, 0, 0}, false}, profile) == 1.0);
}
