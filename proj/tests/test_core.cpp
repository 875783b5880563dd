#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "polyra/core.hpp"

using namespace polyra;

namespace {

ProblemInstance make(int K, int M, double C, std::vector<double> r) {
  return ProblemInstance{K, M, C, std::move(r)};
}

// Independent oracle for opt_period: exhaustive search over per-event taken
// mass on a 1/q grid. Exact when C and all masses are grid multiples.
double opt_period_brute(const ProblemInstance& inst, const std::vector<ArrivalEvent>& events,
                        int q) {
  double best = 0.0;
  std::vector<int> take(events.size(), 0);
  const double step = 1.0 / q;
  auto recurse = [&](auto&& self, size_t i, double used, double value) -> void {
    if (used > inst.C + 1e-12) return;
    best = std::max(best, value);
    if (i == events.size()) return;
    const int max_units = static_cast<int>(std::lround(events[i].mass * q));
    for (int u = 0; u <= max_units; ++u) {
      self(self, i + 1, used + u * step, value + u * step * inst.reward(events[i].agent_type));
    }
  };
  recurse(recurse, 0, 0.0, 0.0);
  return best;
}

// Brute-force flexible benchmark for tiny sequences: grid over the mass each
// event serves in its arrival period vs the next one.
double opt_total_flexible_brute(const ProblemInstance& inst, const ArrivalSequence& seq,
                                int q) {
  struct Item {
    int period;
    double mass;
    double reward;
    bool flex;
  };
  std::vector<Item> items;
  for (size_t t = 0; t < seq.periods.size(); ++t) {
    for (const ArrivalEvent& e : seq.periods[t]) {
      items.push_back({static_cast<int>(t), e.mass, inst.reward(e.agent_type),
                       inst.is_flexible(e.agent_type)});
    }
  }
  const int T = static_cast<int>(seq.periods.size());
  std::vector<double> used(static_cast<size_t>(T), 0.0);
  const double step = 1.0 / q;
  double best = 0.0;
  auto recurse = [&](auto&& self, size_t i, double value) -> void {
    best = std::max(best, value);
    if (i == items.size()) return;
    const Item& it = items[i];
    const int max_units = static_cast<int>(std::lround(it.mass * q));
    const bool can_wait = it.flex && it.period + 1 < T;
    for (int now = 0; now <= max_units; ++now) {
      for (int later = 0; later <= (can_wait ? max_units - now : 0); ++later) {
        const double m_now = now * step, m_later = later * step;
        if (used[static_cast<size_t>(it.period)] + m_now > inst.C + 1e-12) continue;
        if (can_wait && used[static_cast<size_t>(it.period + 1)] + m_later > inst.C + 1e-12) continue;
        used[static_cast<size_t>(it.period)] += m_now;
        if (can_wait) used[static_cast<size_t>(it.period + 1)] += m_later;
        self(self, i + 1, value + (m_now + m_later) * it.reward);
        used[static_cast<size_t>(it.period)] -= m_now;
        if (can_wait) used[static_cast<size_t>(it.period + 1)] -= m_later;
      }
    }
  };
  recurse(recurse, 0, 0.0);
  return best;
}

} // namespace

TEST_CASE("instance validation") {
  CHECK_NOTHROW(validate_instance(make(2, 1, 1.0, {1.0, 2.0})));
  CHECK_NOTHROW(validate_instance(make(4, 0, 2.5, {1.0, 2.0, 3.0, 9.0})));

  const auto issue_of = [](const ProblemInstance& inst) {
    try {
      validate_instance(inst);
    } catch (const ValidationError& e) {
      return e.issue();
    }
    FAIL("expected a validation error");
    return ValidationIssue::BadTypeCount;
  };
  CHECK(issue_of(make(2, 1, 1.0, {2.0, 1.0})) == ValidationIssue::RewardsNotIncreasing);
  CHECK(issue_of(make(2, 1, 1.0, {1.0, 1.0})) == ValidationIssue::RewardsNotIncreasing);
  CHECK(issue_of(make(2, 2, 1.0, {1.0, 2.0})) == ValidationIssue::TooManyFlexibleTypes);
  CHECK(issue_of(make(2, -1, 1.0, {1.0, 2.0})) == ValidationIssue::TooManyFlexibleTypes);
  CHECK(issue_of(make(2, 1, 0.0, {1.0, 2.0})) == ValidationIssue::NonpositiveCapacity);
  CHECK(issue_of(make(2, 1, 1.0, {-1.0, 2.0})) == ValidationIssue::NonpositiveReward);
  CHECK(issue_of(make(1, 0, 1.0, {1.0})) == ValidationIssue::BadTypeCount);
  CHECK(issue_of(make(3, 1, 1.0, {1.0, 2.0})) == ValidationIssue::BadTypeCount);
}

TEST_CASE("single-period clairvoyant optimum") {
  const ProblemInstance two = make(2, 1, 1.0, {1.0, 2.0});
  std::vector<ArrivalEvent> only_low{{1, 1.0}};
  CHECK(opt_period(two, only_low) == doctest::Approx(1.0));

  std::vector<ArrivalEvent> mixed{{1, 0.5}, {2, 0.8}};
  CHECK(opt_period(two, mixed) == doctest::Approx(1.8));

  const ProblemInstance three = make(3, 1, 1.0, {0.25, 0.5, 1.0});
  std::vector<ArrivalEvent> staircase{{1, 1.0}, {2, 1.0}, {3, 1.0}};
  CHECK(opt_period(three, staircase) == doctest::Approx(1.0));

  CHECK(opt_period(two, {}) == 0.0);
}

TEST_CASE("optimum matches exhaustive search on discretized inputs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> n_events(1, 6);
  std::uniform_int_distribution<int> units(1, 4);
  const int q = 4;
  const ProblemInstance inst = make(3, 1, 1.0, {0.3, 0.7, 1.4});
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ArrivalEvent> events;
    const int n = n_events(rng);
    for (int i = 0; i < n; ++i) {
      std::uniform_int_distribution<int> type(1, 3);
      events.push_back({type(rng), units(rng) / static_cast<double>(q)});
    }
    CHECK(opt_period(inst, events) ==
          doctest::Approx(opt_period_brute(inst, events, q)).epsilon(1e-12));
  }
}

TEST_CASE("flexible benchmark over a whole sequence") {
  const ProblemInstance inst = make(2, 1, 1.0, {1.0, 2.0});

  // One big flexible batch splits across the two listed periods.
  ArrivalSequence seq;
  seq.periods = {{{1, 2.0}}, {}};
  CHECK(opt_total_flexible(inst, seq) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(opt_total_flexible(inst, seq) ==
        doctest::Approx(opt_total_flexible_brute(inst, seq, 4)).epsilon(1e-10));

  // Inflexible only: one period, capacity-bound.
  ArrivalSequence one;
  one.periods = {{{2, 1.0}}};
  CHECK(opt_total_flexible(inst, one) == doctest::Approx(2.0));

  // 2C of each of types 1..j in period one: benchmark value 2 r_j C.
  for (int j = 1; j <= 2; ++j) {
    ArrivalSequence fam;
    fam.periods.assign(2, {});
    for (int k = 1; k <= j; ++k) fam.periods[0].push_back({k, 2.0});
    if (j == 2) fam.periods[1] = fam.periods[0];
    CHECK(opt_total_flexible(inst, fam) ==
          doctest::Approx(2.0 * inst.reward(j)).epsilon(1e-12));
  }
}

TEST_CASE("flexible benchmark dominates the inflexible one") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> type(1, 3);
  std::uniform_int_distribution<int> units(1, 4);
  const ProblemInstance inst = make(3, 2, 1.0, {0.3, 0.7, 1.4});
  for (int trial = 0; trial < 25; ++trial) {
    ArrivalSequence seq;
    seq.periods.assign(2, {});
    for (auto& period : seq.periods) {
      for (int i = 0; i < 3; ++i) period.push_back({type(rng), units(rng) / 4.0});
    }
    double inflexible_total = 0.0;
    for (const auto& period : seq.periods) inflexible_total += opt_period(inst, period);
    CHECK(opt_total_flexible(inst, seq) >= inflexible_total - 1e-9);
  }
}

TEST_CASE("G and the no-flexibility bound") {
  CHECK(big_G(make(3, 1, 1.0, {0.25, 0.5, 1.0})) == doctest::Approx(1.5));
  CHECK(big_G(make(2, 1, 1.0, {1.0, 2.0})) == doctest::Approx(1.0));
  CHECK(big_G(make(4, 2, 1.0, {1.0, 3.0, 4.0, 400.0})) == doctest::Approx(1.99));

  CHECK(ball_queyranne_L(make(2, 1, 1.0, {1.0, 2.0})) == doctest::Approx(2.0 / 3.0));
  CHECK(ball_queyranne_L(make(3, 0, 1.0, {0.25, 0.5, 1.0})) == doctest::Approx(0.5));
  // Near-equal rewards: a single effective type, bound close to 1.
  CHECK(ball_queyranne_L(make(3, 0, 1.0, {1.0, 1.0 + 1e-9, 1.0 + 2e-9})) ==
        doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("range properties of the scalar bounds") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ratio(0.05, 0.95);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> pick_k(2, 7);
    const int K = pick_k(rng);
    std::uniform_int_distribution<int> pick_m(0, K - 1);
    const int M = pick_m(rng);
    std::vector<double> r(static_cast<size_t>(K));
    r[static_cast<size_t>(K - 1)] = 1.0 + ratio(rng);
    for (int i = K - 1; i >= 1; --i) r[static_cast<size_t>(i - 1)] = r[static_cast<size_t>(i)] * ratio(rng);
    const ProblemInstance inst = make(K, M, 1.0, r);

    const double G = big_G(inst);
    if (K - M == 1) {
      CHECK(G == doctest::Approx(1.0));
    } else {
      CHECK(G > 1.0);
      CHECK(G < static_cast<double>(K - M));
    }
    const double L = ball_queyranne_L(inst);
    CHECK(L > 1.0 / K);
    CHECK(L <= 1.0);
  }
}
