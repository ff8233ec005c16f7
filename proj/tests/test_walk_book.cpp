#include <catch2/catch_amalgamated.hpp>

#include "obav/book.hpp"
#include "obav/oracle.hpp"
#include "obav/rng.hpp"
#include "obav/walk.hpp"

using namespace obav;

namespace {
WalkPath make_path(std::initializer_list<std::int32_t> levels) {
  WalkPath p;
  p.steps.assign(levels);
  REQUIRE(p.valid());
  return p;
}
}  // namespace

TEST_CASE("generate_walk determinism and invariants") {
  const WalkPath a = generate_walk(RngStream(42, 7), 200);
  const WalkPath b = generate_walk(RngStream(42, 7), 200);
  REQUIRE(a.steps == b.steps);
  REQUIRE(a.valid());
  REQUIRE(a.steps[0] == 0);
  REQUIRE(a.length() == 200);

  const WalkPath c = generate_walk(RngStream(42, 8), 200);
  REQUIRE(a.steps != c.steps);

  const WalkPath one = generate_walk(RngStream(4, 0), 1);
  REQUIRE((one.steps[1] == 1 || one.steps[1] == -1));
  REQUIRE(generate_walk(RngStream(4, 0), 1).steps == one.steps);

  const WalkPath point = generate_walk(RngStream(0, 0), 0);
  REQUIRE(point.steps.size() == 1);
  REQUIRE(point.steps[0] == 0);
}

TEST_CASE("walk endpoint mean obeys the CLT bound") {
  // S_100 over 10^6 streams: |sample mean| <= 4 * sigma/sqrt(N) = 4*10/1000.
  const int horizon = 100;
  const std::uint64_t n = 1000000;
  double sum = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    RngStream rng(20240811, i);
    int s = 0;
    for (int j = 0; j < horizon; ++j) s += rng.next_step();
    sum += s;
  }
  const double mean = sum / static_cast<double>(n);
  REQUIRE(std::abs(mean) <= 4.0 * 10.0 / 1000.0);
}

TEST_CASE("step_book full-book examples") {
  // n = 0: the initial trade, Type II by convention.
  BookState s0(InitMode::FullBook, SpreadParam(2));
  const auto ev0 = step_book(s0, 0, 0);
  REQUIRE(ev0.has_value());
  REQUIRE(ev0->time == 0);
  REQUIRE(ev0->level == 0);
  REQUIRE(ev0->kind == TradeKind::TypeII);

  // mu = 2, path 0,-1,-2,-1,0: trades at n = 0 and n = 4, level 0, Type II.
  const auto events = detect_trades(make_path({0, -1, -2, -1, 0}), SpreadParam(2),
                                    InitMode::FullBook, 1);
  REQUIRE(events.size() == 2);
  REQUIRE(events[1].time == 4);
  REQUIRE(events[1].level == 0);
  REQUIRE(events[1].kind == TradeKind::TypeII);

  // Path 0,1: ladder step, Type I at level 1, for any mu.
  for (int mu : {1, 2, 5}) {
    const auto evs = detect_trades(make_path({0, 1}), SpreadParam(mu), InitMode::FullBook, 1);
    REQUIRE(evs.size() == 2);
    REQUIRE(evs[1].time == 1);
    REQUIRE(evs[1].level == 1);
    REQUIRE(evs[1].kind == TradeKind::TypeI);
  }
}

TEST_CASE("detect_trades examples") {
  const auto full = detect_trades(make_path({0, 1, 2}), SpreadParam(1), InitMode::FullBook, 1);
  REQUIRE(full.size() == 3);
  REQUIRE(full[0].kind == TradeKind::TypeII);
  REQUIRE(full[1].time == 1);
  REQUIRE(full[1].kind == TradeKind::TypeI);
  REQUIRE(full[2].time == 2);
  REQUIRE(full[2].kind == TradeKind::TypeI);

  const auto empty =
      detect_trades(make_path({0, -1, -2, -1}), SpreadParam(1), InitMode::EmptyBook, 1);
  REQUIRE(empty.size() == 1);
  REQUIRE(empty[0].time == 3);
  REQUIRE(empty[0].level == -1);

  const auto none =
      detect_trades(make_path({0, -1, -2, -3, -4}), SpreadParam(2), InitMode::EmptyBook, 1);
  REQUIRE(none.empty());
}

TEST_CASE("detect_trades is a pure function of its inputs") {
  const WalkPath p = generate_walk(RngStream(5, 5), 64);
  const auto a = detect_trades(p, SpreadParam(2), InitMode::FullBook, 3);
  const auto b = detect_trades(p, SpreadParam(2), InitMode::FullBook, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].time == b[i].time);
    REQUIRE(a[i].level == b[i].level);
    REQUIRE(a[i].kind == b[i].kind);
    REQUIRE(a[i].intertrade_gap == b[i].intertrade_gap);
    REQUIRE(a[i].flash_crash == b[i].flash_crash);
  }
}

TEST_CASE("simplified trading times") {
  REQUIRE(simplified_trading_times(make_path({0, 1, 0, 1, 2})) == std::vector<int>{1, 4});
  REQUIRE(simplified_trading_times(make_path({0, -1, 0, 1})) == std::vector<int>{3});
  REQUIRE(simplified_trading_times(make_path({0, -1, -2, -3})).empty());
}

TEST_CASE("flash-crash flag") {
  // mu = 1, path 0,1,0,1: Type I at 1, Type II at 3 with gap 2.
  const WalkPath p = make_path({0, 1, 0, 1});
  const auto wide = detect_trades(p, SpreadParam(1), InitMode::FullBook, 2);
  REQUIRE(wide.size() == 3);
  REQUIRE(wide[2].kind == TradeKind::TypeII);
  REQUIRE(wide[2].intertrade_gap == 2);
  REQUIRE(wide[2].flash_crash);

  const auto tight = detect_trades(p, SpreadParam(1), InitMode::FullBook, 1);
  REQUIRE(!tight[2].flash_crash);

  // The anchor trade never counts as a flash crash.
  REQUIRE(!wide[0].flash_crash);
}

TEST_CASE("decompose smallest Type II excursions") {
  // mu = 1: excursion 0,-1,0.
  const auto d1 = decompose_type2_excursion(make_path({0, -1, 0}), SpreadParam(1));
  REQUIRE(d1.K == 1);
  REQUIRE(d1.segments.size() == 1);
  REQUIRE(d1.segments[0].steps == std::vector<std::int32_t>{0, -1});
  REQUIRE(d1.tail.steps == std::vector<std::int32_t>{0, 1});
  REQUIRE(in_class_B(d1.segments[0], 1));
  REQUIRE(in_class_C(d1.tail, 1));
  REQUIRE(concatenate_excursion(d1).steps == std::vector<std::int32_t>{0, -1, 0});

  // mu = 2: the smallest Type II excursion is 0,-1,-2,-1,0 (length 4), with
  // K = 1 and a tail that dips to relative depth -mu+1 = -1.
  const auto d2 = decompose_type2_excursion(make_path({0, -1, -2, -1, 0}), SpreadParam(2));
  REQUIRE(d2.K == 1);
  REQUIRE(d2.segments[0].steps == std::vector<std::int32_t>{0, -1});
  REQUIRE(d2.tail.steps == std::vector<std::int32_t>{0, -1, 0, 1});
  REQUIRE(in_class_C(d2.tail, 2));
  std::int32_t tail_min = 0;
  for (std::size_t i = 0; i + 1 < d2.tail.steps.size(); ++i)
    tail_min = std::min(tail_min, d2.tail.steps[i]);
  REQUIRE(tail_min == -1);
}

TEST_CASE("decompose rejects non-Type-II paths") {
  REQUIRE_THROWS_AS(decompose_type2_excursion(make_path({0, 1}), SpreadParam(1)),
                    std::invalid_argument);
  // Trade happens before the terminal point.
  REQUIRE_THROWS_AS(decompose_type2_excursion(make_path({0, -1, 0, -1, 0}), SpreadParam(1)),
                    std::invalid_argument);
  // No trade at the terminal point.
  REQUIRE_THROWS_AS(decompose_type2_excursion(make_path({0, -1, -2, -1}), SpreadParam(2)),
                    std::invalid_argument);
}

TEST_CASE("empty-book first trade satisfies the first-passage identity") {
  for (int mu = 1; mu <= 3; ++mu) {
    for (int len = 1; len <= 14; ++len) {
      for_each_path(len, [&](const WalkPath& p) {
        const auto events = detect_trades(p, SpreadParam(mu), InitMode::EmptyBook, 1);
        // Volume-rule first trade == first time S rises mu above the running
        // minimum.
        int first_passage = -1;
        std::int32_t run_min = 0;
        for (int n = 1; n <= len; ++n) {
          if (p.steps[n] - run_min == mu) {
            first_passage = n;
            break;
          }
          run_min = std::min(run_min, p.steps[n]);
        }
        if (events.empty()) {
          REQUIRE(first_passage == -1);
        } else {
          REQUIRE(events[0].time == first_passage);
          const std::int32_t trade_level = events[0].level;
          std::int32_t pre_min = 0;
          for (int n = 0; n < first_passage; ++n) pre_min = std::min(pre_min, p.steps[n]);
          REQUIRE(std::abs(pre_min - trade_level) == mu);
        }
      });
    }
  }
}
