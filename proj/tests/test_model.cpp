#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "dcagg/model.hpp"
#include "test_support.hpp"

using namespace dcagg;

TEST_CASE("sleep_delay follows the two-branch definition") {
  CHECK(sleep_delay(3, 7, 10) == 4);
  CHECK(sleep_delay(7, 3, 10) == 6);
  CHECK(sleep_delay(5, 5, 10) == 10);
}

TEST_CASE("sleep_delay rejects slots outside the period") {
  CHECK_THROWS_AS(sleep_delay(10, 3, 10), std::invalid_argument);
  CHECK_THROWS_AS(sleep_delay(3, -1, 10), std::invalid_argument);
  CHECK_THROWS_AS(sleep_delay(0, 0, 0), std::invalid_argument);
}

TEST_CASE("sleep_delay equals the modular closed form for T <= 12") {
  for (int period = 1; period <= 12; ++period)
    for (int tu = 0; tu < period; ++tu)
      for (int tv = 0; tv < period; ++tv) {
        const int closed = (((tv - tu - 1) % period) + period) % period + 1;
        const int d = sleep_delay(tu, tv, period);
        REQUIRE(d == closed);
        REQUIRE(d >= 1);
        REQUIRE(d <= period);
      }
}

TEST_CASE("min_sleep_delay examples") {
  // Pairs: t(2,5)=3, t(2,9)=7, t(8,5)=7, t(8,9)=1.
  CHECK(min_sleep_delay(DutyCycle({2, 8}, 10), DutyCycle({5, 9}, 10), 10) == 1);
  // Pairs: t(2,8)=6, t(8,2)=4, t(2,2)=10, t(8,8)=10.
  CHECK(min_sleep_delay(DutyCycle({2, 8}, 10), DutyCycle({2, 8}, 10), 10) == 4);
  CHECK(min_sleep_delay(DutyCycle({0}, 5), DutyCycle({0}, 5), 5) == 5);
}

TEST_CASE("min_sleep_delay rejects empty slot sets") {
  const std::vector<int> empty;
  const std::vector<int> one{1};
  CHECK_THROWS_AS(min_sleep_delay(empty, one, 5), std::invalid_argument);
  CHECK_THROWS_AS(min_sleep_delay(one, empty, 5), std::invalid_argument);
}

TEST_CASE("min_sleep_delay is a lower bound and shrinks as slot sets grow") {
  std::mt19937_64 gen(7);
  for (int iter = 0; iter < 2000; ++iter) {
    const int period = 1 + static_cast<int>(gen() % 30);
    auto draw = [&](int count) {
      std::vector<int> all(period);
      for (int i = 0; i < period; ++i) all[i] = i;
      std::shuffle(all.begin(), all.end(), gen);
      all.resize(count);
      return all;
    };
    const int ka = 1 + static_cast<int>(gen() % period);
    const int kb = 1 + static_cast<int>(gen() % period);
    const auto a = draw(ka);
    const auto b = draw(kb);
    const int best = min_sleep_delay(a, b, period);
    REQUIRE(best == testing::brute_min_delay(a, b, period));
    for (int tu : a)
      for (int tv : b) REQUIRE(best <= sleep_delay(tu, tv, period));

    auto bigger = a;
    const int extra = static_cast<int>(gen() % period);
    if (std::find(bigger.begin(), bigger.end(), extra) == bigger.end()) bigger.push_back(extra);
    REQUIRE(min_sleep_delay(bigger, b, period) <= best);
    REQUIRE(min_sleep_delay(a, bigger, period) <= min_sleep_delay(a, a, period));
  }
}

TEST_CASE("DutyCycle validates and answers wake queries") {
  const DutyCycle dc({8, 2}, 10);
  CHECK(dc.active_slots() == std::vector<int>{2, 8});
  CHECK(dc.is_active(12));
  CHECK_FALSE(dc.is_active(13));
  CHECK(dc.next_active(0) == 2);
  CHECK(dc.next_active(2) == 2);
  CHECK(dc.next_active(3) == 8);
  CHECK(dc.next_active(9) == 12);
  CHECK(dc.next_active(28) == 28);
  CHECK_THROWS_AS(DutyCycle({1, 1}, 10), std::invalid_argument);
  CHECK_THROWS_AS(DutyCycle({10}, 10), std::invalid_argument);
  CHECK_THROWS_AS(DutyCycle({}, 10), std::invalid_argument);
}

TEST_CASE("Params invariants") {
  Params p;
  CHECK_NOTHROW(validate(p));
  p.interference_range = p.comm_range - 1;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
  p = Params{};
  p.active_slot_count = p.period_length + 1;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
  p = Params{};
  p.channel_count = 0;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
}
