#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "hsw/digit_stream.hpp"
#include "hsw/errors.hpp"

using namespace hsw;

namespace {

// Independent oracle: plain schoolbook long division, one remainder at a
// time, no modular exponentiation.
std::vector<Digit> long_division_digits(long num, long den, int base,
                                        std::size_t n) {
  std::vector<Digit> out;
  long rem = ((num % den) + den) % den;
  for (std::size_t k = 0; k < n; ++k) {
    rem *= base;
    out.push_back(static_cast<Digit>(rem / den));
    rem %= den;
  }
  return out;
}

}  // namespace

TEST_CASE("rational stream matches the long-division oracle") {
  // Frozen from the oracle: fractional digits of 22/7 cycle 142857.
  CHECK(long_division_digits(22, 7, 10, 6) ==
        std::vector<Digit>{1, 4, 2, 8, 5, 7});

  auto s = rational_stream(22, 7, 10);
  CHECK(s.prefix(6) == std::vector<Digit>{1, 4, 2, 8, 5, 7});
  CHECK(s.prefix(12) == long_division_digits(22, 7, 10, 12));

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    long den = static_cast<long>(rng() % 999) + 1;
    long num = static_cast<long>(rng() % 5000);
    auto stream = rational_stream(num, den, 10);
    CHECK(stream.prefix(40) == long_division_digits(num, den, 10, 40));
  }
}

TEST_CASE("repeating expansions") {
  auto third = rational_stream(1, 3, 10);
  CHECK(third.digit_at(0) == 3);
  CHECK(third.digit_at(5) == 3);
  CHECK(third.digit_at(1000) == 3);

  auto half = rational_stream(1, 2, 2);
  CHECK(half.prefix(3) == std::vector<Digit>{1, 0, 0});
}

TEST_CASE("rational stream rejects a zero denominator") {
  CHECK_THROWS_AS(rational_stream(1, 0, 10), InvalidRational);
}

TEST_CASE("digit_at agrees with prefix") {
  // Two routes to the same digits: modular exponentiation vs sequential
  // division.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    long den = static_cast<long>(rng() % 500) + 1;
    long num = static_cast<long>(rng() % 1000);
    auto s = rational_stream(num, den, trial % 2 ? 10 : 2);
    auto digits = s.prefix(30);
    for (std::size_t k = 0; k < digits.size(); ++k) {
      CHECK(s.digit_at(k) == digits[k]);
    }
  }
}

TEST_CASE("rational digits are eventually periodic with period <= q") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    long den = static_cast<long>(rng() % 1000) + 1;
    long num = static_cast<long>(rng() % 3000);
    // Cycle detection on the remainder sequence.
    long rem = ((num % den) + den) % den;
    std::set<long> seen;
    long steps = 0;
    while (!seen.count(rem)) {
      seen.insert(rem);
      rem = rem * 10 % den;
      ++steps;
      REQUIRE(steps <= den + 1);
    }
    CHECK(steps <= den + 1);
  }
}

TEST_CASE("pattern mask parsing and counting") {
  auto mask = PatternMask::parse("111xxx");
  CHECK(mask.period() == 6);
  CHECK(mask.free_count() == 3);
  CHECK(mask.str() == "111xxx");

  CHECK(PatternMask::parse("10").free_count() == 0);
  CHECK_THROWS_AS(PatternMask::parse(""), InvalidMask);
  CHECK_THROWS_AS(PatternMask::parse("1a1"), InvalidMask);
}

TEST_CASE("patterned stream honours fixed cells") {
  auto s = patterned_stream(PatternMask::parse("111xxx"), 42, 10);
  CHECK(s.digit_at(0) == 1);
  CHECK(s.digit_at(1) == 1);
  CHECK(s.digit_at(2) == 1);
  for (std::uint64_t k = 0; k < 600; ++k) {
    if (k % 6 < 3) CHECK(s.digit_at(k) == 1);
  }
}

TEST_CASE("mask with no free cells is fully determinate") {
  auto a = patterned_stream(PatternMask::parse("10"), 1, 10);
  auto b = patterned_stream(PatternMask::parse("10"), 999, 10);
  for (std::uint64_t k = 0; k < 20; ++k) {
    CHECK(a.digit_at(k) == (k % 2 == 0 ? 1 : 0));
    CHECK(a.digit_at(k) == b.digit_at(k));
  }
}

TEST_CASE("free cell count by direct enumeration") {
  auto mask = PatternMask::parse("111xxx");
  std::size_t free_positions = 0;
  for (std::uint64_t k = 0; k < 600; ++k) {
    if (mask.cell(k % 6).free) ++free_positions;
  }
  CHECK(free_positions == 300);
}

TEST_CASE("patterned stream is seed-deterministic") {
  auto s1 = patterned_stream(PatternMask::parse("111xxx"), 42, 10);
  auto s2 = patterned_stream(PatternMask::parse("111xxx"), 42, 10);
  CHECK(s1.prefix(600) == s2.prefix(600));

  auto s3 = patterned_stream(PatternMask::parse("111xxx"), 43, 10);
  CHECK(s1.prefix(600) != s3.prefix(600));
}

TEST_CASE("patterned stream digits stay below the radix") {
  auto s = patterned_stream(PatternMask::parse("1xx"), 5, 2);
  for (std::uint64_t k = 0; k < 200; ++k) {
    Digit d = s.digit_at(k);
    CHECK(d >= 0);
    CHECK(d < 2);
  }
  CHECK_THROWS_AS(patterned_stream(PatternMask::parse("15x"), 0, 2),
                  InvalidMask);
}

TEST_CASE("truncated stream boundary") {
  auto s = truncated_stream(rational_stream(1, 3, 10), 4);
  CHECK(s.digit_at(3) == 3);
  CHECK_THROWS_AS(s.digit_at(4), TruncationExceeded);
  CHECK_THROWS_AS(s.prefix(5), TruncationExceeded);
  CHECK(s.length() == 4);
}

TEST_CASE("literal stream replays its digits exactly") {
  auto s = literal_stream({0, 1, 1, 0}, 2);
  CHECK(s.prefix(4) == std::vector<Digit>{0, 1, 1, 0});
  CHECK_THROWS_AS(s.digit_at(4), TruncationExceeded);

  auto dec = literal_stream({9, 0, 5}, 10);
  CHECK(dec.prefix(3) == std::vector<Digit>{9, 0, 5});
}

TEST_CASE("prefix coherence") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    auto s = trial % 2 ? patterned_stream(PatternMask::parse("1x0xx"), rng(), 10)
                       : rational_stream(static_cast<long>(rng() % 100),
                                         static_cast<long>(rng() % 50) + 1, 10);
    for (std::uint64_t n = 0; n < 12; ++n) {
      auto shorter = s.prefix(n);
      auto longer = s.prefix(n + 1);
      longer.pop_back();
      CHECK(shorter == longer);
    }
  }
}

TEST_CASE("digit string formatting") {
  auto s = rational_stream(22, 7, 10);
  CHECK(format_digits(s, 6) == "142857");
  CHECK(format_digits(s, 6, true) == "0.142857");
}
