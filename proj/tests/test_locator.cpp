#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <optional>

#include "hsw/errors.hpp"
#include "hsw/point_locator.hpp"

using namespace hsw;

namespace {

// Plain mediant walk inside (0,1), independent of the locator machinery.
// Returns the number of mediant steps needed to hit p/q exactly, or nullopt
// if `cap` steps were not enough.
std::optional<int> mediant_walk_steps(long p, long q, int cap) {
  const Rat target = make_rat(p, q);
  long a = 0, b = 1, c = 1, d = 1;
  for (int step = 1; step <= cap; ++step) {
    const Rat m = make_rat(a + c, b + d);
    if (m == target) return step;
    if (target < m) {
      c = a + c;
      d = b + d;
    } else {
      a = a + c;
      b = b + d;
    }
  }
  return std::nullopt;
}

// Asserts the two one-sided monotonicity conditions over a whole trace:
// probes answered "target greater" climb, probes answered "target less"
// descend.
void check_monotone_approach(const LocatorTrace& trace) {
  std::optional<Rat> last_below, last_above;
  for (const auto& step : trace.steps) {
    if (step.cmp == Compare::TargetGreater) {
      if (last_below) CHECK(step.alpha > *last_below);
      last_below = step.alpha;
    } else if (step.cmp == Compare::TargetLess) {
      if (last_above) CHECK(step.alpha < *last_above);
      last_above = step.alpha;
    }
  }
}

void check_decreasing_widths(const LocatorTrace& trace) {
  std::optional<Rat> last;
  for (const auto& step : trace.steps) {
    if (!step.seeding && step.width) {
      if (last) CHECK(*step.width < *last);
      last = step.width;
    }
  }
}

}  // namespace

TEST_CASE("rational cut answers three ways") {
  const CutPredicate cut = rational_cut(1, 3);
  CHECK(cut.compare(make_rat(1, 3)) == Compare::TargetEqual);
  CHECK(cut.compare(Rat(0)) == Compare::TargetGreater);
  CHECK(cut.compare(Rat(1)) == Compare::TargetLess);
  CHECK(cut.exactness() == Exactness::RationalTarget);

  const CutPredicate negative = rational_cut(-2, 5);
  CHECK(negative.compare(make_rat(-1, 2)) == Compare::TargetGreater);
}

TEST_CASE("dedekind sqrt cut") {
  const CutPredicate cut = dedekind_cut_sqrt(2);
  CHECK(cut.compare(Rat(1)) == Compare::TargetGreater);
  CHECK(cut.compare(Rat(2)) == Compare::TargetLess);
  CHECK(cut.compare(Rat(-5)) == Compare::TargetGreater);
  CHECK(cut.exactness() == Exactness::IrrationalTarget);

  const CutPredicate three = dedekind_cut_sqrt(3);
  // (19/11)^2 = 361/121 < 3, so the target sits above it.
  CHECK(three.compare(make_rat(19, 11)) == Compare::TargetGreater);
  // (26/15)^2 = 676/225 > 3 (676 > 675), so the target sits below it.
  CHECK(three.compare(make_rat(26, 15)) == Compare::TargetLess);

  CHECK_THROWS_AS(dedekind_cut_sqrt(4), NotIrrational);
  CHECK_THROWS_AS(dedekind_cut_sqrt(49), NotIrrational);
  CHECK_THROWS_AS(dedekind_cut_sqrt(0), NotIrrational);
  CHECK_THROWS_AS(dedekind_cut_sqrt(-2), NotIrrational);
}

TEST_CASE("stern-brocot hits 1/2 on the first mediant") {
  const auto trace = locate(rational_cut(1, 2), 16, LocateStrategy::SternBrocot);
  REQUIRE(trace.is_exact());
  CHECK(trace.exact_value() == make_rat(1, 2));
  CHECK(trace.refinement_steps() <= 2);
}

TEST_CASE("stern-brocot locates 3/7 in the oracle's step count") {
  const auto oracle_steps = mediant_walk_steps(3, 7, 64);
  REQUIRE(oracle_steps.has_value());
  CHECK(*oracle_steps == 4);  // frozen from the walk above
  CHECK(*oracle_steps <= 10);

  const auto trace = locate(rational_cut(3, 7), 64, LocateStrategy::SternBrocot);
  REQUIRE(trace.is_exact());
  CHECK(trace.exact_value() == make_rat(3, 7));
  CHECK(trace.refinement_steps() == static_cast<std::size_t>(*oracle_steps));
  check_monotone_approach(trace);
}

TEST_CASE("stern-brocot terminates exactly on every small rational") {
  for (long p = -20; p <= 20; ++p) {
    for (long q = 1; q <= 20; ++q) {
      const auto trace =
          locate(rational_cut(p, q), 64, LocateStrategy::SternBrocot);
      REQUIRE(trace.is_exact());
      CHECK(trace.exact_value() == make_rat(p, q));
      // Mediant steps stay within the p+q bound for lowest terms.
      const Rat target = make_rat(p, q);
      const Int bound = abs(target.get_num()) + target.get_den();
      const Int steps(static_cast<unsigned long>(trace.refinement_steps()));
      CHECK(steps <= bound);
    }
  }
}

TEST_CASE("bisection finds integers and dyadics quickly") {
  const auto trace = locate(rational_cut(5, 1), 8, LocateStrategy::Bisection);
  REQUIRE(trace.is_exact());
  CHECK(trace.exact_value() == Rat(5));
  CHECK(trace.refinement_steps() == 0);  // found while seeding

  const auto dyadic = locate(rational_cut(3, 8), 8, LocateStrategy::Bisection);
  REQUIRE(dyadic.is_exact());
  CHECK(dyadic.exact_value() == make_rat(3, 8));
}

TEST_CASE("sqrt targets exhaust any budget") {
  for (int n : {2, 3, 5}) {
    const auto trace =
        locate(dedekind_cut_sqrt(n), 60, LocateStrategy::Bisection);
    REQUIRE(!trace.is_exact());
    const auto& end = trace.exhausted();
    CHECK(end.lo < end.hi);
    check_monotone_approach(trace);
    check_decreasing_widths(trace);

    const auto sb =
        locate(dedekind_cut_sqrt(n), 60, LocateStrategy::SternBrocot);
    REQUIRE(!sb.is_exact());
    check_monotone_approach(sb);
    check_decreasing_widths(sb);
  }
}

TEST_CASE("bisection bracket width is exactly 2^-budget") {
  const auto trace =
      locate(dedekind_cut_sqrt(2), 100, LocateStrategy::Bisection);
  REQUIRE(!trace.is_exact());
  const auto& end = trace.exhausted();
  CHECK(Rat(end.hi - end.lo) == make_rat(Int(1), int_pow(Int(2), 100)));
  // Seeded on the consecutive-integer bracket (1,2).
  CHECK(end.lo >= Rat(1));
  CHECK(end.hi <= Rat(2));
}

TEST_CASE("negative targets work through the seeding phase") {
  const auto trace =
      locate(rational_cut(-22, 7), 64, LocateStrategy::SternBrocot);
  REQUIRE(trace.is_exact());
  CHECK(trace.exact_value() == make_rat(-22, 7));
  check_monotone_approach(trace);

  const auto bis = locate(rational_cut(-9, 4), 64, LocateStrategy::Bisection);
  REQUIRE(bis.is_exact());
  CHECK(bis.exact_value() == make_rat(-9, 4));
}

TEST_CASE("zero budget is rejected") {
  CHECK_THROWS_AS(locate(rational_cut(1, 2), 0, LocateStrategy::Bisection),
                  DomainError);
}

TEST_CASE("a flapping equal claim is reported as inconsistent") {
  // Claims an exact hit, then changes its mind on the confirming call.
  auto calls = std::make_shared<int>(0);
  const CutPredicate broken(
      [calls](const Rat&) {
        return (++*calls == 1) ? Compare::TargetEqual : Compare::TargetGreater;
      },
      Exactness::RationalTarget);
  CHECK_THROWS_AS(locate(broken, 100, LocateStrategy::Bisection),
                  InconsistentCut);
}

TEST_CASE("an oracle that never brackets is rejected") {
  const CutPredicate runaway([](const Rat&) { return Compare::TargetGreater; },
                             Exactness::RationalTarget);
  CHECK_THROWS_AS(locate(runaway, 100, LocateStrategy::Bisection), DomainError);
}

TEST_CASE("cauchy approximants reproduce the pi prefix") {
  const auto pi_digits = literal_stream({1, 4, 1, 5, 9}, 10);
  const auto approx = cauchy_approximants(pi_digits, 3, 4);
  REQUIRE(approx.size() == 4);
  CHECK(approx[0] == Rat(3));
  CHECK(approx[1] == make_rat(31, 10));
  CHECK(approx[2] == make_rat(157, 50));
  CHECK(approx[3] == make_rat(3141, 1000));
}

TEST_CASE("cauchy approximants of 1/3") {
  const auto approx = cauchy_approximants(rational_stream(1, 3, 10), 0, 3);
  REQUIRE(approx.size() == 3);
  CHECK(approx[0] == Rat(0));
  CHECK(approx[1] == make_rat(3, 10));
  CHECK(approx[2] == make_rat(33, 100));
}

TEST_CASE("cauchy approximants with k=0 keep the integer part") {
  const auto approx = cauchy_approximants(rational_stream(1, 3, 10), 7, 0);
  REQUIRE(approx.size() == 1);
  CHECK(approx[0] == Rat(7));
}

TEST_CASE("cauchy squeeze: successive gaps are digit over base^k") {
  const auto stream = rational_stream(22, 7, 10);
  const auto approx = cauchy_approximants(stream, 3, 10);
  Int scale(1);
  for (std::size_t j = 0; j + 1 < approx.size(); ++j) {
    scale *= 10;
    const Rat gap(approx[j + 1] - approx[j]);
    CHECK(gap == make_rat(Int(stream.digit_at(j)), scale));
  }
}

TEST_CASE("truncated streams bound the approximant count") {
  const auto stream = literal_stream({1, 4}, 10);
  CHECK(cauchy_approximants(stream, 3, 3).size() == 3);
  CHECK_THROWS_AS(cauchy_approximants(stream, 3, 4), TruncationExceeded);
}
