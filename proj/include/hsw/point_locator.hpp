#pragma once

// The point-locator operation: iterative refinement that drives a rational
// probe toward a target known only through a three-way comparison oracle.
// A rational target is hit exactly; an irrational target is bracketed
// forever, with the bracket shrinking every round. Budget exhaustion is a
// normal outcome, not an error.

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "hsw/digit_stream.hpp"
#include "hsw/rational.hpp"

namespace hsw {

// Result of comparing the (hidden) target against a probe rational.
enum class Compare { TargetLess, TargetEqual, TargetGreater };

enum class Exactness { RationalTarget, IrrationalTarget };

// Comparison oracle for one target. Oracles must be pure and monotone;
// the locator cross-checks answers and throws InconsistentCut on
// contradictions.
class CutPredicate {
 public:
  CutPredicate(std::function<Compare(const Rat&)> compare, Exactness exactness)
      : compare_(std::move(compare)), exactness_(exactness) {}

  Compare compare(const Rat& probe) const { return compare_(probe); }
  Exactness exactness() const { return exactness_; }

 private:
  std::function<Compare(const Rat&)> compare_;
  Exactness exactness_;
};

// Exact three-way comparison with p/q.
CutPredicate rational_cut(const Int& p, const Int& q);

// The cut {x : x < 0 or x^2 < n} for non-square n; never answers equal.
// Throws NotIrrational when n is a perfect square (or n <= 0).
CutPredicate dedekind_cut_sqrt(const Int& n);

// The first max(k,1) digit truncations of integer_part.digits as exact
// rationals: integer_part, then one more digit per entry.
std::vector<Rat> cauchy_approximants(const DigitStream& stream,
                                     const Int& integer_part, std::uint64_t k);

enum class LocateStrategy { SternBrocot, Bisection };

struct LocateStep {
  Rat alpha;
  Compare cmp;
  bool seeding;  // true while hunting for the consecutive-integer bracket
  // Bracket width once both sides are pinned; disengaged during seeding.
  std::optional<Rat> width;
};

struct LocatorTrace {
  struct Exact {
    Rat value;
  };
  struct Bracket {  // a run still in progress
    Rat lo;
    Rat hi;
  };
  struct BudgetExhausted {
    Rat lo;
    Rat hi;
  };
  using Outcome = std::variant<Exact, Bracket, BudgetExhausted>;

  std::vector<LocateStep> steps;
  Outcome outcome = Bracket{Rat(0), Rat(0)};

  bool is_exact() const { return std::holds_alternative<Exact>(outcome); }
  const Rat& exact_value() const { return std::get<Exact>(outcome).value; }
  const BudgetExhausted& exhausted() const {
    return std::get<BudgetExhausted>(outcome);
  }
  std::vector<Rat> iterates() const;
  // Steps spent refining the bracket, i.e. not counting seed probes.
  std::size_t refinement_steps() const;
};

// Runs the locator: finds the consecutive-integer bracket around the target,
// then refines it by the chosen strategy for at most `budget` rounds.
// Returns an Exact or BudgetExhausted outcome.
//
// Contradictory oracle answers raise InconsistentCut: every answer must
// respect the bracket implied by earlier ones, and an Equal claim must
// survive a confirming second call. An oracle that never brackets (answers
// one way out to magnitude 2^200) raises DomainError.
LocatorTrace locate(const CutPredicate& cut, std::uint64_t budget,
                    LocateStrategy strategy);

}  // namespace hsw
