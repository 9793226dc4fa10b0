#pragma once

// The hybrid-space number model: ordered pairs of discrete endpoints mapped
// to continuous intervals, with a convexity value measuring how much of an
// interval is determinate. Convexity is infinite exactly when the mapping is
// perfect; a finite convexity C leaves a 1/C slice unpredictable.
//
// All arithmetic is exact rational; the identities tested against these
// operations hold bit-for-bit, never within a tolerance.

#include <cstdint>
#include <string>
#include <vector>

#include "hsw/digit_stream.hpp"
#include "hsw/rational.hpp"

namespace hsw {

// A determinate segment between two discrete endpoints, i < j.
struct OrderedPair {
  std::int64_t i;
  std::int64_t j;

  OrderedPair(std::int64_t i, std::int64_t j);

  std::int64_t extent() const { return j - i; }
  friend bool operator==(const OrderedPair&, const OrderedPair&) = default;
};

// Either a rational strictly greater than 1, or Infinite (perfect mapping).
// Infinite is a distinguished state, not a sentinel number, so it can never
// leak into a division.
class Convexity {
 public:
  static Convexity infinite();
  static Convexity finite(const Rat& value);  // throws InvalidConvexity if <= 1

  bool is_infinite() const { return infinite_; }
  const Rat& value() const;  // finite only

  // 1 - 1/C, the fraction of the span that is determinate; 1 when infinite.
  Rat determinate_factor() const;

  std::string str() const;                         // "p/q" or "inf"
  static Convexity parse(const std::string& text); // accepts "inf" / "p/q"

  friend bool operator==(const Convexity& a, const Convexity& b);

 private:
  Convexity() = default;
  bool infinite_ = false;
  Rat value_;
};

// The [lower, upper, convexity] representation of a partially determinate
// number. Serializes as {"lower":"p/q","upper":"p/q","convexity":"p/q"|"inf"}.
struct HybridInterval {
  Rat lower;
  Rat upper;
  Convexity convexity;

  HybridInterval(Rat lower, Rat upper, Convexity convexity);
};

std::string to_json_string(const HybridInterval& interval);
HybridInterval hybrid_interval_from_json(const std::string& text);

// Ordered assignment of discrete elements to pairwise-disjoint continuous
// intervals; the increment operator on the discrete side is successor on
// assignment order.
class HybridMapping {
 public:
  struct Entry {
    std::int64_t element;
    Rat lower;
    Rat upper;
  };

  HybridMapping(std::string domain_label, std::string codomain_label,
                std::vector<Entry> assignments);

  const std::string& domain_label() const { return domain_label_; }
  const std::string& codomain_label() const { return codomain_label_; }
  const std::vector<Entry>& assignments() const { return assignments_; }

  // The entry the ++ operator moves to; nullptr past the end.
  const Entry* successor(std::size_t index) const;

 private:
  std::string domain_label_;
  std::string codomain_label_;
  std::vector<Entry> assignments_;
};

// Distance as counted in the discrete space: second pair's upper endpoint
// minus first pair's lower. Throws NonAdjacentPairs unless a.j <= b.i.
std::int64_t virtual_distance(const OrderedPair& a, const OrderedPair& b);

// Distance actually covered: the two determinate extents (j-i) + (l-k).
std::int64_t actual_distance(const OrderedPair& a, const OrderedPair& b);

// Addition of adjacent intervals: l-i when contiguous (k = j, perfect
// mapping), otherwise the actual distance.
std::int64_t add_intervals(const OrderedPair& a, const OrderedPair& b);

// (l-i)/(k-j); Infinite in the contiguous case.
Convexity convexity(const OrderedPair& a, const OrderedPair& b);

// actual = virtual * (1 - 1/C); virtual must be non-negative.
Rat actual_from_virtual(const Rat& virtual_dist, const Convexity& c);

// period / free_count; Infinite for a mask with no free cells.
Convexity pattern_convexity(const PatternMask& mask);

// 1 - 1/C, or exactly 1 when infinite.
Rat predictable_fraction(const Convexity& c);

struct TraversalResult {
  // x1 [(C1-1)/C1] * sum_{i=2..n} Ci/(Ci-1), exactly as printed; an empty
  // sum (n = 1) gives 0.
  Rat paper_bracket;
  // paper_bracket + x1: the sum over all n intervals, which is what the
  // surrounding prose describes.
  Rat total_virtual_all;
  // x_i = x1 (1-1/C1) / (1-1/Ci), the interval lengths implied by holding
  // the actual distance of every interval constant.
  std::vector<Rat> interval_lengths;
};

TraversalResult traversal_sum(const Rat& x1,
                              const std::vector<Convexity>& convexities);

// Addition by the two recursion rules alone: a + 0 = a, a + S(b) = S(a + b).
std::uint64_t peano_add(std::uint64_t a, std::uint64_t b);

}  // namespace hsw
