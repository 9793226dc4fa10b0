#pragma once

// Lazily indexed digit sequences: the fractional expansion of a rational,
// a repeating mask with seeded free cells, or a hard truncation of another
// stream. Streams are immutable values; indexing is stateless, so concurrent
// reads are safe.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hsw/rational.hpp"

namespace hsw {

using Digit = int;

struct MaskCell {
  bool free = false;
  Digit digit = 0;  // meaningful only when !free
};

// Repeating cell pattern, e.g. "111xxx": fixed digits plus free slots.
// A mask with no free cells denotes a fully determinate (eventually
// periodic, hence rational) stream.
class PatternMask {
 public:
  explicit PatternMask(std::vector<MaskCell> cells);

  // ASCII syntax: '0'..'9' for fixed cells, 'x' for free cells.
  static PatternMask parse(const std::string& text);

  std::size_t period() const { return cells_.size(); }
  std::size_t free_count() const { return free_count_; }
  const MaskCell& cell(std::size_t position) const {
    return cells_[position % cells_.size()];
  }
  const std::vector<MaskCell>& cells() const { return cells_; }
  std::string str() const;

 private:
  std::vector<MaskCell> cells_;
  std::size_t free_count_ = 0;
};

class DigitStream {
 public:
  enum class Kind { Rational, Patterned, Truncated };

  int base() const { return base_; }
  Kind kind() const;

  // The index-th fractional digit. Deterministic and repeatable; throws
  // TruncationExceeded past a truncation bound.
  Digit digit_at(std::uint64_t index) const;

  // Digits 0..n-1. prefix(n) is always a prefix of prefix(n+1).
  std::vector<Digit> prefix(std::uint64_t n) const;

  // Engaged for truncated streams only.
  std::optional<std::uint64_t> length() const;

  friend DigitStream rational_stream(const Int& numerator,
                                     const Int& denominator, int base);
  friend DigitStream patterned_stream(PatternMask mask, std::uint64_t seed,
                                      int base);
  friend DigitStream truncated_stream(DigitStream source,
                                      std::uint64_t length);

 private:
  struct RationalSpec {
    Int remainder;  // |numerator| mod denominator
    Int denominator;
  };
  struct PatternedSpec {
    PatternMask mask;
    std::uint64_t seed;
  };
  struct TruncatedSpec {
    std::shared_ptr<const DigitStream> source;
    std::uint64_t length;
  };

  DigitStream(std::variant<RationalSpec, PatternedSpec, TruncatedSpec> spec,
              int base)
      : spec_(std::move(spec)), base_(base) {}

  std::variant<RationalSpec, PatternedSpec, TruncatedSpec> spec_;
  int base_;
};

// Fractional-part digits of numerator/denominator by long division; the sign
// and integer part stay with the caller. Throws InvalidRational on a zero
// denominator.
DigitStream rational_stream(const Int& numerator, const Int& denominator,
                            int base);

// Position k emits cell (k mod period): fixed cells emit their digit, free
// cells a digit derived by stateless hashing of (seed, k).
DigitStream patterned_stream(PatternMask mask, std::uint64_t seed, int base);

// Hard cutoff: digit_at past `length` is an error, never a silent zero.
DigitStream truncated_stream(DigitStream source, std::uint64_t length);

// Finite digit vector replayed exactly, encoded as a truncated rational
// (digits as numerator over base^n).
DigitStream literal_stream(const std::vector<Digit>& digits, int base);

// ASCII digit string for prefix(n), optionally with a leading "0.".
std::string format_digits(const DigitStream& stream, std::uint64_t n,
                          bool leading_zero_dot = false);

// The seeded digit used for free mask cells; exposed for tests.
Digit free_cell_digit(std::uint64_t seed, std::uint64_t index, int base);

}  // namespace hsw
