#include "hsw/digit_stream.hpp"

#include <utility>

#include "hsw/errors.hpp"

namespace hsw {

namespace {

void check_base(int base) {
  if (base != 2 && base != 10) {
    throw DomainError("radix must be 2 or 10");
  }
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Digit free_cell_digit(std::uint64_t seed, std::uint64_t index, int base) {
  return static_cast<Digit>(mix64(seed ^ mix64(index)) %
                            static_cast<std::uint64_t>(base));
}

PatternMask::PatternMask(std::vector<MaskCell> cells)
    : cells_(std::move(cells)) {
  if (cells_.empty()) {
    throw InvalidMask("mask must have at least one cell");
  }
  for (const auto& c : cells_) {
    if (c.free) {
      ++free_count_;
    } else if (c.digit < 0 || c.digit > 9) {
      throw InvalidMask("fixed cell digit out of range");
    }
  }
}

PatternMask PatternMask::parse(const std::string& text) {
  std::vector<MaskCell> cells;
  cells.reserve(text.size());
  for (char ch : text) {
    if (ch == 'x') {
      cells.push_back(MaskCell{true, 0});
    } else if (ch >= '0' && ch <= '9') {
      cells.push_back(MaskCell{false, ch - '0'});
    } else {
      throw InvalidMask(std::string("bad mask character '") + ch + "'");
    }
  }
  return PatternMask(std::move(cells));
}

std::string PatternMask::str() const {
  std::string out;
  out.reserve(cells_.size());
  for (const auto& c : cells_) {
    out.push_back(c.free ? 'x' : static_cast<char>('0' + c.digit));
  }
  return out;
}

DigitStream rational_stream(const Int& numerator, const Int& denominator,
                            int base) {
  check_base(base);
  if (denominator <= 0) {
    throw InvalidRational("denominator must be positive");
  }
  Int rem;
  mpz_mod(rem.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  // mpz_mod is non-negative, so the sign is dropped here as documented.
  return DigitStream(DigitStream::RationalSpec{rem, denominator}, base);
}

DigitStream patterned_stream(PatternMask mask, std::uint64_t seed, int base) {
  check_base(base);
  for (const auto& c : mask.cells()) {
    if (!c.free && c.digit >= base) {
      throw InvalidMask("fixed cell digit exceeds radix");
    }
  }
  return DigitStream(DigitStream::PatternedSpec{std::move(mask), seed}, base);
}

DigitStream truncated_stream(DigitStream source, std::uint64_t length) {
  if (auto inner = source.length(); inner && length > *inner) {
    throw DomainError("truncation longer than source");
  }
  const int base = source.base();
  auto shared = std::make_shared<const DigitStream>(std::move(source));
  return DigitStream(DigitStream::TruncatedSpec{std::move(shared), length},
                     base);
}

DigitStream literal_stream(const std::vector<Digit>& digits, int base) {
  check_base(base);
  Int num = 0;
  for (Digit d : digits) {
    if (d < 0 || d >= base) {
      throw DomainError("literal digit out of range for radix");
    }
    num = num * base + d;
  }
  Int den = int_pow(Int(base), digits.size());
  return truncated_stream(rational_stream(num, den, base), digits.size());
}

DigitStream::Kind DigitStream::kind() const {
  if (std::holds_alternative<RationalSpec>(spec_)) return Kind::Rational;
  if (std::holds_alternative<PatternedSpec>(spec_)) return Kind::Patterned;
  return Kind::Truncated;
}

std::optional<std::uint64_t> DigitStream::length() const {
  if (const auto* t = std::get_if<TruncatedSpec>(&spec_)) {
    return t->length;
  }
  return std::nullopt;
}

Digit DigitStream::digit_at(std::uint64_t index) const {
  if (const auto* r = std::get_if<RationalSpec>(&spec_)) {
    // remainder * base^index mod denominator, then one division step.
    Int b(base_);
    Int exp(static_cast<unsigned long>(index));
    Int scaled;
    mpz_powm(scaled.get_mpz_t(), b.get_mpz_t(), exp.get_mpz_t(),
             r->denominator.get_mpz_t());
    scaled *= r->remainder;
    scaled %= r->denominator;
    Int digit = (scaled * base_) / r->denominator;
    return static_cast<Digit>(digit.get_ui());
  }
  if (const auto* p = std::get_if<PatternedSpec>(&spec_)) {
    const MaskCell& c = p->mask.cell(static_cast<std::size_t>(
        index % static_cast<std::uint64_t>(p->mask.period())));
    return c.free ? free_cell_digit(p->seed, index, base_) : c.digit;
  }
  const auto& t = std::get<TruncatedSpec>(spec_);
  if (index >= t.length) {
    throw TruncationExceeded("digit index past truncation length");
  }
  return t.source->digit_at(index);
}

std::vector<Digit> DigitStream::prefix(std::uint64_t n) const {
  std::vector<Digit> out;
  out.reserve(static_cast<std::size_t>(n));
  if (const auto* r = std::get_if<RationalSpec>(&spec_)) {
    // Sequential long division; digit_at covers random access.
    Int rem = r->remainder;
    for (std::uint64_t k = 0; k < n; ++k) {
      rem *= base_;
      Int digit = rem / r->denominator;
      rem %= r->denominator;
      out.push_back(static_cast<Digit>(digit.get_ui()));
    }
    return out;
  }
  for (std::uint64_t k = 0; k < n; ++k) {
    out.push_back(digit_at(k));
  }
  return out;
}

std::string format_digits(const DigitStream& stream, std::uint64_t n,
                          bool leading_zero_dot) {
  std::string out = leading_zero_dot ? "0." : "";
  for (Digit d : stream.prefix(n)) {
    out.push_back(static_cast<char>('0' + d));
  }
  return out;
}

}  // namespace hsw
