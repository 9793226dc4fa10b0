#pragma once

// The sequence-guessing game: an ordered list of predictor programs, the
// self-consistent output matrix of their runs, the diagonal-flip adversary
// that defeats every program in the list, and the linear verifier /
// certificate-replay operations.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hsw/digit_stream.hpp"

namespace hsw {

// A deterministic guesser: sees the digits revealed so far, emits the next
// binary guess. Must be pure and total up to the configured game length.
class PredictorProgram {
 public:
  using GuessFn = std::function<Digit(std::span<const Digit>)>;

  PredictorProgram(int id, GuessFn next);

  int id() const { return id_; }
  Digit next_guess(std::span<const Digit> history) const;

  // Replays `digits` cyclically, ignoring history.
  static PredictorProgram fixed(int id, std::vector<Digit> digits);
  // Guesses `first`, then repeats the last revealed digit.
  static PredictorProgram copy_last(int id, Digit first);
  // Guesses `first`, then negates the last revealed digit.
  static PredictorProgram negate_last(int id, Digit first);
  // History-conditioned: hashes (seed, full history) into each guess.
  static PredictorProgram hashed(int id, std::uint64_t seed);

 private:
  int id_;
  GuessFn next_;
};

using ProgramList = std::vector<PredictorProgram>;

// JSON schema: [{"id":0,"kind":"fixed","digits":"0100"},
//               {"id":1,"kind":"copy_last","first":1},
//               {"id":2,"kind":"negate_last","first":0},
//               {"id":3,"kind":"hash","seed":7}]
ProgramList load_programs(std::istream& in);
ProgramList load_programs_file(const std::string& path);

// Row p is program p's self-consistent run: each guess is made from the
// program's own confirmed prefix.
struct OutputMatrix {
  std::vector<std::vector<Digit>> entries;
  std::size_t n = 0;
};

OutputMatrix output_matrix(const ProgramList& programs, std::size_t n);

// Digit k of the adversary differs from entry (k,k) by construction.
std::vector<Digit> diagonal_flip_digits(const OutputMatrix& matrix);
// Same digits packaged as a truncated length-n stream.
DigitStream diagonal_flip(const OutputMatrix& matrix);

struct GameResult {
  struct BobLoses {
    std::size_t failure_position;
  };
  struct Undefeated {
    std::size_t length_played;
  };
  std::variant<BobLoses, Undefeated> outcome;
  // (alice digit, bob guess) per move played.
  std::vector<std::pair<Digit, Digit>> transcript;

  bool bob_lost() const { return std::holds_alternative<BobLoses>(outcome); }
  std::size_t failure_position() const {
    return std::get<BobLoses>(outcome).failure_position;
  }
  std::size_t length_played() const {
    return std::get<Undefeated>(outcome).length_played;
  }
};

// Sequential play: at step k Bob guesses from the revealed prefix, then
// Alice's digit k is revealed; stops at the first mismatch or at max_len.
GameResult play_game(const DigitStream& alice, const PredictorProgram& bob,
                     std::size_t max_len);

struct VerifyStats {
  std::size_t comparisons = 0;
};

// Single left-to-right scan; nullopt on a full match, otherwise the first
// mismatching index. Throws LengthMismatch on unequal lengths.
std::optional<std::size_t> verify_guess(std::span<const Digit> alice_prefix,
                                        std::span<const Digit> bob_prefix,
                                        VerifyStats* stats = nullptr);

// Emits the first n certificate digits (the nondeterministic guess modeled
// as an oracle tape). Throws CertificateTooShort.
std::vector<Digit> certificate_replay(std::span<const Digit> certificate,
                                      std::size_t n);

}  // namespace hsw
