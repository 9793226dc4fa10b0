#include "hsw/diagonal_game.hpp"

#include <fstream>
#include <json.hpp>
#include <utility>

#include "hsw/errors.hpp"

namespace hsw {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Digit checked_binary(Digit d, const char* who) {
  if (d != 0 && d != 1) {
    throw DomainError(std::string(who) + " produced a non-binary digit");
  }
  return d;
}

}  // namespace

PredictorProgram::PredictorProgram(int id, GuessFn next)
    : id_(id), next_(std::move(next)) {}

Digit PredictorProgram::next_guess(std::span<const Digit> history) const {
  return checked_binary(next_(history), "predictor program");
}

PredictorProgram PredictorProgram::fixed(int id, std::vector<Digit> digits) {
  if (digits.empty()) {
    throw DomainError("fixed program needs at least one digit");
  }
  for (Digit d : digits) checked_binary(d, "fixed program");
  return PredictorProgram(
      id, [digits = std::move(digits)](std::span<const Digit> history) {
        return digits[history.size() % digits.size()];
      });
}

PredictorProgram PredictorProgram::copy_last(int id, Digit first) {
  checked_binary(first, "copy_last program");
  return PredictorProgram(id, [first](std::span<const Digit> history) {
    return history.empty() ? first : history.back();
  });
}

PredictorProgram PredictorProgram::negate_last(int id, Digit first) {
  checked_binary(first, "negate_last program");
  return PredictorProgram(id, [first](std::span<const Digit> history) {
    return history.empty() ? first : 1 - history.back();
  });
}

PredictorProgram PredictorProgram::hashed(int id, std::uint64_t seed) {
  return PredictorProgram(id, [seed](std::span<const Digit> history) {
    std::uint64_t h = mix64(seed);
    for (Digit d : history) {
      h = mix64(h ^ static_cast<std::uint64_t>(d + 1));
    }
    return static_cast<Digit>(h & 1);
  });
}

ProgramList load_programs(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad program JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw ParseError("program file must be a JSON array");
  }
  ProgramList out;
  out.reserve(doc.size());
  try {
    for (const auto& item : doc) {
      const int id = item.at("id").get<int>();
      const std::string kind = item.at("kind").get<std::string>();
      if (kind == "fixed") {
        const std::string digits = item.at("digits").get<std::string>();
        std::vector<Digit> ds;
        for (char ch : digits) {
          if (ch != '0' && ch != '1') {
            throw ParseError("fixed program digits must be 0/1");
          }
          ds.push_back(ch - '0');
        }
        out.push_back(PredictorProgram::fixed(id, std::move(ds)));
      } else if (kind == "copy_last") {
        out.push_back(
            PredictorProgram::copy_last(id, item.at("first").get<int>()));
      } else if (kind == "negate_last") {
        out.push_back(
            PredictorProgram::negate_last(id, item.at("first").get<int>()));
      } else if (kind == "hash") {
        out.push_back(PredictorProgram::hashed(
            id, item.at("seed").get<std::uint64_t>()));
      } else {
        throw ParseError("unknown program kind '" + kind + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad program entry: ") + e.what());
  }
  return out;
}

ProgramList load_programs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open program file '" + path + "'");
  }
  return load_programs(in);
}

OutputMatrix output_matrix(const ProgramList& programs, std::size_t n) {
  if (programs.size() < n) {
    throw DomainError("program list shorter than requested matrix size");
  }
  OutputMatrix m;
  m.n = n;
  m.entries.reserve(n);
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<Digit> row;
    row.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
      row.push_back(programs[p].next_guess(row));
    }
    m.entries.push_back(std::move(row));
  }
  return m;
}

std::vector<Digit> diagonal_flip_digits(const OutputMatrix& matrix) {
  std::vector<Digit> out;
  out.reserve(matrix.n);
  for (std::size_t k = 0; k < matrix.n; ++k) {
    out.push_back(1 - matrix.entries[k][k]);
  }
  return out;
}

DigitStream diagonal_flip(const OutputMatrix& matrix) {
  return literal_stream(diagonal_flip_digits(matrix), 2);
}

GameResult play_game(const DigitStream& alice, const PredictorProgram& bob,
                     std::size_t max_len) {
  if (max_len < 1) {
    throw DomainError("game length must be at least 1");
  }
  GameResult result;
  std::vector<Digit> history;
  history.reserve(max_len);
  for (std::size_t k = 0; k < max_len; ++k) {
    const Digit guess = bob.next_guess(history);
    const Digit revealed = checked_binary(alice.digit_at(k), "alice source");
    result.transcript.emplace_back(revealed, guess);
    if (guess != revealed) {
      result.outcome = GameResult::BobLoses{k};
      return result;
    }
    history.push_back(revealed);
  }
  result.outcome = GameResult::Undefeated{max_len};
  return result;
}

std::optional<std::size_t> verify_guess(std::span<const Digit> alice_prefix,
                                        std::span<const Digit> bob_prefix,
                                        VerifyStats* stats) {
  if (alice_prefix.size() != bob_prefix.size()) {
    throw LengthMismatch("verify needs equal-length prefixes");
  }
  for (std::size_t k = 0; k < alice_prefix.size(); ++k) {
    if (stats) ++stats->comparisons;
    if (alice_prefix[k] != bob_prefix[k]) {
      return k;
    }
  }
  return std::nullopt;
}

std::vector<Digit> certificate_replay(std::span<const Digit> certificate,
                                      std::size_t n) {
  if (certificate.size() < n) {
    throw CertificateTooShort("certificate shorter than requested length");
  }
  return std::vector<Digit>(certificate.begin(),
                            certificate.begin() + static_cast<std::ptrdiff_t>(n));
}

}  // namespace hsw
