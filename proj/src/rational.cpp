#include "hsw/rational.hpp"

#include <cctype>

#include "hsw/errors.hpp"

namespace hsw {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) {
    throw InvalidRational("zero denominator");
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };

  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text)) {
      throw ParseError("not a rational: '" + text + "'");
    }
    return Rat(Int(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) {
    throw ParseError("not a rational: '" + text + "'");
  }
  return make_rat(Int(num), Int(den));
}

std::string rat_str(const Rat& value) {
  return value.get_str();
}

std::string int_str(const Int& value) {
  return value.get_str();
}

Int int_pow(const Int& base, unsigned long exp) {
  Int result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
  return result;
}

Int int_sqrt(const Int& value) {
  Int result;
  mpz_sqrt(result.get_mpz_t(), value.get_mpz_t());
  return result;
}

}  // namespace hsw
