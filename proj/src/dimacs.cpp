#include "hsw/dimacs.hpp"

#include <fstream>
#include <sstream>

#include "hsw/errors.hpp"

namespace hsw {

CNF parse_dimacs(std::istream& in) {
  std::string line;
  int num_vars = -1;
  long num_clauses = -1;

  // Header, skipping comments.
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream hs(line);
    std::string p, fmt;
    if (!(hs >> p >> fmt >> num_vars >> num_clauses) || p != "p" ||
        fmt != "cnf" || num_vars < 0 || num_clauses < 0) {
      throw ParseError("bad DIMACS header: '" + line + "'");
    }
    break;
  }
  if (num_vars < 0) {
    throw ParseError("missing DIMACS header");
  }

  CNF cnf;
  cnf.num_vars = num_vars;
  Clause current;
  std::string token;
  while (in >> token) {
    if (token == "c") {
      std::getline(in, line);
      continue;
    }
    long value = 0;
    try {
      std::size_t used = 0;
      value = std::stol(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ParseError("bad DIMACS token '" + token + "'");
    }
    if (value == 0) {
      cnf.clauses.push_back(current);
      current.clear();
      continue;
    }
    const long var = value > 0 ? value : -value;
    if (var > num_vars) {
      throw ParseError("literal exceeds declared variable count");
    }
    current.push_back(Lit{static_cast<int>(var - 1), value < 0});
  }
  if (!current.empty()) {
    throw ParseError("unterminated clause at end of input");
  }
  if (static_cast<long>(cnf.clauses.size()) != num_clauses) {
    throw ParseError("clause count does not match header");
  }
  return cnf;
}

CNF parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open DIMACS file '" + path + "'");
  }
  return parse_dimacs(in);
}

}  // namespace hsw
