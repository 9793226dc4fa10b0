#pragma once

#include <iosfwd>
#include <string>

#include "hsw/sat.hpp"

namespace hsw {

// Standard DIMACS CNF: 'c' comment lines, a 'p cnf <vars> <clauses>' header,
// then zero-terminated clauses. Throws ParseError on malformed input.
CNF parse_dimacs(std::istream& in);
CNF parse_dimacs_file(const std::string& path);

}  // namespace hsw
