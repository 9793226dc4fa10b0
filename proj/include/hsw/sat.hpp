#pragma once

// Clause database and the two solvers the workbench compares: a polynomial
// 2-SAT decision via the implication graph, and a guarded exhaustive scan.
// Also the branching-possibility count (k-1)^n, the solution-space
// convexity per clause width, and the clause-to-game reduction.

#include <cstdint>
#include <optional>
#include <vector>

#include "hsw/digit_stream.hpp"
#include "hsw/hybrid_space.hpp"
#include "hsw/rational.hpp"

namespace hsw {

struct Lit {
  int var = 0;
  bool negated = false;

  friend bool operator==(const Lit&, const Lit&) = default;
};

inline Lit pos(int var) { return Lit{var, false}; }
inline Lit neg(int var) { return Lit{var, true}; }
inline Lit negate(Lit l) { return Lit{l.var, !l.negated}; }

using Clause = std::vector<Lit>;

struct CNF {
  int num_vars = 0;
  std::vector<Clause> clauses;

  // Largest clause width present; 0 for an empty clause list.
  int max_width() const;
  // Throws DomainError if a literal's variable index is out of range.
  void validate() const;
};

// Total valuation, indexed by variable.
using Assignment = std::vector<bool>;

struct SatResult {
  std::optional<Assignment> witness;

  bool satisfiable() const { return witness.has_value(); }
};

// True iff every clause has a true literal. Throws PartialAssignment when
// the valuation does not cover num_vars exactly.
bool check_assignment(const CNF& cnf, const Assignment& a);

// Implication-graph decision: each clause (a v b) contributes ~a => b and
// ~b => a; unsatisfiable iff some variable shares a strongly connected
// component with its negation. Throws WrongWidth past width 2.
SatResult solve_2sat(const CNF& cnf);

// Exhaustive scan in lexicographic assignment order (variable 0 most
// significant, false < true); first witness wins. jobs > 1 partitions the
// space; the lowest witness wins regardless of schedule. Throws TooLarge
// past 24 variables.
SatResult solve_bruteforce(const CNF& cnf, unsigned jobs = 1);

// (k-1)^n: the branching-possibility count, not the number of satisfying
// assignments. Throws InvalidWidth for k < 2.
Int possibility_count(int k, long n);

// Solution-space convexity by clause width: Infinite for width 2, 3 for
// width 3. Wider clauses are not settled values; they extrapolate through
// the mask rule (k-1 fixed cells, one free) only on request.
Convexity clause_convexity(int k, bool extrapolate = false);

// One game position per clause. The clause, normalized to a => b v c with
// the first literal negated as antecedent, leaves a binary choice of
// designated satisfier between b and c.
struct GamePosition {
  Lit antecedent;
  Lit option0;
  Lit option1;
};

class SatGameInstance {
 public:
  SatGameInstance(CNF original, std::vector<GamePosition> positions);

  std::size_t length() const { return positions_.size(); }
  const std::vector<GamePosition>& positions() const { return positions_; }
  const CNF& original() const { return original_; }

  // The width-2 residue of a guess string: position t keeps its first
  // literal and the chosen satisfier.
  CNF induced_two_cnf(const std::vector<Digit>& guess) const;

  // A consistent decoding is a satisfying assignment of the induced 2-CNF;
  // any such assignment satisfies the original formula.
  std::optional<Assignment> decode(const std::vector<Digit>& guess) const;
  bool check(const std::vector<Digit>& guess) const;

  // Scans all 2^length guess strings in lexicographic order. The original
  // formula is satisfiable iff some guess decodes.
  std::optional<std::pair<std::vector<Digit>, Assignment>> solve_by_guessing()
      const;

 private:
  CNF original_;
  std::vector<GamePosition> positions_;
};

// Clauses must have width 1..3; width-1/2 clauses are padded by repeating
// their last literal. Throws WrongWidth for empty or wider clauses.
SatGameInstance reduce_3sat_to_game(const CNF& cnf);

}  // namespace hsw
