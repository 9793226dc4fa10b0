#include "hsw/sat.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <utility>

#include "hsw/errors.hpp"

namespace hsw {

int CNF::max_width() const {
  std::size_t w = 0;
  for (const auto& c : clauses) w = std::max(w, c.size());
  return static_cast<int>(w);
}

void CNF::validate() const {
  for (const auto& clause : clauses) {
    for (const Lit& l : clause) {
      if (l.var < 0 || l.var >= num_vars) {
        throw DomainError("literal variable out of range");
      }
    }
  }
}

bool check_assignment(const CNF& cnf, const Assignment& a) {
  if (a.size() != static_cast<std::size_t>(cnf.num_vars)) {
    throw PartialAssignment("assignment must cover every variable");
  }
  cnf.validate();
  for (const auto& clause : cnf.clauses) {
    bool sat = false;
    for (const Lit& l : clause) {
      if (a[static_cast<std::size_t>(l.var)] != l.negated) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

namespace {

// Literal node encoding for the implication graph.
inline int node_of(const Lit& l) { return 2 * l.var + (l.negated ? 1 : 0); }
inline int node_negation(int node) { return node ^ 1; }

// Iterative Tarjan; component ids increase in order of completion, so a
// smaller id means closer to the sinks of the condensation.
class TarjanScc {
 public:
  explicit TarjanScc(const std::vector<std::vector<int>>& adj)
      : adj_(adj),
        index_(adj.size(), -1),
        low_(adj.size(), 0),
        on_stack_(adj.size(), false),
        comp_(adj.size(), -1) {}

  std::vector<int> run() {
    for (int v = 0; v < static_cast<int>(adj_.size()); ++v) {
      if (index_[v] < 0) strongconnect(v);
    }
    return comp_;
  }

 private:
  struct Frame {
    int node;
    std::size_t next_edge;
  };

  void strongconnect(int root) {
    std::vector<Frame> call_stack{{root, 0}};
    while (!call_stack.empty()) {
      Frame& f = call_stack.back();
      int v = f.node;
      if (f.next_edge == 0) {
        index_[v] = low_[v] = counter_++;
        stack_.push_back(v);
        on_stack_[v] = true;
      }
      bool descended = false;
      while (f.next_edge < adj_[v].size()) {
        int w = adj_[v][f.next_edge++];
        if (index_[w] < 0) {
          call_stack.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack_[w]) {
          low_[v] = std::min(low_[v], index_[w]);
        }
      }
      if (descended) continue;
      if (low_[v] == index_[v]) {
        while (true) {
          int w = stack_.back();
          stack_.pop_back();
          on_stack_[w] = false;
          comp_[w] = components_;
          if (w == v) break;
        }
        ++components_;
      }
      call_stack.pop_back();
      if (!call_stack.empty()) {
        int parent = call_stack.back().node;
        low_[parent] = std::min(low_[parent], low_[v]);
      }
    }
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<int> index_, low_;
  std::vector<bool> on_stack_;
  std::vector<int> comp_;
  std::vector<int> stack_;
  int counter_ = 0;
  int components_ = 0;
};

}  // namespace

SatResult solve_2sat(const CNF& cnf) {
  cnf.validate();
  if (cnf.max_width() > 2) {
    throw WrongWidth("2-SAT solver needs clause width <= 2");
  }
  for (const auto& clause : cnf.clauses) {
    if (clause.empty()) return SatResult{std::nullopt};
  }

  std::vector<std::vector<int>> adj(2 * static_cast<std::size_t>(cnf.num_vars));
  for (const auto& clause : cnf.clauses) {
    const Lit a = clause.front();
    const Lit b = clause.back();  // == a for width-1 clauses
    adj[static_cast<std::size_t>(node_of(negate(a)))].push_back(node_of(b));
    adj[static_cast<std::size_t>(node_of(negate(b)))].push_back(node_of(a));
  }

  const std::vector<int> comp = TarjanScc(adj).run();
  Assignment values(static_cast<std::size_t>(cnf.num_vars));
  for (int v = 0; v < cnf.num_vars; ++v) {
    const int p = comp[static_cast<std::size_t>(2 * v)];
    const int n = comp[static_cast<std::size_t>(2 * v + 1)];
    if (p == n) return SatResult{std::nullopt};
    // Earlier-completed components sit later in topological order; pick the
    // literal whose component completes first.
    values[static_cast<std::size_t>(v)] = p < n;
  }
  return SatResult{std::move(values)};
}

namespace {

// Lexicographic order over assignment tuples: variable 0 is the most
// significant position, false < true.
Assignment assignment_from_index(std::uint64_t index, int num_vars) {
  Assignment a(static_cast<std::size_t>(num_vars));
  for (int v = 0; v < num_vars; ++v) {
    a[static_cast<std::size_t>(v)] =
        (index >> (num_vars - 1 - v)) & 1;
  }
  return a;
}

bool satisfies_index(const CNF& cnf, std::uint64_t index) {
  for (const auto& clause : cnf.clauses) {
    bool sat = false;
    for (const Lit& l : clause) {
      const bool value = (index >> (cnf.num_vars - 1 - l.var)) & 1;
      if (value != l.negated) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace

SatResult solve_bruteforce(const CNF& cnf, unsigned jobs) {
  cnf.validate();
  if (cnf.num_vars > 24) {
    throw TooLarge("brute force is guarded at 24 variables");
  }
  const std::uint64_t total = 1ULL << cnf.num_vars;

  if (jobs <= 1) {
    for (std::uint64_t index = 0; index < total; ++index) {
      if (satisfies_index(cnf, index)) {
        return SatResult{assignment_from_index(index, cnf.num_vars)};
      }
    }
    return SatResult{std::nullopt};
  }

  const std::uint64_t workers = std::min<std::uint64_t>(jobs, total);
  std::atomic<std::uint64_t> best(total);
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(total, begin + chunk);
      // A witness in an earlier chunk beats anything here.
      if (best.load() <= begin) return;
      for (std::uint64_t index = begin; index < end; ++index) {
        if (satisfies_index(cnf, index)) {
          std::uint64_t current = best.load();
          while (index < current &&
                 !best.compare_exchange_weak(current, index)) {
          }
          return;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  const std::uint64_t found = best.load();
  if (found == total) return SatResult{std::nullopt};
  return SatResult{assignment_from_index(found, cnf.num_vars)};
}

Int possibility_count(int k, long n) {
  if (k < 2) {
    throw InvalidWidth("possibility count needs clause width >= 2");
  }
  if (n < 0) {
    throw DomainError("clause count must be non-negative");
  }
  return int_pow(Int(k - 1), static_cast<unsigned long>(n));
}

Convexity clause_convexity(int k, bool extrapolate) {
  if (k < 2) {
    throw InvalidWidth("clause convexity needs width >= 2");
  }
  if (k == 2) return Convexity::infinite();
  if (k == 3) return Convexity::finite(Rat(3));
  if (!extrapolate) {
    throw UnspecifiedByPaper("convexity beyond width 3 needs the extrapolate flag");
  }
  // Mask rule: k-1 fixed cells, one free.
  std::vector<MaskCell> cells(static_cast<std::size_t>(k - 1),
                              MaskCell{false, 1});
  cells.push_back(MaskCell{true, 0});
  return pattern_convexity(PatternMask(std::move(cells)));
}

SatGameInstance::SatGameInstance(CNF original,
                                 std::vector<GamePosition> positions)
    : original_(std::move(original)), positions_(std::move(positions)) {}

CNF SatGameInstance::induced_two_cnf(const std::vector<Digit>& guess) const {
  if (guess.size() != positions_.size()) {
    throw DomainError("guess string length must equal the number of positions");
  }
  CNF two;
  two.num_vars = original_.num_vars;
  two.clauses.reserve(positions_.size());
  for (std::size_t t = 0; t < positions_.size(); ++t) {
    if (guess[t] != 0 && guess[t] != 1) {
      throw DomainError("guess digits must be binary");
    }
    const GamePosition& p = positions_[t];
    const Lit satisfier = guess[t] == 0 ? p.option0 : p.option1;
    // a => s restated as a disjunction: (~a v s), with ~a the original
    // first literal.
    two.clauses.push_back(Clause{negate(p.antecedent), satisfier});
  }
  return two;
}

std::optional<Assignment> SatGameInstance::decode(
    const std::vector<Digit>& guess) const {
  SatResult r = solve_2sat(induced_two_cnf(guess));
  if (!r.satisfiable()) return std::nullopt;
  // Every clause of the residue implies its original clause, so the witness
  // carries over.
  if (!check_assignment(original_, *r.witness)) {
    throw Error("induced witness does not satisfy the original formula");
  }
  return std::move(r.witness);
}

bool SatGameInstance::check(const std::vector<Digit>& guess) const {
  return decode(guess).has_value();
}

std::optional<std::pair<std::vector<Digit>, Assignment>>
SatGameInstance::solve_by_guessing() const {
  if (positions_.size() > 24) {
    throw TooLarge("guess enumeration is guarded at 24 positions");
  }
  const std::uint64_t total = 1ULL << positions_.size();
  for (std::uint64_t g = 0; g < total; ++g) {
    std::vector<Digit> guess(positions_.size());
    for (std::size_t t = 0; t < positions_.size(); ++t) {
      guess[t] = (g >> (positions_.size() - 1 - t)) & 1;
    }
    if (auto witness = decode(guess)) {
      return std::make_pair(std::move(guess), std::move(*witness));
    }
  }
  return std::nullopt;
}

SatGameInstance reduce_3sat_to_game(const CNF& cnf) {
  cnf.validate();
  std::vector<GamePosition> positions;
  positions.reserve(cnf.clauses.size());
  for (const auto& clause : cnf.clauses) {
    if (clause.empty() || clause.size() > 3) {
      throw WrongWidth("reduction needs clause width 1..3");
    }
    // Pad short clauses by repeating the last literal.
    const Lit l1 = clause[0];
    const Lit l2 = clause.size() > 1 ? clause[1] : clause[0];
    const Lit l3 = clause.size() > 2 ? clause[2] : l2;
    positions.push_back(GamePosition{negate(l1), l2, l3});
  }
  return SatGameInstance(cnf, std::move(positions));
}

}  // namespace hsw
