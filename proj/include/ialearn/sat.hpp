// sat.hpp -- incremental CDCL SAT solver with assumption literals and
// failed-assumption cores. Deterministic: branching picks the lowest-index
// unassigned variable, false first, so equal inputs give equal models.
#pragma once

#include <string>
#include <vector>

namespace ialearn::sat {

struct Lit {
  int code = -1;  // 2*var, +1 when negated

  static Lit pos(int v) { return {v << 1}; }
  static Lit neg(int v) { return {(v << 1) | 1}; }
  int var() const { return code >> 1; }
  bool negated() const { return code & 1; }
  Lit operator~() const { return {code ^ 1}; }
  auto operator<=>(const Lit&) const = default;
};

enum class ShrinkMode { Off, OnePass, Fixpoint };

class Solver {
 public:
  int new_var();
  int var_count() const { return static_cast<int>(assigns_.size()); }

  /// False once the clause set is unsatisfiable regardless of assumptions.
  bool add_clause(std::vector<Lit> lits);

  bool solve(const std::vector<Lit>& assumptions = {});

  /// After a satisfiable solve: the value of every variable.
  bool model_value(int var) const { return model_.at(var); }
  /// After an unsatisfiable solve: a subset of the assumptions that is
  /// already unsatisfiable (empty if the clauses alone are).
  const std::vector<Lit>& core() const { return core_; }

  std::string dimacs(const std::vector<Lit>& assumptions = {}) const;

  long long solve_calls = 0;

 private:
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }
  int lit_value(Lit p) const {
    int8_t v = assigns_[p.var()];
    return p.negated() ? -v : v;
  }
  void enqueue(Lit p, int reason);
  int propagate();  // conflicting clause index, or -1
  void attach(int ci);
  void cancel_until(int level);
  std::pair<std::vector<Lit>, int> analyze(int confl);
  std::vector<Lit> analyze_final(Lit failed);

  bool ok_ = true;
  std::vector<int8_t> assigns_;  // +1 true, -1 false, 0 unassigned
  std::vector<int> level_;
  std::vector<int> reason_;  // clause index, -1 for decisions / level 0 facts
  std::vector<char> seen_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  size_t qhead_ = 0;
  std::vector<std::vector<Lit>> clauses_;    // first two literals are watched
  std::vector<std::vector<int>> watches_;    // lit code -> clause indices
  std::vector<std::vector<Lit>> originals_;  // as added, for dimacs()
  std::vector<bool> model_;
  std::vector<Lit> core_;
};

/// Deletion-based reduction of an unsatisfiable assumption set. OnePass
/// tries dropping each literal once; Fixpoint repeats until stable.
std::vector<Lit> shrink_core(Solver& solver, std::vector<Lit> core,
                             ShrinkMode mode);

}  // namespace ialearn::sat
