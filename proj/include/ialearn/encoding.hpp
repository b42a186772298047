// encoding.hpp -- propositional encoding of an incomplete observation
// table. A satisfying assignment picks a basis of prefix rows, transitions
// between them, and values for the incomplete cells; an unsatisfiable core
// names the closedness constraints to blame, which drive prefix refinement.
#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ialearn/sat.hpp"
#include "ialearn/table.hpp"

namespace ialearn {

/// Projection of a satisfying assignment: basis membership for every
/// prefix, transitions between basis rows, and values of the incomplete
/// cells reachable from basis rows.
struct PartialModel {
  std::vector<Word> basis;  // shortlex-sorted, epsilon first
  std::map<Word, bool> b;
  std::map<std::tuple<Word, Letter, Word>, bool> e;
  std::map<Word, bool> x;
};

/// A hypothesis DFA together with the basis words labelling its states
/// (state i accepts on basis[i], epsilon at index 0) and the model it was
/// read off from.
struct Hypothesis {
  Dfa dfa;
  std::vector<Word> basis;
  PartialModel model;
};

class TableEncoding {
 public:
  explicit TableEncoding(const ObservationTable& table);

  /// Emits variables and clauses for everything the table gained since the
  /// last call. Clause emission is incremental except for closedness,
  /// which is regenerated behind fresh selector literals when prefixes
  /// were added (stale generations are switched off permanently).
  void sync();

  /// True when satisfiable (then model() holds); false otherwise (then
  /// core_prefixes() holds).
  bool solve(sat::ShrinkMode shrink = sat::ShrinkMode::Off);

  const PartialModel& model() const { return model_; }
  /// One-letter extensions named by the failed closedness constraints,
  /// shortlex-sorted.
  const std::vector<Word>& core_prefixes() const { return core_prefixes_; }

  /// Hypothesis read off model(): states are the basis rows, epsilon
  /// initial. Verifies that the filled sub-table is sharp and closed and
  /// that the automaton agrees with the filled value of every basis word;
  /// throws std::logic_error when a check fails.
  Hypothesis hypothesis() const;

  /// The projected assignment as assumption literals, for checking that a
  /// refined encoding rules a previous model out. Partial maps are fine:
  /// only the entries present become assumptions.
  std::vector<sat::Lit> model_assumptions(const PartialModel& m) const;
  /// Solve with the current closedness selectors plus extra assumptions.
  /// On success the captured model reflects the assumptions.
  bool solve_with_extra(const std::vector<sat::Lit>& extra);

  std::string dimacs() const;

  /// Live constraint counts by family, keyed basis_eps, basis_pa,
  /// reach_pa, cong, det, clos, succ, sharp, ind.
  const std::map<std::string, long long>& constraint_counts() const {
    return counts_;
  }

  long long solve_calls() const { return solver_.solve_calls; }

 private:
  struct Nu {  // three-valued cell as either a constant or a literal
    bool constant;
    bool value;
    sat::Lit lit;
  };
  Nu nu(const Word& w);
  /// Reads the solver assignment into model_. When sharpen is set, basis
  /// words with identical filled rows are merged (largest into smallest)
  /// so the projected sub-table is always sharp; assumption-driven solves
  /// skip this to reflect the caller's assignment verbatim. Returns false
  /// when no merge applies; then blocking clauses were added and the
  /// caller must re-solve.
  bool capture_model(bool sharpen);
  /// Requires the filled rows of two prefixes to differ whenever both are
  /// in the basis. Returns false if the pair was already constrained.
  bool block_equal_rows(const Word& u, const Word& v);
  int bvar(const Word& p) const { return bvar_.at(p); }
  int evar(const Word& p, Letter a, const Word& q) const {
    return evar_.at({p, a, q});
  }
  void emit_cong(sat::Lit e, const Nu& left, const Nu& right);
  void regenerate_closedness();
  std::vector<sat::Lit> selector_assumptions() const;

  const ObservationTable& table_;
  sat::Solver solver_;
  std::map<Word, int> bvar_;
  std::map<std::tuple<Word, Letter, Word>, int> evar_;
  std::map<Word, int> xvar_;
  std::map<std::pair<Word, Letter>, int> clos_sel_;  // current generation
  std::map<int, std::pair<Word, Letter>> sel_origin_;
  size_t synced_prefixes_ = 0;

  std::set<Word> basis_rules_done_;
  std::set<std::tuple<Word, Letter, Word, Word>> cong_done_;
  std::set<std::tuple<Word, Letter, Word, Word>> det_done_;
  std::set<std::pair<Word, Word>> sharp_done_;
  std::set<std::pair<Word, Word>> sharp_val_done_;
  std::set<std::pair<Word, Word>> ind_done_;

  std::map<std::string, long long> counts_;
  PartialModel model_;
  std::vector<Word> core_prefixes_;
};

}  // namespace ialearn
