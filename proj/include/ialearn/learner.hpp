// learner.hpp -- the main learning loop and the counterexample analyses
// that pick which suffixes refine the table.
#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "ialearn/encoding.hpp"

namespace ialearn {

/// How a breaking interval / rectangle is selected. Small picks the fewest
/// suffixes, Short the shortest ones, Off the whole counterexample.
enum class RsStrategy { Off, Small, Short };

struct LearnerConfig {
  RsStrategy rs_strategy = RsStrategy::Small;
  sat::ShrinkMode core_shrink = sat::ShrinkMode::Off;
  long long max_refinements = 0;  // 0: unlimited
  double timeout_secs = 0;        // 0: none
  /// After each suffix refinement, re-solve with the previous model
  /// asserted and require unsatisfiability (test harness mode).
  bool check_refinements = false;
  std::ostream* log = nullptr;         // one line per loop event
  std::string dump_cnf_path;           // rewritten before every solve
  std::string dump_table_path;
};

struct LearnStats {
  long long mem_queries = 0;
  long long mem_hint_queries = 0;
  long long val_queries = 0;
  long long sat_calls = 0;
  long long unsat_cores = 0;
  long long prefix_count = 0;
  long long suffix_count = 0;
  long long hypothesis_states = 0;
  double wall_ms = 0;
};

struct LearnOutcome {
  enum class Kind { Success, Timeout, Unsafe, ContractViolation };
  Kind kind = Kind::Timeout;
  std::optional<Dfa> automaton;     // on Success, independently re-validated
  std::optional<Word> unsafe_witness;
  std::string detail;
  LearnStats stats;
};

LearnOutcome run(Teacher& teacher, const LearnerConfig& config = {});

// Pieces of the loop, exposed so tests can drive them directly.

/// The partial computation of w at cut i: the access word of the state
/// reached on the first i letters, then the rest of w verbatim.
Word partial_computation(const Hypothesis& h, const Word& w, int i);

/// Three-valued evaluation of the cut: teacher status first, then the
/// model's filled cell value, else Blank.
Status agree_simple(Teacher& teacher, const Hypothesis& h, const Word& w,
                    int i);

/// Smallest-index pair (i, j), i < j, with decisive differing values,
/// selected per strategy. Endpoints of `values` must be decisive and
/// differ (throws std::logic_error otherwise).
std::pair<int, int> find_breaking_interval(const std::vector<Status>& values,
                                           RsStrategy strategy);

/// Suffixes w[i+1:], ..., w[j:] in that order.
std::vector<Word> interval_suffixes(const Word& w, int i, int j);

/// Whether the cut pair (i over w1, j over w2) is certifiably an inductive
/// pair: decisive statuses by implication, else a teacher hint through the
/// undecided side, else known values (status or model) by implication,
/// else Blank.
Status agree_inductive(Teacher& teacher, const Hypothesis& h, const Word& w1,
                       const Word& w2, int i, int j);

/// grid[i][j] indexed by cuts of w1 then w2; corners must be One at (0,0)
/// and Zero at the end (throws std::logic_error otherwise). Returns
/// (i, i', j, j') with componentwise-ordered decisive differing corners.
std::tuple<int, int, int, int> find_breaking_rectangle(
    const std::vector<std::vector<Status>>& grid, RsStrategy strategy);

/// Suffixes w1[i:], ..., w1[i':] and w2[j:], ..., w2[j':].
std::vector<Word> rectangle_suffixes(const Word& w1, const Word& w2, int i,
                                     int i2, int j, int j2);

}  // namespace ialearn
