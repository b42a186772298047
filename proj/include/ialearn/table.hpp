// table.hpp -- the incomplete observation table: prefix rows, suffix
// columns, three-valued cells, and the inductive pairs collected for its
// incomplete entries.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ialearn/teachers.hpp"

namespace ialearn {

class ObservationTable {
 public:
  explicit ObservationTable(Teacher& teacher);

  /// Prefix rows, shortlex-sorted and prefix-closed (closure is applied to
  /// anything added). Starts as {epsilon}.
  const std::vector<Word>& prefixes() const { return prefixes_; }
  /// Suffix columns in insertion order. Starts as {epsilon}.
  const std::vector<Word>& suffixes() const { return suffixes_; }
  /// Row labels: prefixes and their one-letter extensions, shortlex-sorted.
  const std::vector<Word>& rows() const { return rows_; }

  bool has_prefix(const Word& p) const { return prefix_set_.count(p) > 0; }

  /// Either returns the number of words newly added (prefix closure
  /// included), then fills the fresh cells.
  int add_prefixes(const std::vector<Word>& ps);
  int add_suffixes(const std::vector<Word>& ss);

  /// Status of a filled cell word; throws for words outside the domain.
  Status cell(const Word& w) const;
  bool in_domain(const Word& w) const { return cells_.count(w) > 0; }

  /// Incomplete cell words, shortlex-sorted.
  const std::set<Word>& incomplete() const { return incomplete_; }
  /// All certified inductive pairs among the incomplete words.
  const std::set<std::pair<Word, Word>>& inductive_pairs() const {
    return inductive_pairs_;
  }

  Teacher& teacher() const { return teacher_; }

  std::string format() const;

 private:
  void rebuild_rows();
  void fill();

  Teacher& teacher_;
  std::vector<Word> prefixes_;
  std::set<Word> prefix_set_;
  std::vector<Word> suffixes_;
  std::set<Word> suffix_set_;
  std::vector<Word> rows_;
  std::map<Word, Status> cells_;
  std::set<Word> incomplete_;
  std::set<std::pair<Word, Word>> inductive_pairs_;
};

}  // namespace ialearn
