// teachers.hpp -- oracles answering three-valued membership queries, hint
// queries for inductive pairs, and hypothesis validation.
#pragma once

#include <map>
#include <memory>
#include <set>
#include <utility>

#include "ialearn/automata.hpp"
#include "ialearn/transducer.hpp"

namespace ialearn {

/// Three-valued membership answer.
enum class Status { No = 0, Yes = 1, Blank = 2 };

inline bool decisive(Status s) { return s != Status::Blank; }

struct TeacherStats {
  long long mem_queries = 0;       // distinct words asked for a status
  long long mem_hint_queries = 0;  // hint calls
  long long val_queries = 0;       // validation calls
};

struct ValAnswer {
  enum class Kind { Valid, SimpleCex, InductiveCex };
  Kind kind = Kind::Valid;
  Word cex1;  // the counterexample, or the first word of an inductive pair
  Word cex2;  // the second word of an inductive pair
};

/// The checked system can reach a bad configuration: no invariant exists.
class UnsafeModelError : public std::runtime_error {
 public:
  UnsafeModelError(const Word& w, const std::string& what)
      : std::runtime_error(what), witness(w) {}
  Word witness;
};

class Teacher {
 public:
  virtual ~Teacher() = default;
  virtual const Alphabet& alphabet() const = 0;

  Status mem_status(const Word& w);
  /// Inductive pairs that touch w, relative to the incomplete words u
  /// (w itself included). Pairs (w1, w2) are certified one-way
  /// implications: any accepted language containing w1 must contain w2.
  std::set<std::pair<Word, Word>> mem_hints(const Word& w,
                                            const std::set<Word>& u);
  virtual ValAnswer validate(const Dfa& hypothesis) = 0;

  const TeacherStats& stats() const { return stats_; }

 protected:
  virtual Status mem_status_impl(const Word& w) = 0;
  virtual std::set<std::pair<Word, Word>> mem_hints_impl(
      const Word& w, const std::set<Word>& u) = 0;

  TeacherStats stats_;

 private:
  std::map<Word, Status> status_cache_;
};

/// Separation of two disjoint regular languages: Yes inside the first, No
/// inside the second, Blank in the gap. Never produces hints; a valid
/// hypothesis contains the first language and misses the second.
class SeparationTeacher : public Teacher {
 public:
  SeparationTeacher(Dfa within, Dfa apart);

  const Alphabet& alphabet() const override { return within_.alphabet; }
  ValAnswer validate(const Dfa& hypothesis) override;

 protected:
  Status mem_status_impl(const Word& w) override;
  std::set<std::pair<Word, Word>> mem_hints_impl(
      const Word& w, const std::set<Word>& u) override;

 private:
  Dfa within_;
  Dfa apart_;
};

/// How Blank memberships of the invariant-synthesis oracle are reported.
/// Exact keeps them Blank; AllNo / AllYes collapse them, which turns the
/// oracle into the classical over- or under-approximating baseline.
enum class RmcAnswerMode { Exact, AllNo, AllYes };

/// Oracle for safety of a regular transition system: a word is Yes when
/// reachable from the initial language, No when it can reach the bad
/// language, Blank otherwise. Hints certify one-step-closure implications.
/// A valid hypothesis is an inductive invariant separating the two.
class RmcTeacher : public Teacher {
 public:
  RmcTeacher(RmcModel model, RmcAnswerMode mode = RmcAnswerMode::Exact);

  const Alphabet& alphabet() const override { return model_.step.alphabet; }
  ValAnswer validate(const Dfa& hypothesis) override;

 protected:
  Status mem_status_impl(const Word& w) override;
  std::set<std::pair<Word, Word>> mem_hints_impl(
      const Word& w, const std::set<Word>& u) override;

 private:
  const std::set<Word>& reachable_of_length(int n);
  const std::set<Word>& coreachable_of_length(int n);
  const std::set<Word>& forward_closure(const Word& w);
  const std::set<Word>& backward_closure(const Word& w);

  RmcModel model_;
  RmcAnswerMode mode_;
  std::map<int, std::set<Word>> reach_by_len_;
  std::map<int, std::set<Word>> coreach_by_len_;
  std::map<Word, std::set<Word>> fwd_closure_;
  std::map<Word, std::set<Word>> bwd_closure_;
};

}  // namespace ialearn
