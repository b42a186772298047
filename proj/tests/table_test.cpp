#include <doctest.h>

#include "fixtures.hpp"
#include "ialearn/table.hpp"
#include "oracles.hpp"

using namespace ialearn;
using oracle::wd;

namespace {

const Alphabet kOX({"o", "x"});

// reference three-valued status from the closure oracles
Status oracle_status(const std::string& w) {
  std::set<std::string> init, bad;
  for (const std::string& u : oracle::all_strings("ox", w.size())) {
    if (oracle::in_s0(u)) init.insert(u);
    if (oracle::in_sb(u)) bad.insert(u);
  }
  if (oracle::closure(init, oracle::equidist_forward).count(w))
    return Status::Yes;
  if (oracle::closure(bad, oracle::equidist_backward).count(w))
    return Status::No;
  return Status::Blank;
}

}  // namespace

TEST_CASE("a fresh table holds one all-blank column") {
  RmcTeacher teacher(fixtures::equidist());
  ObservationTable t(teacher);
  CHECK(t.prefixes() == std::vector<Word>{Word::epsilon()});
  CHECK(t.suffixes() == std::vector<Word>{Word::epsilon()});
  for (const std::string& w : {"", "o", "x"}) {
    CHECK(oracle_status(w) == Status::Blank);
    CHECK(t.cell(wd(kOX, w)) == Status::Blank);
  }
  CHECK(t.incomplete().size() == 3);
}

TEST_CASE("extension fills new cells and keeps prefix closure") {
  RmcTeacher teacher(fixtures::equidist());
  ObservationTable t(teacher);
  CHECK(t.add_suffixes({wd(kOX, "x"), wd(kOX, "ox")}) == 2);
  CHECK(t.add_prefixes({wd(kOX, "o"), wd(kOX, "x")}) == 2);

  CHECK(t.cell(wd(kOX, "x").concat(wd(kOX, "x"))) == Status::Yes);
  CHECK(t.cell(wd(kOX, "x").concat(wd(kOX, "ox"))) == Status::No);

  CHECK(t.add_suffixes({Word::epsilon()}) == 0);
  CHECK(t.add_prefixes({wd(kOX, "o")}) == 0);

  // closure applied to deep additions
  CHECK(t.add_prefixes({wd(kOX, "oox")}) == 2);
  CHECK(t.has_prefix(wd(kOX, "oo")));
  CHECK(std::is_sorted(t.prefixes().begin(), t.prefixes().end()));

  // cached and stable
  const Status before = t.cell(wd(kOX, "xx"));
  CHECK(t.cell(wd(kOX, "xx")) == before);
  CHECK_THROWS_AS(t.cell(wd(kOX, "xxxxxxx")), LoadError);
}

TEST_CASE("every cell word is queried exactly once") {
  RmcTeacher teacher(fixtures::equidist());
  ObservationTable t(teacher);
  t.add_suffixes({wd(kOX, "x"), wd(kOX, "ox")});
  t.add_prefixes({wd(kOX, "o"), wd(kOX, "x")});
  t.add_suffixes({wd(kOX, "oox")});
  std::set<Word> cells;
  for (const Word& q : t.rows())
    for (const Word& s : t.suffixes()) cells.insert(q.concat(s));
  CHECK(teacher.stats().mem_queries == static_cast<long long>(cells.size()));
  for (const Word& w : cells)
    CHECK(t.cell(w) == oracle_status(oracle::str(kOX, w)));
}

TEST_CASE("inductive pairs live inside the incomplete set and re-certify") {
  RmcTeacher teacher(fixtures::equidist());
  ObservationTable t(teacher);
  t.add_suffixes({wd(kOX, "x"), wd(kOX, "ox")});
  t.add_prefixes({wd(kOX, "o"), wd(kOX, "x")});

  CHECK_FALSE(t.inductive_pairs().empty());
  for (const auto& [w1, w2] : t.inductive_pairs()) {
    CHECK(t.incomplete().count(w1) == 1);
    CHECK(t.incomplete().count(w2) == 1);
    const std::string s1 = oracle::str(kOX, w1), s2 = oracle::str(kOX, w2);
    CHECK(oracle::closure({s1}, oracle::equidist_forward).count(s2) == 1);
  }

  // the oracle recomputation finds exactly the recorded pairs
  std::set<std::pair<Word, Word>> expect;
  for (const Word& u : t.incomplete())
    for (const Word& v : t.incomplete()) {
      const std::string su = oracle::str(kOX, u), sv = oracle::str(kOX, v);
      if (oracle::closure({su}, oracle::equidist_forward).count(sv))
        expect.emplace(u, v);
    }
  CHECK(t.inductive_pairs() == expect);
}

TEST_CASE("debug dump shows rows, columns and blanks") {
  RmcTeacher teacher(fixtures::equidist());
  ObservationTable t(teacher);
  t.add_suffixes({wd(kOX, "x")});
  const std::string dump = t.format();
  CHECK(dump.find('?') != std::string::npos);
  CHECK(dump.find("<eps>") != std::string::npos);
}
