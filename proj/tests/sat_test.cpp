#include <doctest.h>

#include <random>
#include <sstream>

#include "ialearn/sat.hpp"
#include "oracles.hpp"

using namespace ialearn::sat;

namespace {

Lit lit_of(int dimacs) {
  const int v = std::abs(dimacs) - 1;
  return dimacs > 0 ? Lit::pos(v) : Lit::neg(v);
}

// feed DIMACS-style clauses
void add_all(Solver& s, int nvars, const std::vector<std::vector<int>>& cs) {
  while (s.var_count() < nvars) s.new_var();
  for (const auto& c : cs) {
    std::vector<Lit> lits;
    for (int l : c) lits.push_back(lit_of(l));
    s.add_clause(lits);
  }
}

}  // namespace

TEST_CASE("unit propagation fixes forced values") {
  Solver s;
  const int v1 = s.new_var(), v2 = s.new_var();
  s.add_clause({Lit::pos(v1), Lit::pos(v2)});
  s.add_clause({Lit::neg(v1)});
  REQUIRE(s.solve());
  CHECK(s.model_value(v2));
  CHECK_FALSE(s.model_value(v1));
}

TEST_CASE("contradictory units are unsatisfiable with an empty core") {
  Solver s;
  const int v1 = s.new_var();
  s.add_clause({Lit::pos(v1)});
  s.add_clause({Lit::neg(v1)});
  CHECK_FALSE(s.solve());
  CHECK(s.core().empty());
}

TEST_CASE("random 3-literal instances agree with a truth table") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> var(1, 12);
  std::uniform_int_distribution<int> coin(0, 1);
  int sat_seen = 0, unsat_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n_clauses = 10 + (trial % 10) * 10;  // 10..100
    std::vector<std::vector<int>> clauses;
    for (int i = 0; i < n_clauses; ++i) {
      std::vector<int> c;
      for (int j = 0; j < 3; ++j) {
        const int v = var(rng);
        c.push_back(coin(rng) ? v : -v);
      }
      clauses.push_back(c);
    }
    Solver s;
    add_all(s, 12, clauses);
    const bool got = s.solve();
    CHECK(got == oracle::tt_satisfiable(12, clauses));
    if (got) {
      ++sat_seen;
      unsigned long mask = 0;
      for (int v = 0; v < 12; ++v)
        if (s.model_value(v)) mask |= 1ul << v;
      CHECK(oracle::tt_assignment_satisfies(mask, clauses));
    } else {
      ++unsat_seen;
    }
  }
  CHECK(sat_seen > 0);
  CHECK(unsat_seen > 0);
}

TEST_CASE("failed assumptions yield a valid core") {
  Solver s;
  const int s1 = s.new_var(), s2 = s.new_var(), v1 = s.new_var();
  s.add_clause({Lit::neg(s1), Lit::pos(v1)});
  s.add_clause({Lit::neg(s2), Lit::neg(v1)});
  REQUIRE_FALSE(s.solve({Lit::pos(s1), Lit::pos(s2)}));
  auto core = shrink_core(s, s.core(), ShrinkMode::Fixpoint);
  std::sort(core.begin(), core.end());
  CHECK(core == std::vector<Lit>{Lit::pos(s1), Lit::pos(s2)});

  Solver t;
  const int t1 = t.new_var(), w1 = t.new_var();
  t.add_clause({Lit::neg(t1), Lit::pos(w1)});
  REQUIRE(t.solve({Lit::pos(t1)}));
  CHECK(t.model_value(w1));
}

TEST_CASE("cores of selector-guarded instances re-solve to unsat") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> var(1, 8);
  std::uniform_int_distribution<int> coin(0, 1);
  int unsat_seen = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Solver s;
    std::vector<Lit> selectors;
    for (int v = 0; v < 8; ++v) s.new_var();
    for (int i = 0; i < 24; ++i) {
      const int sel = s.new_var();
      selectors.push_back(Lit::pos(sel));
      std::vector<Lit> c{Lit::neg(sel)};
      for (int j = 0; j < 2; ++j) {
        const int v = var(rng) - 1;
        c.push_back(coin(rng) ? Lit::pos(v) : Lit::neg(v));
      }
      s.add_clause(c);
    }
    if (!s.solve(selectors)) {
      ++unsat_seen;
      const auto core = s.core();
      CHECK_FALSE(core.empty());
      for (Lit l : core)
        CHECK(std::find(selectors.begin(), selectors.end(), l) !=
              selectors.end());
      CHECK_FALSE(s.solve(core));  // the core alone is already unsat
    }
  }
  CHECK(unsat_seen > 0);
}

TEST_CASE("deletion-based core shrinking") {
  Solver s;
  const int s1 = s.new_var(), s2 = s.new_var(), s3 = s.new_var();
  const int v1 = s.new_var(), v2 = s.new_var();
  s.add_clause({Lit::neg(s1), Lit::pos(v1)});
  s.add_clause({Lit::neg(s2), Lit::neg(v1)});
  s.add_clause({Lit::neg(s3), Lit::pos(v2), Lit::neg(v2)});  // tautology guard
  std::vector<Lit> fat{Lit::pos(s1), Lit::pos(s2), Lit::pos(s3)};
  REQUIRE_FALSE(s.solve(fat));
  auto one = shrink_core(s, fat, ShrinkMode::OnePass);
  std::sort(one.begin(), one.end());
  CHECK(one == std::vector<Lit>{Lit::pos(s1), Lit::pos(s2)});
  // idempotence
  CHECK(shrink_core(s, one, ShrinkMode::OnePass) == one);
  CHECK(shrink_core(s, one, ShrinkMode::Fixpoint) == one);
  // singleton cores survive
  Solver t;
  const int t1 = t.new_var();
  t.add_clause({Lit::neg(t1)});
  REQUIRE_FALSE(t.solve({Lit::pos(t1)}));
  CHECK(shrink_core(t, t.core(), ShrinkMode::Fixpoint) ==
        std::vector<Lit>{Lit::pos(t1)});
}

TEST_CASE("identical input gives identical outcomes") {
  auto build = [] {
    Solver s;
    for (int v = 0; v < 6; ++v) s.new_var();
    s.add_clause({Lit::pos(0), Lit::pos(1)});
    s.add_clause({Lit::neg(1), Lit::pos(2)});
    s.add_clause({Lit::neg(2), Lit::neg(3), Lit::pos(4)});
    s.add_clause({Lit::pos(3), Lit::pos(5)});
    return s;
  };
  Solver a = build(), b = build();
  REQUIRE(a.solve());
  REQUIRE(b.solve());
  for (int v = 0; v < 6; ++v) CHECK(a.model_value(v) == b.model_value(v));
}

TEST_CASE("dimacs dump lists clauses and assumption units") {
  Solver s;
  const int v1 = s.new_var(), v2 = s.new_var();
  s.add_clause({Lit::pos(v1), Lit::neg(v2)});
  const std::string text = s.dimacs({Lit::pos(v2)});
  std::istringstream in(text);
  std::string p, cnf;
  int vars = 0, clauses = 0;
  in >> p >> cnf >> vars >> clauses;
  CHECK(p == "p");
  CHECK(cnf == "cnf");
  CHECK(vars == 2);
  CHECK(clauses == 2);
  CHECK(text.find("1 -2 0") != std::string::npos);
  CHECK(text.find("\n2 0") != std::string::npos);
}
