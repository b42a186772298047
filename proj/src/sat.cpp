#include "ialearn/sat.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace ialearn::sat {

int Solver::new_var() {
  const int v = var_count();
  assigns_.push_back(0);
  level_.push_back(0);
  reason_.push_back(-1);
  seen_.push_back(0);
  watches_.emplace_back();
  watches_.emplace_back();
  return v;
}

void Solver::enqueue(Lit p, int reason) {
  assert(lit_value(p) == 0);
  assigns_[p.var()] = p.negated() ? -1 : 1;
  level_[p.var()] = decision_level();
  reason_[p.var()] = reason;
  trail_.push_back(p);
}

void Solver::attach(int ci) {
  const auto& c = clauses_[ci];
  watches_[(~c[0]).code].push_back(ci);
  watches_[(~c[1]).code].push_back(ci);
}

bool Solver::add_clause(std::vector<Lit> lits) {
  originals_.push_back(lits);
  if (!ok_) return false;
  assert(decision_level() == 0);
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  std::vector<Lit> kept;
  for (size_t i = 0; i < lits.size(); ++i) {
    if (i + 1 < lits.size() && lits[i + 1] == ~lits[i]) return true;  // taut
    const int v = lit_value(lits[i]);
    if (v > 0) return true;  // satisfied at level 0
    if (v == 0) kept.push_back(lits[i]);
  }
  if (kept.empty()) {
    ok_ = false;
    return false;
  }
  if (kept.size() == 1) {
    enqueue(kept[0], -1);
    if (propagate() >= 0) ok_ = false;
    return ok_;
  }
  clauses_.push_back(std::move(kept));
  attach(static_cast<int>(clauses_.size()) - 1);
  return true;
}

int Solver::propagate() {
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];  // p is true; clauses watching ~p
    std::vector<int>& ws = watches_[p.code];
    size_t keep = 0;
    for (size_t i = 0; i < ws.size(); ++i) {
      const int ci = ws[i];
      std::vector<Lit>& c = clauses_[ci];
      // normalize: the falsified watch goes to slot 1
      if (c[0] == ~p) std::swap(c[0], c[1]);
      assert(c[1] == ~p);
      if (lit_value(c[0]) > 0) {
        ws[keep++] = ci;
        continue;
      }
      bool moved = false;
      for (size_t j = 2; j < c.size(); ++j) {
        if (lit_value(c[j]) >= 0) {
          std::swap(c[1], c[j]);
          watches_[(~c[1]).code].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[keep++] = ci;
      if (lit_value(c[0]) < 0) {
        // conflict: restore untouched watches and bail
        for (++i; i < ws.size(); ++i) ws[keep++] = ws[i];
        ws.resize(keep);
        qhead_ = trail_.size();
        return ci;
      }
      enqueue(c[0], ci);
    }
    ws.resize(keep);
  }
  return -1;
}

void Solver::cancel_until(int level) {
  if (decision_level() <= level) return;
  for (int i = static_cast<int>(trail_.size()) - 1; i >= trail_lim_[level];
       --i) {
    assigns_[trail_[i].var()] = 0;
    reason_[trail_[i].var()] = -1;
  }
  trail_.resize(trail_lim_[level]);
  trail_lim_.resize(level);
  qhead_ = trail_.size();
}

std::pair<std::vector<Lit>, int> Solver::analyze(int confl) {
  // first unique implication point
  std::vector<Lit> learnt{Lit{-1}};  // slot 0: the asserting literal
  int counter = 0;
  Lit p{-1};
  int idx = static_cast<int>(trail_.size()) - 1;
  do {
    const std::vector<Lit>& c = clauses_[confl];
    for (Lit q : c) {
      if (q == p) continue;
      const int v = q.var();
      if (!seen_[v] && level_[v] > 0) {
        seen_[v] = 1;
        if (level_[v] == decision_level())
          ++counter;
        else
          learnt.push_back(q);
      }
    }
    while (!seen_[trail_[idx].var()]) --idx;
    p = trail_[idx];
    confl = reason_[p.var()];
    seen_[p.var()] = 0;
    --counter;
    --idx;
  } while (counter > 0);
  learnt[0] = ~p;
  for (size_t i = 1; i < learnt.size(); ++i) seen_[learnt[i].var()] = 0;
  int bt = 0;
  if (learnt.size() > 1) {
    size_t best = 1;
    for (size_t i = 2; i < learnt.size(); ++i)
      if (level_[learnt[i].var()] > level_[learnt[best].var()]) best = i;
    std::swap(learnt[1], learnt[best]);
    bt = level_[learnt[1].var()];
  }
  return {std::move(learnt), bt};
}

std::vector<Lit> Solver::analyze_final(Lit failed) {
  std::vector<Lit> out{failed};
  if (decision_level() == 0) return out;
  seen_[failed.var()] = 1;
  for (int i = static_cast<int>(trail_.size()) - 1; i >= trail_lim_[0]; --i) {
    const int v = trail_[i].var();
    if (!seen_[v]) continue;
    if (reason_[v] == -1) {
      out.push_back(trail_[i]);  // an assumption decision
    } else {
      for (Lit q : clauses_[reason_[v]])
        if (q.var() != v && level_[q.var()] > 0) seen_[q.var()] = 1;
    }
    seen_[v] = 0;
  }
  seen_[failed.var()] = 0;
  return out;
}

bool Solver::solve(const std::vector<Lit>& assumptions) {
  ++solve_calls;
  core_.clear();
  if (!ok_) return false;
  cancel_until(0);
  if (propagate() >= 0) {
    ok_ = false;
    return false;
  }
  for (;;) {
    const int confl = propagate();
    if (confl >= 0) {
      if (decision_level() == 0) {
        ok_ = false;
        return false;
      }
      auto [learnt, bt] = analyze(confl);
      cancel_until(bt);
      if (learnt.size() == 1) {
        enqueue(learnt[0], -1);
      } else {
        clauses_.push_back(std::move(learnt));
        const int ci = static_cast<int>(clauses_.size()) - 1;
        attach(ci);
        enqueue(clauses_[ci][0], ci);
      }
      continue;
    }
    Lit next{-1};
    while (decision_level() < static_cast<int>(assumptions.size())) {
      const Lit a = assumptions[decision_level()];
      const int v = lit_value(a);
      if (v > 0) {
        trail_lim_.push_back(static_cast<int>(trail_.size()));
      } else if (v < 0) {
        core_ = analyze_final(a);
        cancel_until(0);
        return false;
      } else {
        next = a;
        break;
      }
    }
    if (next.code < 0) {
      for (int v = 0; v < var_count(); ++v)
        if (assigns_[v] == 0) {
          next = Lit::neg(v);
          break;
        }
      if (next.code < 0) {
        model_.assign(var_count(), false);
        for (int v = 0; v < var_count(); ++v) model_[v] = assigns_[v] > 0;
        cancel_until(0);
        return true;
      }
    }
    trail_lim_.push_back(static_cast<int>(trail_.size()));
    enqueue(next, -1);
  }
}

std::string Solver::dimacs(const std::vector<Lit>& assumptions) const {
  std::ostringstream out;
  out << "p cnf " << var_count() << ' '
      << originals_.size() + assumptions.size() << '\n';
  auto emit = [&](const std::vector<Lit>& c) {
    for (Lit p : c) out << (p.negated() ? -(p.var() + 1) : p.var() + 1) << ' ';
    out << "0\n";
  };
  for (const auto& c : originals_) emit(c);
  for (Lit a : assumptions) emit({a});
  return out.str();
}

std::vector<Lit> shrink_core(Solver& solver, std::vector<Lit> core,
                             ShrinkMode mode) {
  if (mode == ShrinkMode::Off) return core;
  for (;;) {
    bool shrunk = false;
    size_t i = 0;
    while (i < core.size()) {
      std::vector<Lit> trial = core;
      trial.erase(trial.begin() + i);
      if (!solver.solve(trial)) {
        core = solver.core();
        shrunk = true;
      } else {
        ++i;
      }
    }
    if (mode == ShrinkMode::OnePass || !shrunk) return core;
  }
}

}  // namespace ialearn::sat
