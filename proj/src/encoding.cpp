#include "ialearn/encoding.hpp"

#include <algorithm>
#include <stdexcept>

namespace ialearn {

using sat::Lit;

TableEncoding::TableEncoding(const ObservationTable& table) : table_(table) {
  for (const char* family : {"basis_eps", "basis_pa", "reach_pa", "cong",
                             "det", "clos", "succ", "sharp", "ind"})
    counts_[family] = 0;
}

TableEncoding::Nu TableEncoding::nu(const Word& w) {
  const Status st = table_.cell(w);
  if (decisive(st)) return {true, st == Status::Yes, {}};
  return {false, false, Lit::pos(xvar_.at(w))};
}

void TableEncoding::emit_cong(Lit e, const Nu& left, const Nu& right) {
  if (left.constant && right.constant) {
    if (left.value != right.value) solver_.add_clause({~e});
    return;  // equal constants: nothing to say
  }
  if (left.constant) {
    solver_.add_clause({~e, left.value ? right.lit : ~right.lit});
    return;
  }
  if (right.constant) {
    solver_.add_clause({~e, right.value ? left.lit : ~left.lit});
    return;
  }
  solver_.add_clause({~e, ~left.lit, right.lit});
  solver_.add_clause({~e, left.lit, ~right.lit});
}

void TableEncoding::regenerate_closedness() {
  for (const auto& [key, sel] : clos_sel_) solver_.add_clause({Lit::neg(sel)});
  clos_sel_.clear();
  counts_["clos"] = 0;
  const auto& prefixes = table_.prefixes();
  for (const Word& p : prefixes) {
    for (Letter a = 0; a < table_.teacher().alphabet().size(); ++a) {
      const int sel = solver_.new_var();
      clos_sel_[{p, a}] = sel;
      sel_origin_[sel] = {p, a};
      std::vector<Lit> clause{Lit::neg(sel), Lit::neg(bvar(p))};
      for (const Word& q : prefixes) clause.push_back(Lit::pos(evar(p, a, q)));
      solver_.add_clause(std::move(clause));
      ++counts_["clos"];
    }
  }
}

void TableEncoding::sync() {
  const auto& prefixes = table_.prefixes();
  const auto& suffixes = table_.suffixes();
  const int k = table_.teacher().alphabet().size();
  const bool grew = prefixes.size() != synced_prefixes_;

  for (const Word& w : table_.incomplete())
    if (!xvar_.count(w)) xvar_.emplace(w, solver_.new_var());
  for (const Word& p : prefixes)
    if (!bvar_.count(p)) bvar_.emplace(p, solver_.new_var());
  for (const Word& p : prefixes)
    for (Letter a = 0; a < k; ++a)
      for (const Word& q : prefixes)
        if (!evar_.count({p, a, q})) {
          const int v = solver_.new_var();
          evar_.emplace(std::make_tuple(p, a, q), v);
          // transitions lead into the basis
          solver_.add_clause({Lit::neg(v), Lit::pos(bvar(q))});
          ++counts_["succ"];
        }

  if (counts_["basis_eps"] == 0) {
    solver_.add_clause({Lit::pos(bvar(Word::epsilon()))});
    counts_["basis_eps"] = 1;
  }

  // the basis is prefix-closed and every member is reached from its parent
  for (const Word& pa : prefixes) {
    if (pa.empty() || basis_rules_done_.count(pa)) continue;
    basis_rules_done_.insert(pa);
    const Word p = pa.prefix(pa.size() - 1);
    const Letter a = pa[pa.size() - 1];
    solver_.add_clause({Lit::neg(bvar(pa)), Lit::pos(bvar(p))});
    ++counts_["basis_pa"];
    solver_.add_clause({Lit::neg(bvar(pa)), Lit::pos(evar(p, a, pa))});
    ++counts_["reach_pa"];
  }

  // a transition to q forces row pa and row q to agree on every suffix
  for (const Word& p : prefixes) {
    for (Letter a = 0; a < k; ++a) {
      const Word pa = p.append(a);
      for (const Word& q : prefixes) {
        if (q == pa) continue;
        for (const Word& s : suffixes) {
          if (!cong_done_.emplace(p, a, q, s).second) continue;
          ++counts_["cong"];
          emit_cong(Lit::pos(evar(p, a, q)), nu(pa.concat(s)),
                    nu(q.concat(s)));
        }
      }
    }
  }

  // at most one successor
  for (const Word& p : prefixes)
    for (Letter a = 0; a < k; ++a)
      for (size_t i = 0; i < prefixes.size(); ++i)
        for (size_t j = i + 1; j < prefixes.size(); ++j)
          if (det_done_.emplace(p, a, prefixes[i], prefixes[j]).second) {
            solver_.add_clause({Lit::neg(evar(p, a, prefixes[i])),
                                Lit::neg(evar(p, a, prefixes[j]))});
            ++counts_["det"];
          }

  // a basis member pa never shares its target with an earlier basis row
  for (const Word& pa : prefixes) {
    if (pa.empty()) continue;
    const Word p = pa.prefix(pa.size() - 1);
    const Letter a = pa[pa.size() - 1];
    for (const Word& q : prefixes) {
      if (!(q < pa)) continue;
      if (!sharp_done_.emplace(pa, q).second) continue;
      solver_.add_clause({Lit::neg(bvar(pa)), Lit::neg(bvar(q)),
                          Lit::neg(evar(p, a, q))});
      ++counts_["sharp"];
    }
  }

  // certified implications between incomplete cells
  for (const auto& [w1, w2] : table_.inductive_pairs()) {
    if (w1 == w2) continue;
    if (!ind_done_.emplace(w1, w2).second) continue;
    solver_.add_clause({Lit::neg(xvar_.at(w1)), Lit::pos(xvar_.at(w2))});
    ++counts_["ind"];
  }

  if (grew) regenerate_closedness();
  synced_prefixes_ = prefixes.size();
}

std::vector<Lit> TableEncoding::selector_assumptions() const {
  std::vector<Lit> out;
  for (const auto& [key, sel] : clos_sel_) out.push_back(Lit::pos(sel));
  return out;
}

bool TableEncoding::block_equal_rows(const Word& u, const Word& v) {
  if (!sharp_val_done_.emplace(u, v).second) return false;
  std::vector<Lit> clause{Lit::neg(bvar(u)), Lit::neg(bvar(v))};
  for (const Word& s : table_.suffixes()) {
    const Nu left = nu(u.concat(s)), right = nu(v.concat(s));
    if (left.constant && right.constant) continue;  // equal by assumption
    if (left.constant) {
      clause.push_back(left.value ? ~right.lit : right.lit);
    } else if (right.constant) {
      clause.push_back(right.value ? ~left.lit : left.lit);
    } else {
      const Lit d = Lit::pos(solver_.new_var());
      solver_.add_clause({~d, left.lit, right.lit});
      solver_.add_clause({~d, ~left.lit, ~right.lit});
      clause.push_back(d);
    }
  }
  solver_.add_clause(std::move(clause));
  return true;
}

bool TableEncoding::capture_model(bool sharpen) {
  const int k = table_.teacher().alphabet().size();
  std::set<Word> basis;
  for (const auto& [p, v] : bvar_)
    if (solver_.model_value(v)) basis.insert(p);

  auto value = [&](const Word& w) {
    const Status st = table_.cell(w);
    if (decisive(st)) return st == Status::Yes;
    return solver_.model_value(xvar_.at(w));
  };
  auto row_of = [&](const Word& q) {
    std::vector<bool> row;
    for (const Word& s : table_.suffixes()) row.push_back(value(q.concat(s)));
    return row;
  };

  // The clauses leave one freedom the sub-table must not have: two basis
  // words whose filled rows coincide. Merging the larger of such a pair
  // into the smaller still satisfies every clause (the redirected edges
  // carry identical rows), so normalize the assignment until it is sharp.
  // A duplicate whose whole class sits under basis children cannot be
  // merged away; then the pair gets a clause requiring distinct rows and
  // the caller re-solves.
  std::map<Word, Word> merged;
  while (sharpen) {
    std::map<std::vector<bool>, std::vector<Word>> classes;
    for (const Word& p : basis) classes[row_of(p)].push_back(p);
    std::optional<Word> victim;
    Word twin;
    bool any_dup = false;
    for (const auto& [row, ps] : classes) {
      if (ps.size() < 2) continue;
      any_dup = true;
      for (size_t i = ps.size(); i-- > 1;) {
        bool has_child = false;
        for (Letter a = 0; a < k && !has_child; ++a)
          if (basis.count(ps[i].append(a))) has_child = true;
        if (has_child) continue;
        if (!victim || *victim < ps[i]) {
          victim = ps[i];
          twin = ps[0];
        }
        break;
      }
    }
    if (!any_dup) break;
    if (!victim) {
      bool added = false;
      for (const auto& [row, ps] : classes) {
        if (ps.size() < 2) continue;
        for (size_t i = 1; i < ps.size(); ++i)
          if (block_equal_rows(ps[0], ps[i])) added = true;
      }
      if (!added)
        throw std::logic_error(
            "model invariant violated: basis not sharpenable");
      return false;
    }
    basis.erase(*victim);
    merged.emplace(*victim, twin);
  }
  auto resolve = [&](Word q) {
    while (merged.count(q)) q = merged.at(q);
    return q;
  };

  model_ = {};
  for (const auto& [p, v] : bvar_) {
    (void)v;
    model_.b[p] = basis.count(p) > 0;
  }
  model_.basis.assign(basis.begin(), basis.end());
  for (const Word& p : model_.basis)
    for (Letter a = 0; a < k; ++a) {
      for (const Word& q : model_.basis) model_.e[{p, a, q}] = false;
      for (const Word& q : table_.prefixes())
        if (solver_.model_value(evar(p, a, q))) {
          model_.e[{p, a, resolve(q)}] = true;
          break;
        }
    }
  std::vector<Word> rows = model_.basis;
  for (const Word& p : model_.basis)
    for (Letter a = 0; a < k; ++a) rows.push_back(p.append(a));
  for (const Word& q : rows)
    for (const Word& s : table_.suffixes()) {
      const Word w = q.concat(s);
      auto it = xvar_.find(w);
      if (it != xvar_.end()) model_.x[w] = solver_.model_value(it->second);
    }
  return true;
}

bool TableEncoding::solve(sat::ShrinkMode shrink) {
  sync();
  while (solver_.solve(selector_assumptions())) {
    if (capture_model(true)) return true;
  }
  auto core = sat::shrink_core(solver_, solver_.core(), shrink);
  if (core.empty())
    throw std::logic_error("unsatisfiable with an empty core: encoding bug");
  std::set<Word> named;
  for (Lit l : core) {
    const auto& [p, a] = sel_origin_.at(l.var());
    const Word pa = p.append(a);
    if (!table_.has_prefix(pa)) named.insert(pa);
  }
  if (named.empty())
    throw std::logic_error("core names no new prefixes: encoding bug");
  core_prefixes_.assign(named.begin(), named.end());
  return false;
}

Hypothesis TableEncoding::hypothesis() const {
  const std::vector<Word>& basis = model_.basis;
  auto oops = [](const std::string& what) {
    throw std::logic_error("model invariant violated: " + what);
  };
  if (basis.empty() || !basis[0].empty()) oops("epsilon not in basis");
  std::map<Word, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  const Alphabet& sigma = table_.teacher().alphabet();
  const int k = sigma.size();

  auto value_of = [&](const Word& w) {
    const Status st = table_.cell(w);
    if (decisive(st)) return st == Status::Yes;
    return model_.x.at(w);
  };

  Dfa h;
  h.alphabet = sigma;
  h.state_count = static_cast<int>(basis.size());
  h.initial = 0;
  h.accepting.resize(h.state_count);
  h.delta.assign(h.state_count * k, -1);
  for (size_t i = 0; i < basis.size(); ++i) {
    const Word& p = basis[i];
    if (!p.empty() && !index.count(p.prefix(p.size() - 1)))
      oops("basis not prefix-closed at " + p.render(sigma));
    h.accepting[i] = value_of(p);
    for (Letter a = 0; a < k; ++a) {
      int target = -1;
      for (const Word& q : basis)
        if (model_.e.at({p, a, q})) {
          if (target >= 0) oops("two successors at " + p.render(sigma));
          target = index[q];
        }
      if (target < 0) oops("no successor at " + p.render(sigma));
      const Word pa = p.append(a);
      if (index.count(pa) && target != index[pa])
        oops("basis member bypassed at " + pa.render(sigma));
      h.delta[i * k + a] = target;
    }
  }

  // the filled sub-table must be sharp (basis rows pairwise distinct) and
  // closed (each frontier row equals exactly one basis row, the successor)
  auto row_of = [&](const Word& q) {
    std::vector<bool> row;
    for (const Word& s : table_.suffixes()) row.push_back(value_of(q.concat(s)));
    return row;
  };
  std::vector<std::vector<bool>> basis_rows;
  for (const Word& p : basis) basis_rows.push_back(row_of(p));
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (basis_rows[i] == basis_rows[j])
        oops("basis rows coincide: " + basis[i].render(sigma) + " and " +
             basis[j].render(sigma));
  for (size_t i = 0; i < basis.size(); ++i)
    for (Letter a = 0; a < k; ++a) {
      const std::vector<bool> frontier = row_of(basis[i].append(a));
      int match = -1;
      for (size_t j = 0; j < basis.size(); ++j)
        if (basis_rows[j] == frontier) match = static_cast<int>(j);
      if (match != h.delta[i * k + a])
        oops("frontier row mismatch at " + basis[i].append(a).render(sigma));
    }

  for (size_t i = 0; i < basis.size(); ++i)
    if (h.accepts(basis[i]) != value_of(basis[i]))
      oops("hypothesis disagrees on basis word " + basis[i].render(sigma));
  return {std::move(h), basis, model_};
}

std::vector<Lit> TableEncoding::model_assumptions(const PartialModel& m) const {
  std::vector<Lit> out;
  auto lit = [](int var, bool val) {
    return val ? Lit::pos(var) : Lit::neg(var);
  };
  for (const auto& [p, val] : m.b) out.push_back(lit(bvar_.at(p), val));
  for (const auto& [key, val] : m.e) out.push_back(lit(evar_.at(key), val));
  for (const auto& [w, val] : m.x) out.push_back(lit(xvar_.at(w), val));
  return out;
}

bool TableEncoding::solve_with_extra(const std::vector<Lit>& extra) {
  std::vector<Lit> assumptions = selector_assumptions();
  assumptions.insert(assumptions.end(), extra.begin(), extra.end());
  if (!solver_.solve(assumptions)) return false;
  capture_model(false);
  return true;
}

std::string TableEncoding::dimacs() const {
  return solver_.dimacs(selector_assumptions());
}

}  // namespace ialearn
