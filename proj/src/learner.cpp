#include "ialearn/learner.hpp"

#include <chrono>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace ialearn {

Word partial_computation(const Hypothesis& h, const Word& w, int i) {
  const int state = h.dfa.run(w.prefix(i));
  return h.basis[state].concat(w.suffix(i));
}

Status agree_simple(Teacher& teacher, const Hypothesis& h, const Word& w,
                    int i) {
  const Word c = partial_computation(h, w, i);
  const Status st = teacher.mem_status(c);
  if (decisive(st)) return st;
  auto it = h.model.x.find(c);
  if (it != h.model.x.end()) return it->second ? Status::Yes : Status::No;
  return Status::Blank;
}

std::pair<int, int> find_breaking_interval(const std::vector<Status>& values,
                                           RsStrategy strategy) {
  const int n = static_cast<int>(values.size()) - 1;
  if (n < 1 || !decisive(values[0]) || !decisive(values[n]) ||
      values[0] == values[n])
    throw std::logic_error("breaking interval endpoints not decisive/distinct");
  if (strategy == RsStrategy::Off) return {0, n};
  int best_i = 0, best_j = n;
  bool found = false;
  for (int i = 0; i <= n; ++i) {
    if (!decisive(values[i])) continue;
    for (int j = i + 1; j <= n; ++j) {
      if (!decisive(values[j]) || values[j] == values[i]) continue;
      bool better;
      if (strategy == RsStrategy::Small)
        better = !found || j - i < best_j - best_i ||
                 (j - i == best_j - best_i && i < best_i);
      else  // Short
        better = !found || i > best_i || (i == best_i && j < best_j);
      if (better) {
        best_i = i;
        best_j = j;
        found = true;
      }
    }
  }
  return {best_i, best_j};
}

std::vector<Word> interval_suffixes(const Word& w, int i, int j) {
  std::vector<Word> out;
  for (int k = i + 1; k <= j; ++k) out.push_back(w.suffix(k));
  return out;
}

Status agree_inductive(Teacher& teacher, const Hypothesis& h, const Word& w1,
                       const Word& w2, int i, int j) {
  const Word c1 = partial_computation(h, w1, i);
  const Word c2 = partial_computation(h, w2, j);
  const Status s1 = teacher.mem_status(c1);
  const Status s2 = teacher.mem_status(c2);
  if (decisive(s1) && decisive(s2))
    return (s1 == Status::Yes && s2 == Status::No) ? Status::No : Status::Yes;
  // the hint query must go through whichever side is still undecided
  if (s1 == Status::Blank) {
    if (teacher.mem_hints(c1, {c2}).count({c1, c2})) return Status::Yes;
  } else if (s2 == Status::Blank) {
    if (teacher.mem_hints(c2, {c1}).count({c1, c2})) return Status::Yes;
  }
  auto value = [&](const Word& c, Status st) -> std::optional<bool> {
    if (decisive(st)) return st == Status::Yes;
    auto it = h.model.x.find(c);
    if (it != h.model.x.end()) return it->second;
    return std::nullopt;
  };
  const auto v1 = value(c1, s1), v2 = value(c2, s2);
  if (v1 && v2) return (*v1 && !*v2) ? Status::No : Status::Yes;
  return Status::Blank;
}

std::tuple<int, int, int, int> find_breaking_rectangle(
    const std::vector<std::vector<Status>>& grid, RsStrategy strategy) {
  const int n1 = static_cast<int>(grid.size()) - 1;
  const int n2 = static_cast<int>(grid.at(0).size()) - 1;
  if (grid[0][0] != Status::Yes || grid[n1][n2] != Status::No)
    throw std::logic_error("breaking rectangle corners not One/Zero");
  if (strategy == RsStrategy::Off) return {0, n1, 0, n2};
  std::tuple<int, int, int, int> best{0, n1, 0, n2};
  long long best_score = std::numeric_limits<long long>::max();
  bool found = false;
  for (int i = 0; i <= n1; ++i)
    for (int i2 = i; i2 <= n1; ++i2)
      for (int j = 0; j <= n2; ++j)
        for (int j2 = j; j2 <= n2; ++j2) {
          if (i == i2 && j == j2) continue;
          if (!decisive(grid[i][j]) || !decisive(grid[i2][j2]) ||
              grid[i][j] == grid[i2][j2])
            continue;
          std::tuple<int, int, int, int> cand{i, i2, j, j2};
          bool better;
          if (strategy == RsStrategy::Small) {
            const long long score = (i2 - i + 1) + (j2 - j + 1);
            better = !found || score < best_score ||
                     (score == best_score && cand < best);
            if (better) best_score = score;
          } else {  // Short: largest i, then j; smallest i', then j'
            auto key = [](const std::tuple<int, int, int, int>& t) {
              return std::make_tuple(-std::get<0>(t), -std::get<2>(t),
                                     std::get<1>(t), std::get<3>(t));
            };
            better = !found || key(cand) < key(best);
          }
          if (better) {
            best = cand;
            found = true;
          }
        }
  if (!found) throw std::logic_error("no breaking rectangle in grid");
  return best;
}

std::vector<Word> rectangle_suffixes(const Word& w1, const Word& w2, int i,
                                     int i2, int j, int j2) {
  std::vector<Word> out;
  for (int k = i; k <= i2; ++k) out.push_back(w1.suffix(k));
  for (int k = j; k <= j2; ++k) out.push_back(w2.suffix(k));
  return out;
}

namespace {

void dump_to(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path);
  out << text;
}

}  // namespace

LearnOutcome run(Teacher& teacher, const LearnerConfig& cfg) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const Alphabet& sigma = teacher.alphabet();

  LearnOutcome out;
  long long unsat_cores = 0;
  long long refinements = 0;
  long long last_states = 0;
  std::optional<ObservationTable> table;
  std::optional<TableEncoding> enc;

  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(clock::now() - start)
        .count();
  };
  auto log = [&](const std::string& line) {
    if (cfg.log) *cfg.log << line << '\n';
  };
  auto finish = [&](LearnOutcome::Kind kind, std::string detail = "") -> LearnOutcome& {
    out.kind = kind;
    out.detail = std::move(detail);
    out.stats.mem_queries = teacher.stats().mem_queries;
    out.stats.mem_hint_queries = teacher.stats().mem_hint_queries;
    out.stats.val_queries = teacher.stats().val_queries;
    out.stats.sat_calls = enc ? enc->solve_calls() : 0;
    out.stats.unsat_cores = unsat_cores;
    out.stats.prefix_count = table ? table->prefixes().size() : 0;
    out.stats.suffix_count = table ? table->suffixes().size() : 0;
    out.stats.hypothesis_states =
        out.automaton ? out.automaton->state_count : last_states;
    out.stats.wall_ms = elapsed_ms();
    return out;
  };

  try {
    table.emplace(teacher);
    enc.emplace(*table);
    for (;;) {
      if (cfg.timeout_secs > 0 && elapsed_ms() > cfg.timeout_secs * 1000.0)
        return finish(LearnOutcome::Kind::Timeout, "wall clock limit");
      if (cfg.max_refinements > 0 && refinements >= cfg.max_refinements)
        return finish(LearnOutcome::Kind::Timeout, "refinement budget");

      const bool sat = enc->solve(cfg.core_shrink);
      dump_to(cfg.dump_cnf_path, enc->dimacs());
      dump_to(cfg.dump_table_path, table->format());
      if (!sat) {
        ++unsat_cores;
        ++refinements;
        const std::vector<Word> added = enc->core_prefixes();
        std::string line = "unsat prefixes+";
        for (const Word& p : added) line += " " + p.render(sigma);
        log(line);
        table->add_prefixes(added);
        continue;
      }

      Hypothesis h = enc->hypothesis();
      last_states = h.dfa.state_count;
      log("sat states=" + std::to_string(h.dfa.state_count));
      const ValAnswer va = teacher.validate(h.dfa);
      if (va.kind == ValAnswer::Kind::Valid) {
        if (teacher.validate(h.dfa).kind != ValAnswer::Kind::Valid)
          return finish(LearnOutcome::Kind::ContractViolation,
                        "answer failed re-validation");
        log("valid");
        out.automaton = std::move(h.dfa);
        return finish(LearnOutcome::Kind::Success);
      }

      std::vector<Word> suffixes;
      if (va.kind == ValAnswer::Kind::SimpleCex) {
        const Word& w = va.cex1;
        std::vector<Status> row;
        for (int i = 0; i <= w.size(); ++i)
          row.push_back(agree_simple(teacher, h, w, i));
        const auto [i, j] = find_breaking_interval(row, cfg.rs_strategy);
        suffixes = interval_suffixes(w, i, j);
        log("simple-cex " + w.render(sigma) + " bi=[" + std::to_string(i) +
            ":" + std::to_string(j) + "]");
      } else {
        const Word& w1 = va.cex1;
        const Word& w2 = va.cex2;
        std::vector<std::vector<Status>> grid(w1.size() + 1);
        for (int i = 0; i <= w1.size(); ++i)
          for (int j = 0; j <= w2.size(); ++j)
            grid[i].push_back(agree_inductive(teacher, h, w1, w2, i, j));
        const auto [i, i2, j, j2] =
            find_breaking_rectangle(grid, cfg.rs_strategy);
        suffixes = rectangle_suffixes(w1, w2, i, i2, j, j2);
        log("inductive-cex " + w1.render(sigma) + " " + w2.render(sigma) +
            " br=[" + std::to_string(i) + ":" + std::to_string(i2) + "]x[" +
            std::to_string(j) + ":" + std::to_string(j2) + "]");
      }
      ++refinements;
      if (table->add_suffixes(suffixes) == 0)
        return finish(LearnOutcome::Kind::ContractViolation,
                      "analysis produced no new suffixes");
      if (cfg.check_refinements) {
        enc->sync();
        if (enc->solve_with_extra(enc->model_assumptions(h.model)))
          return finish(LearnOutcome::Kind::ContractViolation,
                        "refinement kept the previous model satisfiable");
      }
    }
  } catch (const UnsafeModelError& e) {
    out.unsafe_witness = e.witness;
    return finish(LearnOutcome::Kind::Unsafe, e.what());
  } catch (const std::logic_error& e) {
    return finish(LearnOutcome::Kind::ContractViolation, e.what());
  }
}

}  // namespace ialearn
