// bench.hpp -- runs the learner across a directory of models and a grid
// of configurations, producing CSV rows.
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ialearn/learner.hpp"
#include "ialearn/teachers.hpp"

namespace ialearn {

/// A named (teacher, suffix-selection) combination, e.g. "idmat-small",
/// "strict-off". A bare strategy name implies the idmat teacher.
struct BenchVariant {
  std::string name;
  RmcAnswerMode teacher_mode = RmcAnswerMode::Exact;
  RsStrategy rs = RsStrategy::Small;
};

BenchVariant parse_variant(const std::string& token);

struct BenchRow {
  std::string model;
  std::string config;
  int repeat = 0;
  std::string result;  // valid | timeout | unsafe | error
  double wall_ms = 0;
  LearnStats stats;
};

/// Each subdirectory of models_dir is one model: either s0.aut + sb.aut +
/// step.trd (invariant synthesis) or pos.aut + neg.aut (separation, where
/// the teacher part of a variant is ignored). Unreadable models produce a
/// row with result "error". Rows come out sorted by model then config.
std::vector<BenchRow> run_bench(const std::string& models_dir,
                                const std::vector<BenchVariant>& variants,
                                int repeats, double timeout_secs,
                                std::ostream* warnings = nullptr);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace ialearn
