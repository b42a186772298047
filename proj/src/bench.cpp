#include "ialearn/bench.hpp"

#include <algorithm>
#include <filesystem>
#include <memory>
#include <sstream>

namespace ialearn {

namespace fs = std::filesystem;

BenchVariant parse_variant(const std::string& token) {
  BenchVariant v;
  v.name = token;
  std::string teacher = "idmat", rs = token;
  if (auto dash = token.find('-'); dash != std::string::npos) {
    teacher = token.substr(0, dash);
    rs = token.substr(dash + 1);
  }
  if (teacher == "idmat")
    v.teacher_mode = RmcAnswerMode::Exact;
  else if (teacher == "strict")
    v.teacher_mode = RmcAnswerMode::AllNo;
  else if (teacher == "nonstrict")
    v.teacher_mode = RmcAnswerMode::AllYes;
  else
    throw LoadError("unknown teacher in config: " + token);
  if (rs == "small")
    v.rs = RsStrategy::Small;
  else if (rs == "short")
    v.rs = RsStrategy::Short;
  else if (rs == "off")
    v.rs = RsStrategy::Off;
  else
    throw LoadError("unknown strategy in config: " + token);
  return v;
}

namespace {

std::string outcome_name(LearnOutcome::Kind k) {
  switch (k) {
    case LearnOutcome::Kind::Success:
      return "valid";
    case LearnOutcome::Kind::Timeout:
      return "timeout";
    case LearnOutcome::Kind::Unsafe:
      return "unsafe";
    default:
      return "error";
  }
}

}  // namespace

std::vector<BenchRow> run_bench(const std::string& models_dir,
                                const std::vector<BenchVariant>& variants,
                                int repeats, double timeout_secs,
                                std::ostream* warnings) {
  std::vector<std::string> models;
  for (const auto& entry : fs::directory_iterator(models_dir))
    if (entry.is_directory()) models.push_back(entry.path().filename().string());
  std::sort(models.begin(), models.end());

  std::vector<BenchRow> rows;
  for (const std::string& model : models) {
    const fs::path dir = fs::path(models_dir) / model;
    const bool rmc = fs::exists(dir / "step.trd");
    for (const BenchVariant& v : variants) {
      for (int rep = 0; rep < repeats; ++rep) {
        BenchRow row{model, v.name, rep, "error", 0, {}};
        try {
          std::unique_ptr<Teacher> teacher;
          if (rmc) {
            teacher = std::make_unique<RmcTeacher>(
                load_rmc_model((dir / "s0.aut").string(),
                               (dir / "sb.aut").string(),
                               (dir / "step.trd").string()),
                v.teacher_mode);
          } else {
            teacher = std::make_unique<SeparationTeacher>(
                load_dfa((dir / "pos.aut").string()),
                load_dfa((dir / "neg.aut").string()));
          }
          LearnerConfig cfg;
          cfg.rs_strategy = v.rs;
          cfg.timeout_secs = timeout_secs;
          const LearnOutcome res = run(*teacher, cfg);
          row.result = outcome_name(res.kind);
          row.stats = res.stats;
          row.wall_ms = res.stats.wall_ms;
        } catch (const std::exception& e) {
          if (warnings)
            *warnings << "bench: " << model << "/" << v.name << ": "
                      << e.what() << '\n';
        }
        rows.push_back(std::move(row));
      }
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const BenchRow& a, const BenchRow& b) {
              return std::tie(a.model, a.config, a.repeat) <
                     std::tie(b.model, b.config, b.repeat);
            });
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "model,config,repeat,result,wall_ms,mem,mem_hints,val,sat_calls,"
         "cores,states\n";
  for (const BenchRow& r : rows)
    out << r.model << ',' << r.config << ',' << r.repeat << ',' << r.result
        << ',' << r.wall_ms << ',' << r.stats.mem_queries << ','
        << r.stats.mem_hint_queries << ',' << r.stats.val_queries << ','
        << r.stats.sat_calls << ',' << r.stats.unsat_cores << ','
        << r.stats.hypothesis_states << '\n';
  return out.str();
}

}  // namespace ialearn
