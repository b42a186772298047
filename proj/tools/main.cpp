// Command line front end: learn (run the learner on a model), check
// (verify a candidate invariant/separator), bench (configuration grid).
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ialearn/bench.hpp"
#include "ialearn/learner.hpp"
#include "ialearn/teachers.hpp"

namespace {

using namespace ialearn;

struct ModelArgs {
  std::string mode;  // sep | rmc
  std::string pos, neg;
  std::string initial, bad, step;
};

void add_model_flags(CLI::App* cmd, ModelArgs& m) {
  cmd->add_option("--mode", m.mode, "sep or rmc")
      ->required()
      ->check(CLI::IsMember({"sep", "rmc"}));
  cmd->add_option("--pos", m.pos, "language to include (.aut, sep mode)");
  cmd->add_option("--neg", m.neg, "language to exclude (.aut, sep mode)");
  cmd->add_option("--initial", m.initial, "initial configurations (.aut)");
  cmd->add_option("--bad", m.bad, "bad configurations (.aut)");
  cmd->add_option("--step", m.step, "one-step transducer (.trd)");
}

void require_model_files(const ModelArgs& m) {
  if (m.mode == "sep") {
    if (m.pos.empty() || m.neg.empty())
      throw CLI::ValidationError("sep mode needs --pos and --neg");
  } else if (m.initial.empty() || m.bad.empty() || m.step.empty()) {
    throw CLI::ValidationError("rmc mode needs --initial, --bad and --step");
  }
}

std::unique_ptr<Teacher> make_teacher(const ModelArgs& m,
                                      const std::string& teacher_kind) {
  if (m.mode == "sep")
    return std::make_unique<SeparationTeacher>(load_dfa(m.pos),
                                               load_dfa(m.neg));
  RmcAnswerMode am = RmcAnswerMode::Exact;
  if (teacher_kind == "strict")
    am = RmcAnswerMode::AllNo;
  else if (teacher_kind == "nonstrict")
    am = RmcAnswerMode::AllYes;
  return std::make_unique<RmcTeacher>(load_rmc_model(m.initial, m.bad, m.step),
                                      am);
}

RsStrategy parse_rs(const std::string& name) {
  if (name == "off") return RsStrategy::Off;
  if (name == "short") return RsStrategy::Short;
  return RsStrategy::Small;
}

const char* outcome_name(LearnOutcome::Kind k) {
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

struct LearnArgs {
  ModelArgs model;
  std::string rs = "small";
  std::string teacher = "idmat";
  std::string shrink = "off";
  double timeout_secs = 0;
  long long max_refinements = 0;
  std::string out_path;
  std::string stats_path;
  bool dump_cnf = false;
  bool dump_table = false;
  bool verbose = false;
};

int cmd_learn(const LearnArgs& a) {
  require_model_files(a.model);
  auto teacher = make_teacher(a.model, a.teacher);
  LearnerConfig cfg;
  cfg.rs_strategy = parse_rs(a.rs);
  cfg.timeout_secs = a.timeout_secs;
  cfg.max_refinements = a.max_refinements;
  if (a.shrink == "one-pass") cfg.core_shrink = sat::ShrinkMode::OnePass;
  if (a.shrink == "fixpoint") cfg.core_shrink = sat::ShrinkMode::Fixpoint;
  if (a.dump_cnf) cfg.dump_cnf_path = "dump.cnf";
  if (a.dump_table) cfg.dump_table_path = "dump.table";
  if (a.verbose) cfg.log = &std::cerr;

  const LearnOutcome res = run(*teacher, cfg);

  if (!a.stats_path.empty()) {
    nlohmann::json j{{"mode", a.model.mode},
                     {"result", outcome_name(res.kind)},
                     {"mem_queries", res.stats.mem_queries},
                     {"mem_hint_queries", res.stats.mem_hint_queries},
                     {"val_queries", res.stats.val_queries},
                     {"sat_calls", res.stats.sat_calls},
                     {"unsat_cores", res.stats.unsat_cores},
                     {"prefix_count", res.stats.prefix_count},
                     {"suffix_count", res.stats.suffix_count},
                     {"hypothesis_states", res.stats.hypothesis_states},
                     {"wall_ms", res.stats.wall_ms},
                     {"rs_strategy", a.rs}};
    std::ofstream out(a.stats_path);
    out << j.dump(2) << '\n';
  }

  switch (res.kind) {
    case LearnOutcome::Kind::Success:
      if (!a.out_path.empty()) save_dfa(*res.automaton, a.out_path);
      return 0;
    case LearnOutcome::Kind::Timeout:
      std::cerr << "timeout: " << res.detail << '\n';
      return 2;
    case LearnOutcome::Kind::Unsafe:
      std::cerr << "unsafe: " << res.detail << '\n';
      return 3;
    default:
      std::cerr << "error: " << res.detail << '\n';
      return 1;
  }
}

struct CheckArgs {
  ModelArgs model;
  std::string invariant;
};

int cmd_check(const CheckArgs& a) {
  require_model_files(a.model);
  const Dfa h = load_dfa(a.invariant);
  auto fail = [&](const std::string& cond, const Word& witness,
                  const Alphabet& sigma) {
    std::cout << "FAIL " << cond << " witness " << witness.render(sigma)
              << '\n';
    return 3;
  };
  if (a.model.mode == "sep") {
    const Dfa pos = load_dfa(a.model.pos);
    const Dfa neg = load_dfa(a.model.neg);
    if (auto w = shortest_accepted(difference(pos, h)))
      return fail("pos-subset", *w, pos.alphabet);
    if (auto w = shortest_accepted(intersect(h, neg)))
      return fail("neg-disjoint", *w, pos.alphabet);
  } else {
    const RmcModel m =
        load_rmc_model(a.model.initial, a.model.bad, a.model.step);
    const Alphabet& sigma = m.step.alphabet;
    if (auto w = shortest_accepted(difference(m.initial_lang, h)))
      return fail("initial-subset", *w, sigma);
    if (auto w = shortest_accepted(intersect(h, m.bad_lang)))
      return fail("bad-disjoint", *w, sigma);
    if (auto w = shortest_accepted(
            difference(image(m.step, h, Direction::Forward), h)))
      return fail("inductive", *w, sigma);
  }
  std::cout << "OK\n";
  return 0;
}

struct BenchArgs {
  std::string models_dir;
  std::string configs =
      "idmat-small,idmat-short,idmat-off,strict-small,strict-short,"
      "strict-off,nonstrict-small,nonstrict-short,nonstrict-off";
  int repeats = 3;
  double timeout_secs = 30;
  std::string out_path;
};

int cmd_bench(const BenchArgs& a) {
  std::vector<BenchVariant> variants;
  std::stringstream list(a.configs);
  std::string token;
  while (std::getline(list, token, ','))
    if (!token.empty()) variants.push_back(parse_variant(token));
  const auto rows =
      run_bench(a.models_dir, variants, a.repeats, a.timeout_secs, &std::cerr);
  const std::string csv = bench_csv(rows);
  if (a.out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(a.out_path);
    out << csv;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SAT-based learner for regular separators and invariants"};
  app.require_subcommand(1);

  LearnArgs learn_args;
  CLI::App* learn = app.add_subcommand("learn", "run the learner");
  add_model_flags(learn, learn_args.model);
  learn->add_option("--rs", learn_args.rs, "suffix selection strategy")
      ->check(CLI::IsMember({"off", "small", "short"}));
  learn->add_option("--teacher", learn_args.teacher, "rmc oracle flavor")
      ->check(CLI::IsMember({"idmat", "strict", "nonstrict"}));
  learn->add_option("--core-shrink", learn_args.shrink, "unsat core reduction")
      ->check(CLI::IsMember({"off", "one-pass", "fixpoint"}));
  learn->add_option("--timeout-secs", learn_args.timeout_secs);
  learn->add_option("--max-refinements", learn_args.max_refinements);
  learn->add_option("--out", learn_args.out_path, "write the answer (.aut)");
  learn->add_option("--stats", learn_args.stats_path, "write stats JSON");
  learn->add_flag("--dump-cnf", learn_args.dump_cnf,
                  "write the live SAT instance to dump.cnf");
  learn->add_flag("--dump-table", learn_args.dump_table,
                  "write the observation table to dump.table");
  learn->add_flag("-v,--verbose", learn_args.verbose);

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "verify a candidate answer");
  add_model_flags(check, check_args.model);
  check->add_option("--invariant", check_args.invariant)->required();

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "configuration grid runs");
  bench->add_option("--models", bench_args.models_dir)->required();
  bench->add_option("--configs", bench_args.configs, "comma separated");
  bench->add_option("--repeats", bench_args.repeats);
  bench->add_option("--timeout-secs", bench_args.timeout_secs);
  bench->add_option("--out", bench_args.out_path, "CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (learn->parsed()) return cmd_learn(learn_args);
    if (check->parsed()) return cmd_check(check_args);
    return cmd_bench(bench_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
