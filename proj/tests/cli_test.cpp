#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "ialearn/automata.hpp"
#include "oracles.hpp"

using namespace ialearn;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  CliResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string rmc_flags(const std::string& model) {
  const std::string d = fixtures::dir() + "/" + model;
  return "--mode rmc --initial " + d + "/s0.aut --bad " + d +
         "/sb.aut --step " + d + "/step.trd";
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("learn then check round trip on the moving-token model") {
  TempDir tmp("ialearn_cli_learn");
  const std::string out = (tmp.path / "inv.aut").string();
  const std::string stats = (tmp.path / "stats.json").string();
  const CliResult learn = run_cli("learn " + rmc_flags("equidist") + " --out " +
                                  out + " --stats " + stats);
  CHECK(learn.code == 0);

  const std::string j = slurp(stats);
  for (const std::string& key :
       {"\"mode\"", "\"result\"", "\"mem_queries\"", "\"mem_hint_queries\"",
        "\"val_queries\"", "\"sat_calls\"", "\"unsat_cores\"",
        "\"prefix_count\"", "\"suffix_count\"", "\"hypothesis_states\"",
        "\"wall_ms\"", "\"rs_strategy\""})
    CHECK(j.find(key) != std::string::npos);
  CHECK(j.find("\"result\": \"valid\"") != std::string::npos);

  const CliResult check =
      run_cli("check " + rmc_flags("equidist") + " --invariant " + out);
  CHECK(check.code == 0);
  CHECK(check.out == "OK\n");
}

TEST_CASE("a singleton separation target round trips through files") {
  TempDir tmp("ialearn_cli_sep");
  const Dfa target = load_dfa(fixtures::dir() + "/equidist/s0.aut");
  const std::string pos = (tmp.path / "pos.aut").string();
  const std::string neg = (tmp.path / "neg.aut").string();
  const std::string out = (tmp.path / "sep.aut").string();
  save_dfa(target, pos);
  save_dfa(complement(target), neg);
  const CliResult learn = run_cli("learn --mode sep --pos " + pos + " --neg " +
                                  neg + " --out " + out);
  CHECK(learn.code == 0);
  CHECK(equivalent(load_dfa(out), target).equivalent);

  const CliResult check = run_cli("check --mode sep --pos " + pos + " --neg " +
                                  neg + " --invariant " + out);
  CHECK(check.code == 0);

  // overlapping languages are a load failure
  const CliResult clash =
      run_cli("learn --mode sep --pos " + pos + " --neg " + pos);
  CHECK(clash.code == 1);
}

TEST_CASE("incomplete model flags are a usage error") {
  const std::string d = fixtures::dir() + "/equidist";
  const CliResult r = run_cli("learn --mode rmc --initial " + d +
                              "/s0.aut --bad " + d + "/sb.aut");
  CHECK(r.code == 1);
}

TEST_CASE("check reports the first failing condition with a witness") {
  TempDir tmp("ialearn_cli_check");
  const std::string all = (tmp.path / "all.aut").string();
  save_dfa(sigma_star(Alphabet({"o", "x"})), all);
  const CliResult r =
      run_cli("check " + rmc_flags("equidist") + " --invariant " + all);
  CHECK(r.code == 3);
  CHECK(r.out == "FAIL bad-disjoint witness xox\n");

  const std::string parity = (tmp.path / "parity.aut").string();
  std::ofstream(parity) << "alphabet o x\nstates 2\ninitial 0\naccepting 0\n"
                           "trans 0 o 1\ntrans 0 x 1\ntrans 1 o 0\n"
                           "trans 1 x 0\n";
  const CliResult even =
      run_cli("check " + rmc_flags("equidist") + " --invariant " + parity);
  CHECK(even.code == 3);
  CHECK(even.out == "FAIL bad-disjoint witness oxox\n");
}

TEST_CASE("an unsafe model exits with the dedicated code") {
  TempDir tmp("ialearn_cli_unsafe");
  std::ofstream(tmp.path / "s0.aut")
      << "alphabet o x\nstates 2\ninitial 0\naccepting 1\n"
         "trans 0 x 1\ntrans 1 o 1\n";
  std::ofstream(tmp.path / "sb.aut")
      << "alphabet o x\nstates 2\ninitial 0\naccepting 1\n"
         "trans 0 o 0\ntrans 0 x 1\n";
  fs::copy_file(fixtures::dir() + "/token_ring/step.trd",
                tmp.path / "step.trd");
  const std::string d = tmp.path.string();
  const CliResult r = run_cli("learn --mode rmc --initial " + d +
                              "/s0.aut --bad " + d + "/sb.aut --step " + d +
                              "/step.trd");
  CHECK(r.code == 3);
}

TEST_CASE("bench prints one row per model, config and repeat") {
  const CliResult r = run_cli("bench --models " + fixtures::dir() +
                              " --configs small,short,off --repeats 1"
                              " --timeout-secs 60");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line ==
        "model,config,repeat,result,wall_ms,mem,mem_hints,val,sat_calls,"
        "cores,states");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.find(",valid,") != std::string::npos);
  }
  CHECK(rows == 9);
}
