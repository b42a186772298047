#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "ialearn/bench.hpp"
#include "oracles.hpp"

using namespace ialearn;
namespace fs = std::filesystem;

TEST_CASE("config tokens name a teacher and a strategy") {
  BenchVariant v = parse_variant("small");
  CHECK(v.teacher_mode == RmcAnswerMode::Exact);
  CHECK(v.rs == RsStrategy::Small);
  CHECK(v.name == "small");
  v = parse_variant("idmat-short");
  CHECK(v.teacher_mode == RmcAnswerMode::Exact);
  CHECK(v.rs == RsStrategy::Short);
  v = parse_variant("strict-off");
  CHECK(v.teacher_mode == RmcAnswerMode::AllNo);
  CHECK(v.rs == RsStrategy::Off);
  v = parse_variant("nonstrict-small");
  CHECK(v.teacher_mode == RmcAnswerMode::AllYes);
  CHECK_THROWS_AS(parse_variant("bogus-small"), LoadError);
  CHECK_THROWS_AS(parse_variant("idmat-huge"), LoadError);
}

TEST_CASE("a sweep over the bundled models yields sorted valid rows") {
  const std::vector<BenchVariant> variants{parse_variant("small"),
                                           parse_variant("off")};
  const auto rows = run_bench(fixtures::dir(), variants, 2, 60);
  REQUIRE(rows.size() == 3 * 2 * 2);
  for (const BenchRow& r : rows) {
    CHECK(r.result == "valid");
    CHECK(r.stats.mem_queries > 0);
    CHECK(r.stats.hypothesis_states > 0);
  }
  for (size_t i = 1; i < rows.size(); ++i)
    CHECK(std::make_tuple(rows[i - 1].model, rows[i - 1].config,
                          rows[i - 1].repeat) <
          std::make_tuple(rows[i].model, rows[i].config, rows[i].repeat));

  const std::string csv = bench_csv(rows);
  CHECK(csv.rfind("model,config,repeat,result,wall_ms,mem,mem_hints,val,"
                  "sat_calls,cores,states\n",
                  0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') ==
        static_cast<long>(rows.size()) + 1);
  CHECK(csv.find("equidist,small,0,valid") != std::string::npos);
  CHECK(csv.find("token_ring,off,1,valid") != std::string::npos);
}

TEST_CASE("an empty model directory gives a header-only table") {
  const fs::path dir = fs::temp_directory_path() / "ialearn_bench_empty";
  fs::create_directories(dir);
  const auto rows = run_bench(dir.string(), {parse_variant("small")}, 1, 10);
  CHECK(rows.empty());
  CHECK(bench_csv(rows) ==
        "model,config,repeat,result,wall_ms,mem,mem_hints,val,sat_calls,"
        "cores,states\n");
  fs::remove_all(dir);
}

TEST_CASE("an unreadable model becomes an error row with a warning") {
  const fs::path dir = fs::temp_directory_path() / "ialearn_bench_broken";
  fs::create_directories(dir / "junk");
  std::ofstream(dir / "junk" / "pos.aut") << "not an automaton\n";
  std::ostringstream warnings;
  const auto rows =
      run_bench(dir.string(), {parse_variant("small")}, 1, 10, &warnings);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].result == "error");
  CHECK(warnings.str().find("junk") != std::string::npos);
  fs::remove_all(dir);
}
