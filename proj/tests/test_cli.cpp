#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = braidsep::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli: parse echoes the normalized word") {
  const auto r = run_cli({"parse", "s1^-1 s2^2 s1^-2 s2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "word: s1^-1 s2^2 s1^-2 s2"));
  CHECK(contains(r.out, "syllables: 4"));

  const auto merged = run_cli({"parse", "s1 s1^2"});
  CHECK(contains(merged.out, "word: s1^3"));
  CHECK(contains(merged.out, "syllables: 1"));
}

TEST_CASE("cli: reverse") {
  const auto r = run_cli({"reverse", "s1^4 s2 s1^-1 s2^2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "s2^2 s1^-1 s2 s1^4"));
}

TEST_CASE("cli: gap on the 8_17 knot prints the published value") {
  const auto r = run_cli({"gap", "--knot", "8_17", "--condition", "3",
                          "--branch", "minus", "--a", "2-3i", "--f", "7.3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "-524.91"));
  CHECK(contains(r.out, "-581.10"));
}

TEST_CASE("cli: defaults fill in condition 3, lower branch") {
  const auto r = run_cli({"gap", "--knot", "8_17", "--a", "2-3i", "--f",
                          "7.3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "-524.91"));
}

TEST_CASE("cli: separate prints a verdict") {
  const auto yes = run_cli({"separate", "--word", "s1^-1 s2^2 s1^-2 s2",
                            "--a", "2-3i", "--f", "7.3"});
  CHECK(yes.code == 0);
  CHECK(contains(yes.out, "separated: true"));

  const auto no =
      run_cli({"separate", "--word", "s1 s2 s1", "--a", "2-3i", "--f", "7.3"});
  CHECK(no.code == 0);
  CHECK(contains(no.out, "separated: false"));
}

TEST_CASE("cli: table --published reports the honest verdict breakdown") {
  const auto r = run_cli({"table", "--published"});
  CHECK(r.code == 1);  // exit 0 iff all reference cells match; 14 do not
  CHECK(contains(r.out, "reference match: 13/27"));
  CHECK(contains(r.out, "MISMATCH"));
  CHECK(contains(r.out, "matches reference"));
}

TEST_CASE("cli: table with custom columns") {
  const auto r = run_cli({"table", "--a", "2-3i", "--f", "7.3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "6_3"));
  CHECK(!contains(r.out, "reference match"));
}

TEST_CASE("cli: json and csv output are byte-deterministic") {
  const std::vector<std::string> cmd = {"--format", "json", "table",
                                        "--published"};
  const auto a = run_cli(cmd);
  const auto b = run_cli(cmd);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "\"reference_matches\": 13"));

  const std::vector<std::string> csv_cmd = {"--format", "csv", "search",
                                            "--knot",  "8_17", "--draws",
                                            "20",      "--seed", "42"};
  const auto c = run_cli(csv_cmd);
  const auto d = run_cli(csv_cmd);
  CHECK(c.code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("cli: search with pinned parameters") {
  const auto r = run_cli({"search", "--knot", "6_3", "--a", "2-3i", "--f",
                          "7.3", "--draws", "1", "--seed", "5"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "separating draws: 1/1"));
  CHECK(contains(r.out, "170.16"));
}

TEST_CASE("cli: catalog listing") {
  const auto r = run_cli({"catalog"});
  CHECK(r.code == 0);
  for (const char* name :
       {"6_3", "7_5", "8_7", "8_9", "8_10", "8_17", "9_6", "9_9", "10_5"})
    CHECK(contains(r.out, name));
  CHECK(contains(r.out, "aliases"));
}

TEST_CASE("cli: rep build, export and re-import") {
  const char* path = "cli_rep_tmp.json";
  const auto r = run_cli({"rep", "--a", "2-3i", "--f", "7.3", "--out", path});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "provenance: family"));
  CHECK(contains(r.out, "braid relation residual"));

  const auto back = run_cli({"rep", "--in", path});
  CHECK(back.code == 0);
  CHECK(contains(back.out, "provenance: family"));
  std::remove(path);

  const auto builtin = run_cli({"rep", "--builtin"});
  CHECK(builtin.code == 0);
  CHECK(contains(builtin.out, "provenance: builtin"));
}

TEST_CASE("cli: eval and trace") {
  const auto e = run_cli({"eval", "--word", "e", "--builtin"});
  CHECK(e.code == 0);
  CHECK(contains(e.out, "trace: 6"));

  const auto t = run_cli({"trace", "--knot", "8_17", "--a", "2-3i", "--f",
                          "7.3"});
  CHECK(t.code == 0);
  CHECK(contains(t.out, "-562.98"));
}

TEST_CASE("cli: catalog override via flag") {
  const char* path = "cli_catalog_tmp.json";
  {
    std::ofstream out(path);
    out << R"([{"name": "z_9", "crossings": 4, "word": "s1 s2^2"}])";
  }
  const auto r = run_cli({"--catalog", path, "catalog"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "z_9"));
  CHECK(!contains(r.out, "8_17"));

  const auto gap = run_cli({"--catalog", path, "gap", "--knot", "z_9", "--a",
                            "2-3i", "--f", "7.3"});
  CHECK(gap.code == 0);
  std::remove(path);
}

TEST_CASE("cli: domain errors exit 1 with machine-parsable codes") {
  const auto bad_word = run_cli({"parse", "s3"});
  CHECK(bad_word.code == 1);
  CHECK(contains(bad_word.err, "error[parse]:"));

  const auto zero_exp = run_cli({"parse", "s1^0"});
  CHECK(zero_exp.code == 1);
  CHECK(contains(zero_exp.err, "error[parse]:"));

  const auto bad_a = run_cli({"gap", "--word", "s1", "--a", "2", "--f", "1"});
  CHECK(bad_a.code == 1);
  CHECK(contains(bad_a.err, "error[params]:"));

  const auto bad_knot =
      run_cli({"gap", "--knot", "99_9", "--a", "2-3i", "--f", "7.3"});
  CHECK(bad_knot.code == 1);
  CHECK(contains(bad_knot.err, "error[catalog]:"));

  const auto missing_f = run_cli({"gap", "--word", "s1", "--a", "2-3i"});
  CHECK(missing_f.code == 1);
  CHECK(contains(missing_f.err, "error[params]:"));

  const auto bad_catalog = run_cli({"--catalog", "nope.json", "catalog"});
  CHECK(bad_catalog.code == 1);
  CHECK(contains(bad_catalog.err, "error[catalog]:"));

  // every error is a single line
  for (const auto* res : {&bad_word, &bad_a, &bad_knot}) {
    const auto first_nl = res->err.find('\n');
    CHECK(first_nl == res->err.size() - 1);
  }
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"gap", "--no-such-flag"}).code == 2);
  CHECK(run_cli({"parse"}).code == 2);
  CHECK(run_cli({"gap", "--word", "s1", "--branch", "sideways", "--a", "1+i",
                 "--f", "1"})
            .code == 2);
  CHECK(run_cli({}).code == 2);

  const auto r = run_cli({"table", "--published", "--a", "1+i"});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "error[params]:"));
}

TEST_CASE("cli: help exits 0") {
  const auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "parse"));
  CHECK(contains(r.out, "table"));
}
