#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cyclefst/cli.hpp"
#include "cyclefst/errors.hpp"
#include "doctest.h"

using namespace cyclefst;
using namespace cyclefst::cli;

namespace {

const char* const kPermFile = "n=11\n1 3 6 4 2 8 11 5 10 7 9\n";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_text(const std::string& perm, const std::string& script,
                ImplKind impl = ImplKind::kFst) {
  std::istringstream p(perm), s(script);
  std::ostringstream out, err;
  const int code = run(p, s, impl, out, err);
  return {code, out.str(), err.str()};
}

void check_perm_error(const std::string& text, std::size_t line,
                      std::size_t column) {
  std::istringstream in(text);
  try {
    parse_permutation_file(in);
    FAIL("expected ParseError for " << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("permutation file round-trip") {
  std::istringstream in(kPermFile);
  const Permutation p = parse_permutation_file(in);
  CHECK(p == Permutation{1, 3, 6, 4, 2, 8, 11, 5, 10, 7, 9});
  CHECK(format_permutation_file(p) == kPermFile);
  std::istringstream crlf("n=3\r\n2 3 1\r\n\n");
  CHECK(parse_permutation_file(crlf) == Permutation{2, 3, 1});
}

TEST_CASE("permutation file diagnostics") {
  check_perm_error("", 1, 0);
  check_perm_error("size=3\n1 2 3\n", 1, 1);
  check_perm_error("n=x\n1\n", 1, 3);
  check_perm_error("n=0\n\n", 1, 3);
  check_perm_error("n=3\n", 2, 0);
  check_perm_error("n=3\n1 2\n", 2, 0);
  check_perm_error("n=2\n1 2 3\n", 2, 5);
  check_perm_error("n=3\n1 7 2\n", 2, 3);
  check_perm_error("n=3\n1 2 2\n", 2, 5);
  check_perm_error("n=3\n1 b 2\n", 2, 3);
  check_perm_error("n=2\n1 2\n1 2\n", 3, 0);
}

TEST_CASE("run prints one line per command") {
  const std::string script =
      "# queries on the example\n"
      "apply 6\n"
      "cycles\n"
      "size 2\n"
      "power 2 2\n"
      "power 2 -1\n"
      "dist 2 5\n"
      "dist 5 2\n"
      "dist 1 4\n"
      "same 2 8\n"
      "inverse 2\n"
      "\n"
      "flip 11 9\n"
      "oneline\n"
      "transpose-at 1 4\n"
      "transpose-val 1 4\n";
  const std::string expected =
      "8\n4\n5\n6\n5\n4\n1\ninf\ntrue\n5\nok 4\n1 3 6 4 2 8 9 5 11 7 10\n"
      "ok 3\nok 4\n";
  for (ImplKind impl :
       {ImplKind::kFst, ImplKind::kOneLine, ImplKind::kOneLineInverse}) {
    const Result r = run_text(kPermFile, script, impl);
    CHECK(r.code == kExitOk);
    CHECK(r.out == expected);
    CHECK(r.err.empty());
  }
}

TEST_CASE("run exit codes") {
  SUBCASE("script parse error exits 2 before executing") {
    const Result r = run_text(kPermFile, "apply 6\ncycles\napply 12\n");
    CHECK(r.code == kExitParseError);
    CHECK(r.out.empty());
    CHECK(r.err == "error: script: line 3, column 7: element 12 outside 1..11\n");
  }
  SUBCASE("unknown command") {
    const Result r = run_text(kPermFile, "cycles\n  rotate 1\n");
    CHECK(r.code == kExitParseError);
    CHECK(r.err.find("line 2, column 3") != std::string::npos);
  }
  SUBCASE("permutation parse error exits 2") {
    const Result r = run_text("n=3\n1 1 2\n", "cycles\n");
    CHECK(r.code == kExitParseError);
    CHECK(r.err.starts_with("error: permutation file: line 2, column 3"));
  }
  SUBCASE("cross-cycle flip exits 3 with its line") {
    const Result r = run_text(kPermFile, "apply 6\n\nflip 1 4\ncycles\n");
    CHECK(r.code == kExitDomainError);
    CHECK(r.out == "8\n");
    CHECK(r.err.starts_with("error: script line 3: "));
  }
  SUBCASE("degenerate transposition exits 3") {
    const Result r = run_text(kPermFile, "transpose-at 5 5\n");
    CHECK(r.code == kExitDomainError);
    CHECK(r.err.starts_with("error: script line 1: "));
  }
  SUBCASE("missing files exit 2") {
    std::ostringstream out, err;
    CHECK(cmd_run({"/nonexistent/p", "/nonexistent/s", ImplKind::kFst}, out,
                  err) == kExitParseError);
  }
}

TEST_CASE("fuzz") {
  FuzzOptions options;
  options.n = 24;
  options.length = 3000;
  options.seed = 5;
  std::ostringstream out1, err1, out2, err2;
  CHECK(cmd_fuzz(options, out1, err1) == kExitOk);
  CHECK(cmd_fuzz(options, out2, err2) == kExitOk);
  CHECK(out1.str() == out2.str());
  CHECK(out1.str().starts_with("mix=uniform\nseed=5\nn=24\nimpl=fst\n"));
  CHECK(out1.str().ends_with("result=pass\n"));

  SUBCASE("corruption fails with a minimal prefix and dump") {
    const auto dir = std::filesystem::temp_directory_path() / "cyclefst_cli_test";
    std::filesystem::create_directories(dir);
    options.mix = "queries";
    options.corrupt_at = 250;
    options.dump_prefix = (dir / "case").string();
    std::ostringstream out, err;
    CHECK(cmd_fuzz(options, out, err) == kExitFailure);
    CHECK(out.str().find("divergence.op_index=250\n") != std::string::npos);
    CHECK(out.str().find("minimal_failing_prefix=251\n") != std::string::npos);
    CHECK(err.str().find("replay: cyclefst fuzz --seed 5 --n 24 --len 251") !=
          std::string::npos);

    // The dumped files replay through `run`.
    std::ifstream perm(dir / "case.perm"), script(dir / "case.script");
    std::ostringstream rout, rerr;
    CHECK(run(perm, script, ImplKind::kFst, rout, rerr) == kExitOk);
    const std::string lines = rout.str();
    CHECK(std::count(lines.begin(), lines.end(), '\n') == 251);
    std::filesystem::remove_all(dir);
  }
  SUBCASE("bad mix") {
    options.mix = "nope";
    std::ostringstream out, err;
    CHECK(cmd_fuzz(options, out, err) == kExitParseError);
  }
}

TEST_CASE("bench") {
  BenchOptions options;
  options.sizes = {128, 512};
  options.reps = 1;
  options.queries_per_class = 20;
  std::ostringstream out, timing, err, out2, timing2;
  CHECK(cmd_bench(options, out, timing, err) == kExitOk);
  CHECK(cmd_bench(options, out2, timing2, err) == kExitOk);
  CHECK(out.str() == out2.str());
  CHECK(out.str().starts_with("n potential bound"));
  CHECK(out.str().find("PASS rotations per op") != std::string::npos);
  CHECK(timing.str().find("512 ") != std::string::npos);
  CHECK(timing.str().find("oneline-inv") != std::string::npos);
}

TEST_CASE("parse_sizes") {
  CHECK(parse_sizes("1000,10000,100000") ==
        std::vector<std::size_t>{1000, 10000, 100000});
  CHECK(parse_sizes("5") == std::vector<std::size_t>{5});
  CHECK_THROWS_AS(parse_sizes("10,5"), ParseError);
  CHECK_THROWS_AS(parse_sizes("10,,20"), ParseError);
  CHECK_THROWS_AS(parse_sizes("0"), ParseError);
  CHECK_THROWS_AS(parse_sizes("1e5"), ParseError);
  CHECK_THROWS_AS(parse_sizes(""), ParseError);
}
