#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "hfzf/grammar.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string binary_path() {
  const char* env = std::getenv("HFZF_BIN");
  return env ? env : "tools/hfzf";
}

RunResult run(const std::string& args) {
  std::string cmd = binary_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 512> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli basics and exit codes") {
  auto r = run("rank \"<0,1>\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3\n");

  CHECK(run("rank \"{\"").exit_code == 2);
  CHECK(run("prop valid \"#0 => #0\"").exit_code == 0);
  auto falsifiable = run("prop valid \"#0\"");
  CHECK(falsifiable.exit_code == 1);
  CHECK(falsifiable.out.find("falsifiable") != std::string::npos);
  CHECK(run("wf \"{<0,0>}\"").exit_code == 1);
  CHECK(run("wf \"{<0,1>}\"").exit_code == 0);
  CHECK(run("vfrom \"{}\" 5").exit_code == 3);
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("selftest bogus").exit_code == 2);
}

TEST_CASE("cli output reparses to the computed value") {
  hfzf::Ctx ctx;
  auto r = run("rtrancl \"{<0,1>,<1,2>}\"");
  CHECK(r.exit_code == 0);
  std::string text = r.out.substr(0, r.out.size() - 1);
  hfzf::HSet parsed = hfzf::parse_set(ctx, text);
  hfzf::HSet expected = hfzf::parse_set(ctx, "{<0,0>,<1,1>,<2,2>,<0,1>,<1,2>,<0,2>}");
  CHECK(parsed == expected);
}

TEST_CASE("cli sexpr format") {
  auto r = run("--format sexpr rank \"<0,1>\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "(rank \"3\")\n");
  CHECK(run("--format sexpr prop valid \"#0 => #0\"").out == "(valid)\n");
}

TEST_CASE("cli prove/check round trip through a file") {
  std::string dir = "/tmp/hfzf_cli_test";
  REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
  std::string proof = dir + "/proof.sx";
  auto r1 = run("prop prove \"(#0 => #1) => #0 => #1\" -o " + proof);
  CHECK(r1.exit_code == 0);
  auto r2 = run("prop check " + proof);
  CHECK(r2.exit_code == 0);
  CHECK(r2.out == "(#0 => #1) => #0 => #1\n");

  std::string hyps = dir + "/hyps.txt";
  std::FILE* f = std::fopen(hyps.c_str(), "w");
  REQUIRE(f != nullptr);
  std::fputs("#0 => #1\n\n#0\n", f);
  std::fclose(f);
  CHECK(run("prop valid -H " + hyps + " \"#1\"").exit_code == 0);
  auto r3 = run("prop prove -H " + hyps + " \"#1\" -o " + dir + "/p2.sx");
  CHECK(r3.exit_code == 0);
  CHECK(run("prop check " + dir + "/p2.sx -H " + hyps).exit_code == 0);
  // without the hypotheses the same file must be rejected
  CHECK(run("prop check " + dir + "/p2.sx").exit_code == 2);
}

TEST_CASE("cli selftest determinism") {
  auto a = run("selftest core --seed 7");
  auto b = run("selftest core --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}
