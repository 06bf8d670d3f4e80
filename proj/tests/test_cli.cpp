#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

#ifndef ENDOLAT_CLI_PATH
#error "ENDOLAT_CLI_PATH must point at the endolat executable"
#endif

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with stdout captured and stderr discarded.
Run run(std::string const& args) {
  std::string cmd = std::string(ENDOLAT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string temp_file(std::string const& name, std::string const& text) {
  auto path = std::filesystem::temp_directory_path() / ("endolat_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

bool has(std::string const& hay, std::string const& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("successful commands exit 0") {
  Run r = run("endos named:m2");
  CHECK(r.status == 0);
  CHECK(has(r.out, "count 7"));
  CHECK(has(r.out, "monoid End(m2) order 7"));

  r = run("quotient named:n_c1 --rel delta");
  CHECK(r.status == 0);
  r = run("validate group:Z2xZ4");
  CHECK(r.status == 0);
  r = run("claims describe lemma_pife");
  CHECK(r.status == 0);
  CHECK(has(r.out, "contains_all_projections"));

  // A non-modular lattice is reported as gated, not as a failure.
  r = run("check named:n5");
  CHECK(r.status == 0);
  CHECK(has(r.out, "hypotheses_not_met"));
}

TEST_CASE("bad usage and bad input exit 1") {
  CHECK(run("").status == 1);
  CHECK(run("frobnicate").status == 1);
  CHECK(run("claims describe no_such_claim").status == 1);
  CHECK(run("show named:no_such_example").status == 1);
  CHECK(run("show group:Z0").status == 1);
  std::string bad = temp_file("bad.lat", "lattice x\nelements 0 1\nbogus\n");
  CHECK(run("show " + bad).status == 1);
  CHECK(run("sweep --max-n 11").status == 1);
}

TEST_CASE("well-formed input that fails validation exits 2") {
  std::string cyc = temp_file("cycle.lat", "lattice x\nelements 0 a 1\ncover 0 a\ncover a 1\ncover 1 0\n");
  CHECK(run("validate " + cyc).status == 2);
  CHECK(run("validate --require-modular named:n5").status == 2);
  CHECK(run("validate named:n5").status == 0);
}

TEST_CASE("a submonoid from morphism literals") {
  std::string morph = temp_file("m2.morph",
                                "morphism p : m2 { 0->0, a->a, b->0, 1->a }\n"
                                "morphism q : m2 { 0->0, a->0, b->b, 1->b }\n");
  Run r = run("check named:m2 --monoid file:" + morph + " --claims prop_xyig");
  CHECK(r.status == 0);
  CHECK(has(r.out, "pass"));
}

TEST_CASE("records output is one JSON object per line") {
  Run r = run("--format records analyze named:qc6");
  REQUIRE(r.status == 0);
  std::size_t start = 0;
  int lines = 0;
  while (start < r.out.size()) {
    std::size_t end = r.out.find('\n', start);
    std::string line = r.out.substr(start, end - start);
    CHECK(line.rfind("{\"schema\":1,\"kind\":", 0) == 0);
    ++lines;
    if (end == std::string::npos) break;
    start = end + 1;
  }
  CHECK(lines > 0);
}

TEST_CASE("text output does not depend on the thread count") {
  std::string args = "sweep --max-n 6 --modular --named --monoid generated:1";
  Run one = run("--jobs 1 " + args);
  Run three = run(args + " --jobs 3");
  CHECK(one.status == 0);
  CHECK(one.out == three.out);
  CHECK(run("--jobs 1 corpus --max-n 6").out == run("--jobs 4 corpus --max-n 6").out);
}
