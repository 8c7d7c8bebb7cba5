#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"

#include "gentle/bound_quiver.hpp"
#include "gentle/fringe.hpp"
#include "gentle/hom_kiss.hpp"
#include "gentle/oracle.hpp"
#include "gentle/strings.hpp"

using namespace gentle;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(GENTLE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("validate accepts every corpus algebra") {
  for (const char* name : {"a2", "ex22", "sq33", "gls", "grid_2_4"}) {
    CliResult r = run_cli("validate " + corpus_path(name));
    CAPTURE(name);
    CAPTURE(r.out);
    CHECK(r.exit_code == 0);
    CHECK(lines_of(r.out).at(0) == "gentle: yes");
  }
}

TEST_CASE("validate rejects a triple arrow quiver with exit 1") {
  std::string path = "cli_bad.quiver";
  {
    std::ofstream f(path);
    f << "algebra bad\nvertices: 1 2 3 4\n"
      << "arrow a: 1 -> 2\narrow b: 1 -> 3\narrow c: 1 -> 4\n";
  }
  CliResult r = run_cli("validate " + path);
  CHECK(r.exit_code == 1);
  CHECK(lines_of(r.out).at(0) == "gentle: no");
  CHECK(r.out.find("violation:") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("strings lists canonical literals sorted by length then literal") {
  CliResult r = run_cli("strings " + corpus_path("a2"));
  CHECK(r.exit_code == 0);
  CHECK(lines_of(r.out) == std::vector<std::string>{"e(1)", "e(2)", "a"});

  CliResult g = run_cli("strings " + corpus_path("gls"));
  CHECK(g.exit_code == 0);
  CHECK(lines_of(g.out) == std::vector<std::string>{"e(1)", "e(2)", "a", "b", "b^- a",
                                                    "b^- a^-", "b^- a b"});

  // capped enumeration stays usable on infinite type
  CliResult e = run_cli("strings " + corpus_path("ex22") + " --max-len 1");
  CHECK(e.exit_code == 0);
  CHECK(lines_of(e.out).size() == 8);  // 4 lazies + 4 arrows
}

TEST_CASE("tau prints the canonical translate or 0") {
  CHECK(run_cli("tau " + corpus_path("gls") + " --string b").out == "b^- a\n");
  CHECK(run_cli("tau " + corpus_path("gls") + " --string \"b^- a\"").out == "e(1)\n");
  CHECK(run_cli("tau " + corpus_path("gls") + " --string a").out == "0\n");
  CHECK(run_cli("tau " + corpus_path("a2") + " --string a").out == "0\n");
  CHECK(run_cli("tau " + corpus_path("a2") + " --string \"e(2)\"").out == "e(1)\n");
}

TEST_CASE("tau --fringed prints the cohook completion over the fringed quiver") {
  CliResult r = run_cli("tau " + corpus_path("gls") + " --string b --fringed");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2.fo1 b^- a^- b 2.fi2\n");
}

TEST_CASE("homdim matches the linear oracle") {
  BoundQuiver q = load_corpus("gls");
  StringWalk b = parse_string_literal(q, "b");
  oracle::Representation rb = oracle::rep_of_string(q, b);
  int expected = oracle::hom_dim_linear(q, rb, oracle::tau_linear(q, rb));
  CliResult r = run_cli("homdim " + corpus_path("gls") + " b b --tau");
  CHECK(r.exit_code == 0);
  CHECK(r.out == std::to_string(expected) + "\n");

  int plain = oracle::hom_dim_linear(q, rb, rb);
  CliResult p = run_cli("homdim " + corpus_path("gls") + " b b");
  CHECK(p.out == std::to_string(plain) + "\n");
}

TEST_CASE("ext prints each short exact sequence") {
  CliResult r = run_cli("ext " + corpus_path("a2") + " \"e(2)\" \"e(1)\"");
  CHECK(r.exit_code == 0);
  CHECK(lines_of(r.out) ==
        std::vector<std::string>{"ext: 1", "0 -> e(1) -> a -> e(2) -> 0"});

  CliResult z = run_cli("ext " + corpus_path("a2") + " \"e(1)\" \"e(2)\"");
  CHECK(lines_of(z.out) == std::vector<std::string>{"ext: 0"});
}

TEST_CASE("sttilt lists the a2 pentagon in key order") {
  CliResult r = run_cli("sttilt " + corpus_path("a2"));
  CHECK(r.exit_code == 0);
  CHECK(lines_of(r.out) ==
        std::vector<std::string>{"P[1][1] | P[2][1]", "P[1][1] | e(2)", "P[2][1] | e(1)",
                                 "a | e(1)", "a | e(2)"});
  // byte for byte deterministic
  CHECK(run_cli("sttilt " + corpus_path("a2")).out == r.out);
}

TEST_CASE("poset reports extremes and writes a DOT digraph") {
  std::string dot_path = "cli_poset.dot";
  CliResult r = run_cli("poset " + corpus_path("a2") + " --dot " + dot_path);
  CHECK(r.exit_code == 0);
  CHECK(lines_of(r.out) == std::vector<std::string>{"nodes: 5", "covers: 5",
                                                    "top: a | e(1)",
                                                    "bottom: P[1][1] | P[2][1]"});
  std::ifstream dot(dot_path);
  REQUIRE(dot.good());
  std::string text((std::istreambuf_iterator<char>(dot)), std::istreambuf_iterator<char>());
  int node_lines = 0, edge_lines = 0;
  for (const std::string& line : lines_of(text)) {
    if (line.find("label=") == std::string::npos) continue;
    if (line.find("->") != std::string::npos)
      ++edge_lines;
    else
      ++node_lines;
  }
  CHECK(node_lines == 5);
  CHECK(edge_lines == 5);
  std::remove(dot_path.c_str());
}

TEST_CASE("mc reproduces the walk for the top a2 collection") {
  // index 3 is "a | e(1)", the all projectives collection
  CliResult r = run_cli("mc " + corpus_path("a2") + " --torsion-of 3 --arrow a");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2.fo1 a^- 1.fo2^-\n");
  CliResult s = run_cli("mc " + corpus_path("a2") + " --torsion-of 3 --arrow 2.fi1");
  CHECK(s.out == "2.fo1 2.fi1\n");
}

TEST_CASE("census --all passes on finite corpus algebras") {
  for (const char* name : {"a2", "gls", "sq33", "grid_2_4"}) {
    CliResult r = run_cli("census " + corpus_path(name) + " --all");
    CAPTURE(name);
    CAPTURE(r.out);
    CHECK(r.exit_code == 0);
    std::vector<std::string> ls = lines_of(r.out);
    REQUIRE(!ls.empty());
    CHECK(ls.back().rfind("census: ok", 0) == 0);
  }
}

TEST_CASE("fringe writes a parseable quiver and reports the census") {
  std::string out_path = "cli_fringe.quiver";
  CliResult r = run_cli("fringe " + corpus_path("a2") + " -o " + out_path);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "# arrows: 7 (expected 7)\n");
  std::ifstream f(out_path);
  REQUIRE(f.good());
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  BoundQuiver hat = parse_quiver(text);
  CHECK(hat.arrow_count() == 7);
  CHECK(hat.vertex_count() == 8);
  CHECK(validate_gentle(hat).is_gentle);
  std::remove(out_path.c_str());
}

TEST_CASE("oracle-check passes end to end") {
  CliResult r = run_cli("oracle-check " + corpus_path("gls"));
  CAPTURE(r.out);
  CHECK(r.exit_code == 0);
  std::vector<std::string> ls = lines_of(r.out);
  REQUIRE(!ls.empty());
  CHECK(ls.back() == "oracle-check: pass");

  // bounded run on an infinite type algebra skips the fac section
  CliResult e = run_cli("oracle-check " + corpus_path("ex22") + " --max-len 2 --jobs 2");
  CAPTURE(e.out);
  CHECK(e.exit_code == 0);
  CHECK(e.out.find("fac (skipped: infinite type)") != std::string::npos);
  CHECK(lines_of(e.out).back() == "oracle-check: pass");
}

TEST_CASE("json envelope mirrors the plain output") {
  CliResult r = run_cli("--json sttilt " + corpus_path("a2"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"schema\": \"gentle-kiss/1\"") != std::string::npos);
  CHECK(r.out.find("\"command\": \"sttilt\"") != std::string::npos);
  CHECK(r.out.find("\"P[1][1] | P[2][1]\"") != std::string::npos);

  CliResult t = run_cli("--json tau " + corpus_path("gls") + " --string b");
  CHECK(t.out.find("\"tau\": \"b^- a\"") != std::string::npos);
  CHECK(t.out.find("\"zero\": false") != std::string::npos);
}

TEST_CASE("quiet suppresses stdout") {
  CliResult r = run_cli("--quiet sttilt " + corpus_path("a2"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
}

TEST_CASE("exit codes separate usage errors from domain errors") {
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("validate").exit_code == 2);
  CHECK(run_cli("census " + corpus_path("a2")).exit_code == 2);  // missing --all

  CliResult dom = run_cli("tau " + corpus_path("a2") + " --string \"a a\"");
  CHECK(dom.exit_code == 1);
  CHECK(dom.out.find("strings") != std::string::npos);

  CliResult inf = run_cli("sttilt " + corpus_path("ex22"));
  CHECK(inf.exit_code == 1);
  CHECK(inf.out.find("infinite type") != std::string::npos);

  CHECK(run_cli("validate does_not_exist.quiver").exit_code == 1);
}
