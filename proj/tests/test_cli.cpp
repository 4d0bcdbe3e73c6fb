#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "gemkit/canonical.hpp"
#include "gemkit/colored_graph.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

const std::string cli = GEMKIT_CLI_PATH;

Run shell(const std::string& cmd) {
  Run r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Run run(const std::string& args) { return shell(cli + " " + args); }

std::string data(const std::string& name) { return std::string(GEMKIT_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli golden records") {
  CHECK(run("analyze --format records " + data("q4.gem")).out == slurp(data("golden/q4_analyze.records")));
  CHECK(run("gdegree --format records " + data("nonbip4_a.gem")).out ==
        slurp(data("golden/nonbip4_a_gdegree.records")));
  CHECK(run("report " + data("golden/n4_o4_super.catalogue")).out == slurp(data("golden/n4_o4_super.report")));
}

TEST_CASE("cli records are sorted key=value lines") {
  const auto r = run("analyze --format records " + data("nonbip4_b.gem"));
  CHECK(r.status == 0);
  std::istringstream in(r.out);
  std::string line, prev;
  while (std::getline(in, line)) {
    CHECK(line.find('=') != std::string::npos);
    CHECK(prev <= line);
    prev = line;
  }
  CHECK(r.out.find("h1=Z/2\n") != std::string::npos);
  CHECK(r.out.find("omega_G_reduced=4\n") != std::string::npos);
}

TEST_CASE("cli enumerate matches the golden catalogue") {
  const auto r = run("enumerate --n 4 --order 4 --supercontracted");
  CHECK(r.status == 0);
  CHECK(r.out == slurp(data("golden/n4_o4_super.catalogue")));
  const auto six = run("enumerate --n 4 --order 6 --supercontracted");
  CHECK(six.out.find("# count=39 bipartite=8 nonbipartite=31\n") != std::string::npos);
}

TEST_CASE("cli transform builds the double suspension") {
  const auto r = run("transform --suspend 1 --suspend 2 " + data("t6.gem"));
  REQUIRE(r.status == 0);
  const auto g = gemkit::parse_gem(r.out);
  CHECK(gemkit::isomorphic(g, fixtures::f_tb(), gemkit::Equivalence::ColorPreserving));
  const auto a = run("transform --suspend 1 --suspend 2 " + data("t6.gem") + " | " + cli +
                     " analyze --format records -");
  CHECK(a.out.find("boundary_components=1\n") != std::string::npos);
  CHECK(a.out.find("h1=Z^2\n") != std::string::npos);
  CHECK(a.out.find("singular_dimension=1\n") != std::string::npos);
}

TEST_CASE("cli inflate then simplify returns to a dipole graph") {
  const auto r = run("transform --inflate 3 --seed 4 --simplify " + data("k2_4.gem"));
  REQUIRE(r.status == 0);
  CHECK(gemkit::parse_gem(r.out) == fixtures::k2(4));
}

TEST_CASE("cli classify and group") {
  CHECK(run("classify " + data("nonbip4_b.gem")).out == "RP²×B²\n");
  CHECK(run("group --h1-only --target full " + data("rp3.gem")).out == "h1=Z/2\n");
  CHECK(run("group --h1-only --target M --color 0 " + data("rp3.gem")).out == "h1=Z/2\n");
  CHECK(run("export-dot " + data("k2_4.gem")).out.rfind("graph gem {\n", 0) == 0);
}

TEST_CASE("cli exit codes") {
  CHECK(run("").status == 1);
  CHECK(run("bogus").status == 1);
  CHECK(run("classify " + data("rp3.gem")).status == 1);
  CHECK(run("validate /nonexistent.gem").status == 2);
  CHECK(shell("printf 'gem 1 2\\n0: 1 0\\n' | " + cli + " validate -").status == 2);
  CHECK(run("analyze " + data("t6.gem")).status == 0);
  CHECK(run("transform --suspend 1 " + data("t6.gem") + " | " + cli + " group --target hatM --color 0 -").status == 3);
  CHECK(run("enumerate --n 6 --order 4").status == 4);
  CHECK(run("enumerate --n 2 --order 12 --max-order 10").status == 4);
}
