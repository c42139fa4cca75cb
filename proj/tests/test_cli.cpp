// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// End-to-end checks of the command-line tool: exit codes, report
// determinism, and the DOT and file outputs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const char* kCli = ORTHOLOC_CLI_PATH;
const char* kFixtures = ORTHOLOC_FIXTURE_DIR;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                         "/ortholoc_cli_out.txt";
  std::string command = std::string(kCli) + " " + args + " > " + out_path + " 2>&1";
  int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  return result;
}

std::string fixture(const std::string& name) {
  return std::string(kFixtures) + "/" + name;
}

}  // namespace

TEST_CASE("check: exit codes follow the property verdicts") {
  CHECK(run("check " + fixture("m3.json") + " --properties modular").exit_code == 0);
  CHECK(run("check " + fixture("n5.json") + " --properties modular").exit_code == 1);
  CHECK(run("check " + fixture("m3.json") + " --properties distributive").exit_code == 1);
  CHECK(run("check " + fixture("m3.json") + " --properties modular,complemented").exit_code == 0);
}

TEST_CASE("check: input errors exit with 2") {
  CHECK(run("check /nonexistent.json --properties modular").exit_code == 2);
  CHECK(run("check " + fixture("m3.json") + " --properties septangular").exit_code == 2);
  CHECK(run("totally-not-a-command").exit_code == 2);
}

TEST_CASE("locality: strongly separating relation reports all green") {
  RunResult r = run("locality " + fixture("b2.json") + " " +
                    fixture("b2_strongly_separating.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"strongly_separating\"") != std::string::npos);
  CHECK(r.output.find("false") == std::string::npos);
}

TEST_CASE("locality: the bundled counterexamples exit with 1") {
  RunResult bundled = run("locality " + fixture("gf2_3.json") + " " +
                        fixture("gf2_3_paper.json"));
  CHECK(bundled.exit_code == 1);

  RunResult relaxed = run("locality " + fixture("m3.json") + " " +
                          fixture("m3_disjointedness.json") + " --relaxed");
  CHECK(relaxed.exit_code == 1);
  CHECK(relaxed.output.find("polar_has_no_greatest_element") != std::string::npos);

  RunResult mismatch = run("locality " + fixture("m3.json") + " " +
                           fixture("b2_strongly_separating.json"));
  CHECK(mismatch.exit_code == 2);
}

TEST_CASE("correspond") {
  RunResult m3 = run("correspond " + fixture("m3.json"));
  CHECK(m3.exit_code == 0);
  CHECK(m3.output.find("\"num_strongly_separating\": 0") != std::string::npos);
  CHECK(m3.output.find("\"num_orthocomplementations\": 0") != std::string::npos);

  RunResult b2 = run("correspond " + fixture("b2.json") + " --appendix");
  CHECK(b2.exit_code == 0);
  CHECK(b2.output.find("\"num_strongly_separating\": 1") != std::string::npos);
  CHECK(b2.output.find("\"roundtrip_ok\": true") != std::string::npos);

  RunResult gf32 = run("correspond " + fixture("gf3_2.json"));
  CHECK(gf32.exit_code == 0);
  CHECK(gf32.output.find("\"num_strongly_separating\": 3") != std::string::npos);
}

TEST_CASE("enumerate: totals and determinism") {
  RunResult five = run("enumerate --max-size 5");
  CHECK(five.exit_code == 0);
  CHECK(five.output.find("\"total\": 10") != std::string::npos);

  RunResult roundtrip = run("enumerate --max-size 6 --roundtrip");
  CHECK(roundtrip.exit_code == 0);
  CHECK(roundtrip.output.find("\"roundtrips_ok\": true") != std::string::npos);

  RunResult two = run("enumerate --max-size 2");
  CHECK(two.exit_code == 0);
  CHECK(two.output.find("\"total\": 2") != std::string::npos);
  // both tiny lattices admit exactly one orthocomplementation
  std::size_t pos = 0;
  int ones = 0;
  while ((pos = two.output.find("\"num_orthocomplementations\": 1", pos)) !=
         std::string::npos) {
    ++ones;
    pos += 1;
  }
  CHECK(ones == 2);

  // byte-identical reports across runs, including threaded ones
  RunResult again = run("enumerate --max-size 6 --roundtrip");
  CHECK(again.output == roundtrip.output);
  RunResult threaded = run("--jobs 4 enumerate --max-size 6 --roundtrip");
  CHECK(threaded.output == roundtrip.output);
}

TEST_CASE("subspace: reports and emitted files") {
  RunResult gf32 = run("subspace --q 3 --dim 2 --form I");
  CHECK(gf32.exit_code == 0);
  CHECK(gf32.output.find("\"num_subspaces\": 6") != std::string::npos);
  CHECK(gf32.output.find("\"strongly_nondegenerate\": true") != std::string::npos);

  RunResult gf22 = run("subspace --q 2 --dim 2 --form I");
  CHECK(gf22.exit_code == 0);
  CHECK(gf22.output.find("\"nondegenerate\": false") != std::string::npos);
  CHECK(gf22.output.find("\"self_related_vector\"") != std::string::npos);

  RunResult fixture_run = run("subspace --q 2 --dim 3 --fixture paper");
  CHECK(fixture_run.exit_code == 0);
  CHECK(fixture_run.output.find("\"num_orthocomplementations\": 0") !=
        std::string::npos);

  CHECK(run("subspace --q 4 --dim 2").exit_code == 2);

  // emitted files agree with the bundled fixtures byte for byte
  std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
  RunResult emit = run("subspace --q 3 --dim 2 --form I --out-dir " + dir);
  CHECK(emit.exit_code == 0);
  auto slurp = [](const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };
  CHECK(slurp(dir + "/lattice.json") == slurp(fixture("gf3_2.json")));
  CHECK(slurp(dir + "/relation.json") == slurp(fixture("gf3_2_form.json")));

  RunResult gs = run("subspace --q 3 --dim 2 --form I --basis \"1,1;0,1\"");
  CHECK(gs.exit_code == 0);
  CHECK(gs.output.find("\"gram_schmidt\"") != std::string::npos);

  RunResult matrix = run("subspace --q 3 --dim 2 --form \"[[1,0],[0,1]]\"");
  CHECK(matrix.exit_code == 0);
  CHECK(matrix.output.find("\"strongly_nondegenerate\": true") !=
        std::string::npos);
  RunResult isotropic = run("subspace --q 3 --dim 2 --form \"[[1,0],[0,2]]\"");
  CHECK(isotropic.exit_code == 0);
  CHECK(isotropic.output.find("\"nondegenerate\": false") != std::string::npos);
  CHECK(run("subspace --q 3 --dim 2 --form \"[[1,0]]\"").exit_code == 2);
}

TEST_CASE("export-dot") {
  std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
  std::string out = dir + "/ortholoc_m3.dot";
  CHECK(run("export-dot " + fixture("m3.json") + " " + out).exit_code == 0);
  std::ifstream in(out);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string dot = buffer.str();
  std::size_t pos = 0;
  int edges = 0;
  while ((pos = dot.find("->", pos)) != std::string::npos) {
    ++edges;
    pos += 2;
  }
  CHECK(edges == 6);
  CHECK(dot.find("digraph") != std::string::npos);
}

TEST_CASE("size caps and their environment override") {
  CHECK(run("enumerate --max-size 9").exit_code == 2);
  std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                         "/ortholoc_cap_out.txt";
  std::string lowered = std::string("ORTHOLOC_CAP=4 ") + kCli +
                        " enumerate --max-size 5 > " + out_path + " 2>&1";
  CHECK(WEXITSTATUS(std::system(lowered.c_str())) == 2);
  std::string raised = std::string("ORTHOLOC_CAP=9 ") + kCli +
                       " enumerate --max-size 9 > " + out_path + " 2>&1";
  CHECK(WEXITSTATUS(std::system(raised.c_str())) == 0);
}

TEST_CASE("reports are byte-identical across runs") {
  std::string args = "locality " + fixture("gf2_3.json") + " " +
                     fixture("gf2_3_paper.json");
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.output == b.output);
  CHECK(run("--report text check " + fixture("m3.json") +
            " --properties modular")
            .output.find("modular: yes") != std::string::npos);
}
