// End-to-end checks of the command-line surface. Runs the installed binary
// as a subprocess; argv[1] is the binary, argv[2] the fixtures directory.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

std::string g_cli;
std::string g_fixtures;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  const std::string command =
      "\"" + g_cli + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

int g_failures = 0;

void expect(bool ok, const std::string& what, const std::string& detail = {}) {
  if (ok) {
    std::cout << "ok: " << what << "\n";
  } else {
    ++g_failures;
    std::cout << "FAIL: " << what << "\n";
    if (!detail.empty()) std::cout << "  " << detail << "\n";
  }
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string fixture(const std::string& name) { return g_fixtures + "/" + name; }

std::string temp_path(const std::string& name) { return "/tmp/mmagic_cli_test_" + name; }

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: test_cli <mmagic-binary> <fixtures-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_fixtures = argv[2];

  // generate: table output and exit codes
  {
    const RunResult r = run("generate --family m-magic --n 9 --m 4 --format table");
    expect(r.exit_code == 0, "generate m-magic table exits 0", r.output);
    expect(contains(r.output, "mu: 0.26 0.24 0.25 0.23 0.25 0.23 0.23 0.21"),
           "generate m-magic table rows", r.output);
  }
  {
    const RunResult r = run("generate --family m-magic --n 8 --m 4", true);
    expect(r.exit_code == 1, "inadmissible instance exits 1");
    expect(contains(r.output, "inadmissible:"), "inadmissible message", r.output);
  }
  {
    const RunResult r = run("generate --family bimagic --n 9");
    expect(r.exit_code == 2, "two-constant scheme at n = 9 exits 2");
    expect(contains(r.output, "verification-failed"), "failing document is still emitted",
           r.output);
  }
  {
    const RunResult r = run("generate --family magic --n 5 --m 1", true);
    expect(r.exit_code == 64, "--m conflicts with --family magic", r.output);
  }
  {
    const RunResult r = run("generate --family m-magic --n 9", true);
    expect(r.exit_code == 64, "missing --m for m-magic", r.output);
  }
  {
    const RunResult r = run("generate --family magic --n 5 --no-such-flag", true);
    expect(r.exit_code == 64, "unknown flag exits 64", r.output);
  }
  {
    const RunResult r = run("generate --family m-magic --n 9 --m 4 --scale-exp 1", true);
    expect(r.exit_code == 1, "scale too coarse exits 1", r.output);
  }

  // generate -> verify round trip via a file
  {
    const std::string doc_path = temp_path("doc.json");
    const RunResult gen = run("generate --family m-magic --n 9 --m 4 --out " + doc_path);
    expect(gen.exit_code == 0, "generate --out writes a document");
    const RunResult ver = run("verify --input " + doc_path + " --m 4 --mode strict");
    expect(ver.exit_code == 0, "verify of the generated document exits 0", ver.output);

    std::ifstream in(doc_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto doc = nlohmann::json::parse(buffer.str());
    const auto in_process = doc.at("checks").at("m_magic");
    const auto reverified = nlohmann::json::parse(ver.output);
    expect(in_process == reverified, "serialized verify matches the in-process report");
  }

  // verify on the fixture labelings
  {
    const RunResult r = run("verify --input " + fixture("bipolar9_four_constants.json") + " --m 4 --mode strict");
    expect(r.exit_code == 0, "bipolar fixture verifies", r.output);
  }
  {
    const RunResult r = run("verify --input " + fixture("path5_one_constant.json") + " --m 1");
    expect(r.exit_code == 0, "one-constant fixture verifies", r.output);
  }
  {
    const RunResult r =
        run("verify --input " + fixture("path9_four_constants_perturbed.json") + " --m 4 --mode strict");
    expect(r.exit_code == 2, "perturbed fixture fails verification");
    expect(contains(r.output, "\"passed\": false"), "perturbed report says failed", r.output);
  }
  {
    const RunResult r = run("verify --input " + fixture("malformed.json") + " --m 4", true);
    expect(r.exit_code == 3, "malformed JSON exits 3", r.output);
  }
  {
    const RunResult r = run("verify --input /no/such/file.json --m 4", true);
    expect(r.exit_code == 3, "missing input exits 3", r.output);
  }

  // oracle
  {
    const RunResult r = run("oracle --n 3 --m 1 --grid 5 --mode lax");
    expect(r.exit_code == 0, "oracle finds a witness", r.output);
    expect(contains(r.output, "\"verdict\":\"found\""), "oracle verdict line", r.output);
    expect(contains(r.output, "\"sigma\":[1,1,1]"), "oracle witness line", r.output);
  }
  {
    const RunResult r = run("oracle --n 7 --m 6 --grid 2 --mode strict");
    expect(r.exit_code == 2, "oracle exhausts without witnesses", r.output);
    expect(contains(r.output, "\"verdict\":\"exhausted-none\""), "oracle exhausted verdict",
           r.output);
  }
  {
    const RunResult r = run("oracle --n 9 --m 1 --grid 5", true);
    expect(r.exit_code == 64, "oracle bounds exit 64", r.output);
  }

  // sweep determinism
  {
    const RunResult a = run("sweep --family m-magic --m-range 3..5 --a-range 0..2");
    const RunResult b = run("sweep --family m-magic --m-range 3..5 --a-range 0..2");
    expect(a.exit_code == 0, "sweep exits 0", a.output);
    int lines = 0;
    for (char c : a.output) lines += c == '\n';
    expect(lines == 10, "sweep emits header + 9 rows");
    expect(a.output == b.output, "sweep output is byte-stable");
    expect(contains(a.output, "m-magic,9,4,0,2,0.29;0.32;0.36;0.38,true"), "sweep row content",
           a.output);
  }
  {
    const RunResult r = run("sweep --family m-magic --m-range 5..3 --a-range 0..2", true);
    expect(r.exit_code == 64, "reversed sweep range exits 64", r.output);
  }

  // render
  {
    const RunResult r = run("render --input " + fixture("path5_one_constant.json"));
    expect(r.exit_code == 0, "render exits 0");
    int edges = 0;
    for (std::size_t at = r.output.find("--"); at != std::string::npos;
         at = r.output.find("--", at + 2)) {
      ++edges;
    }
    expect(edges == 4, "render draws 4 edges", r.output);
    for (const char* label : {"0.12", "0.10", "0.08", "0.06"}) {
      expect(contains(r.output, std::string("μ=") + label),
             std::string("render edge label ") + label, r.output);
    }
  }

  // config file feeds flags
  {
    const RunResult direct = run("generate --family m-magic --n 9 --m 4 --format table");
    const RunResult via_config = run("generate --config " + fixture("config_generate.json"));
    expect(via_config.exit_code == 0, "generate via config exits 0", via_config.output);
    expect(via_config.output == direct.output, "config output matches explicit flags");
    const RunResult overridden =
        run("generate --config " + fixture("config_generate.json") + " --format json");
    expect(contains(overridden.output, "\"kind\": \"anti-fuzzy-path\""),
           "explicit flags win over config", overridden.output);
  }

  std::cout << (g_failures == 0 ? "ALL CLI CHECKS PASSED\n" : "CLI CHECKS FAILED\n");
  return g_failures == 0 ? 0 : 1;
}
