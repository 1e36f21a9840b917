// End-to-end checks of the command-line surface: flags, exit codes and
// byte-stable output files.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

fs::path tmpdir() {
  fs::path dir = MIXKNAP_TEST_TMPDIR;
  fs::create_directories(dir);
  return dir;
}

int run(const std::string& args) {
  std::string cmd = std::string(MIXKNAP_CLI_PATH) + " " + args;
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("generate pass-through and determinism") {
  fs::path dir = tmpdir();
  fs::path inst = dir / "i1.json";
  int code = run("generate --n 4 --weights 3,2,2,1 --p 5 --h 10,7,4,2 --out " +
                 inst.string());
  CHECK(code == 0);
  std::string first = slurp(inst);
  CHECK(first.find("10") != std::string::npos);

  fs::path inst2 = dir / "i1b.json";
  run("generate --n 4 --weights 3,2,2,1 --p 5 --h 10,7,4,2 --out " +
      inst2.string());
  CHECK(slurp(inst2) == first);

  fs::path r1 = dir / "r1.json";
  fs::path r2 = dir / "r2.json";
  CHECK(run("generate --n 6 --seed 9 --out " + r1.string()) == 0);
  CHECK(run("generate --n 6 --seed 9 --out " + r2.string()) == 0);
  CHECK(slurp(r1) == slurp(r2));

  fs::path ccp = dir / "ccp.json";
  CHECK(run("generate --ccp --n 5 --epsilon 3/5 --seed 1 --out " + ccp.string()) == 0);
  CHECK(slurp(ccp).find("epsilon") != std::string::npos);

  fs::path card = dir / "card.json";
  CHECK(run("generate --n 5 --cardinality --seed 2 --out " + card.string()) == 0);
  CHECK(slurp(card).find("\"p\": 3") != std::string::npos);
}

TEST_CASE("separate exit codes follow the contract") {
  fs::path dir = tmpdir();
  fs::path inst = dir / "inst.json";
  spit(inst, R"({"h": [8,6,5,3,1], "a": [1,1,1,1,1], "p": 3})");

  fs::path violated = dir / "violated.json";
  spit(violated, R"({"y": 3, "z": [0.5, 0.5, 0.5, 0.75, 0.75]})");
  fs::path out = dir / "sep.json";
  int code = run("separate --instance " + inst.string() + " --query " +
                 violated.string() + " --method exact --out " + out.string());
  CHECK(code == 10);
  std::string payload = slurp(out);
  CHECK(payload.find("cut-found") != std::string::npos);

  fs::path inside = dir / "inside.json";
  spit(inside, R"({"y": 8, "z": [0, 0, 0, 0, 0]})");
  code = run("separate --instance " + inst.string() + " --query " +
             inside.string() + " --method exact --out " + out.string());
  CHECK(code == 0);

  code = run("separate --instance " + inst.string() + " --query missing.json");
  CHECK(code == 2);

  code = run("separate --instance " + inst.string());
  CHECK(code == 2);  // missing required --query
}

TEST_CASE("separate supports every method plus the combined sweep") {
  fs::path dir = tmpdir();
  fs::path inst = dir / "inst2.json";
  spit(inst, R"({"h": [8,6,5,3,1], "a": [1,1,1,1,1], "p": 3})");
  fs::path query = dir / "q2.json";
  spit(query, R"({"y": 3, "z": [0.5, 0.5, 0.5, 0.75, 0.75]})");

  fs::path out = dir / "m.json";
  CHECK(run("separate --instance " + inst.string() + " --query " + query.string() +
            " --method structured --m 1 --r 0 --out " + out.string()) == 10);
  CHECK(slurp(out).find("fdi") != std::string::npos);

  CHECK(run("separate --instance " + inst.string() + " --query " + query.string() +
            " --method structured --all --out " + out.string()) == 10);

  CHECK(run("separate --instance " + inst.string() + " --query " + query.string() +
            " --method heuristic --patterns auto --limit 4 --out " + out.string()) == 10);

  CHECK(run("separate --instance " + inst.string() + " --query " + query.string() +
            " --method all --jobs 2 --box 11 --out " + out.string()) == 10);
  std::string payload = slurp(out);
  CHECK(payload.find("structured") != std::string::npos);
  CHECK(payload.find("heuristic") != std::string::npos);
  CHECK(payload.find("exact") != std::string::npos);

  // Deterministic output bytes on a re-run.
  fs::path out2 = dir / "m2.json";
  run("separate --instance " + inst.string() + " --query " + query.string() +
      " --method all --jobs 2 --box 11 --out " + out2.string());
  CHECK(slurp(out2) == payload);
}

TEST_CASE("fdi, verify and hull round-trip") {
  fs::path dir = tmpdir();
  fs::path inst = dir / "inst3.json";
  spit(inst, R"({"h": [8,6,5,3,1], "a": [1,1,1,1,1], "p": 3})");

  fs::path cuts = dir / "cuts.jsonl";
  CHECK(run("fdi --instance " + inst.string() + " --limit 50 --out " +
            cuts.string()) == 0);
  std::string lines = slurp(cuts);
  CHECK(lines.find("facet_claim") != std::string::npos);

  fs::path report = dir / "verify.json";
  CHECK(run("verify --instance " + inst.string() + " " + cuts.string() +
            " --out " + report.string()) == 0);
  CHECK(slurp(report).find("\"all_valid\": true") != std::string::npos);

  // A corrupted cut must flip the exit code.
  fs::path bad = dir / "bad.jsonl";
  spit(bad, R"({"alpha": [0,0,0,0,0], "beta": 100, "provenance": "manual"})"
            "\n");
  CHECK(run("verify --instance " + inst.string() + " " + bad.string() +
            " --out " + report.string()) == 1);

  fs::path hull = dir / "hull.json";
  CHECK(run("hull --instance " + inst.string() + " --out " + hull.string()) == 0);
  CHECK(slurp(hull).find("\"points\"") != std::string::npos);
}

TEST_CASE("bench emits a CSV grid with a slope line") {
  fs::path dir = tmpdir();
  fs::path csv = dir / "bench.csv";
  CHECK(run("bench --n 60 --p 6,10,14 --seed 3 --out " + csv.string()) == 0);
  std::string payload = slurp(csv);
  CHECK(payload.find("n,p,mr_pairs,wall_ms") != std::string::npos);
  CHECK(payload.find("slope") != std::string::npos);
  CHECK(run("bench --n 10 --p '' --out " + csv.string()) == 2);
}
