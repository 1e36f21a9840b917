// Command-line front end: instance generation, cut separation, explicit
// family enumeration, certification, hull dumps and timing runs.
//
// Exit codes for `separate`: 0 = no violated cut (verdict in the JSON),
// 10 = violated cut emitted, 2 = error. Other commands: 0 ok, 1 = a
// certification failed (verify), 2 = error.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mixknap/error.hpp"
#include "mixknap/fdi.hpp"
#include "mixknap/generator.hpp"
#include "mixknap/heuristic.hpp"
#include "mixknap/hull.hpp"
#include "mixknap/io.hpp"
#include "mixknap/log.hpp"
#include "mixknap/separation.hpp"
#include "mixknap/structured.hpp"

namespace {

using namespace mixknap;
using ojson = nlohmann::ordered_json;

constexpr int kExitNoCut = 0;
constexpr int kExitCutFound = 10;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write '" + out_path + "'");
  out << payload;
}

RatVector parse_rat_list(const std::string& text) {
  RatVector values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(parse_rational(item));
  return values;
}

struct CommonOptions {
  std::string instance_path, query_path, out_path;
  std::string method = "exact";
  std::string patterns = "auto";
  std::string box;
  int m = -1, r = -1;
  bool all = false;
  std::uint64_t seed = 1;
  int jobs = 1;
  int limit = 0;
};

double wall_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - since)
      .count();
}

int cmd_generate(const CommonOptions& common, const GenerateOptions& gen) {
  std::string payload;
  if (gen.ccp) {
    payload = source_to_json(generate_source(gen));
  } else {
    payload = instance_to_json(generate_instance(gen));
  }
  write_output(common.out_path, payload);
  return 0;
}

SeparationResult run_one_method(const Instance& inst, const SeparationQuery& query,
                                const std::string& method,
                                const CommonOptions& common, const Rat& box) {
  if (method == "exact") return separate_exact(inst, query, box);
  if (method == "structured") {
    if (common.m >= 0 && !common.all) {
      int r = common.r >= 0 ? common.r : 0;
      return separate_structured(inst, query, common.m, r);
    }
    return separate_structured_all(inst, query, common.jobs).result;
  }
  if (method == "heuristic") {
    if (common.patterns != "auto" && !common.patterns.empty()) {
      // A pattern file holds {"R": [..], "S": [..]} objects, one per line.
      std::ifstream in(common.patterns);
      if (!in) throw Error("cannot open pattern file '" + common.patterns + "'");
      SeparationResult best;
      bool have = false;
      std::string line;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        auto doc = nlohmann::json::parse(line);
        SignPattern pattern;
        for (const auto& j : doc.at("R")) pattern.R.push_back(j.get<int>());
        for (const auto& j : doc.at("S")) pattern.S.push_back(j.get<int>());
        SeparationResult r = separate_heuristic(inst, query, pattern, box);
        if (!have || r.violation > best.violation) {
          best = r;
          have = true;
        }
      }
      if (!have) throw Error("pattern file holds no patterns");
      return best;
    }
    int limit = common.limit > 0 ? common.limit : 8;
    return separate_heuristic_auto(inst, query, box, limit, common.jobs);
  }
  throw BadFlags("unknown method '" + method + "'");
}

int cmd_separate(const CommonOptions& common) {
  Instance inst = load_instance_file(common.instance_path);
  SeparationQuery query = load_query_file(common.query_path);
  Rat box = common.box.empty() ? default_box(inst) : parse_rational(common.box);

  std::vector<std::string> methods;
  if (common.method == "all") {
    methods = {"structured", "heuristic", "exact"};
  } else {
    methods = {common.method};
  }

  ojson blocks = ojson::array();
  bool cut_found = false;
  for (const std::string& method : methods) {
    auto t0 = std::chrono::steady_clock::now();
    SeparationResult result = run_one_method(inst, query, method, common, box);
    MIXKNAP_LOG_INFO("%s separation took %.2f ms (violation %s)",
                     method.c_str(), wall_ms(t0),
                     to_string(result.violation).c_str());
    cut_found = cut_found || result.verdict == SeparationVerdict::CutFound;
    blocks.push_back(ojson::parse(result_to_json(result, method)));
  }

  std::string payload;
  if (blocks.size() == 1) {
    payload = blocks[0].dump(2) + "\n";
  } else {
    ojson doc;
    doc["results"] = std::move(blocks);
    payload = doc.dump(2) + "\n";
  }
  write_output(common.out_path, payload);
  return cut_found ? kExitCutFound : kExitNoCut;
}

int cmd_fdi(const CommonOptions& common) {
  Instance inst = load_instance_file(common.instance_path);
  FdiEnumerateOptions options;
  options.limit = common.limit > 0 ? common.limit : 200;
  options.facets_only = !common.all;
  std::string payload;
  for (const FdiSpec& spec : enumerate_fdi_specs(inst, options)) {
    FdiCut built = fdi_cut(inst, spec);
    CutRecord record;
    record.cut = built.cut;
    record.spec = spec;
    record.facet_claim = built.facet_claim;
    payload += cut_to_json_line(record);
  }
  write_output(common.out_path, payload);
  return 0;
}

int cmd_verify(const CommonOptions& common, const std::string& cuts_path) {
  Instance inst = load_instance_file(common.instance_path);
  int cap = common.limit > 0 ? common.limit : kDefaultHullCap;
  auto points = enumerate_hull_points(inst, cap);
  auto records = load_cuts_file(cuts_path);

  ojson lines = ojson::array();
  bool all_ok = true;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const MixingCut& cut = records[i].cut;
    ojson row;
    row["index"] = i;
    GMembershipReport membership = g_membership(inst, cut);
    ValidityReport validity = certify_valid(inst, cut, points);
    row["g_member"] = membership.member;
    row["valid"] = validity.valid;
    if (membership.member != validity.valid)
      throw Error("internal mismatch: membership and hull validity disagree");
    if (validity.valid) {
      FacetReport facet = certify_facet(inst, cut, points);
      row["facet"] = facet.is_facet;
      row["rank"] = facet.rank;
      row["tight_points"] = facet.tight_points.size();
      FacetSanityReport sanity = facet_sanity(inst, cut);
      row["rhs_matches_f0"] = sanity.rhs_matches_f0;
      row["negatives_weighted"] = sanity.negatives_weighted;
      if (records[i].facet_claim && *records[i].facet_claim != facet.is_facet)
        all_ok = false;
    } else {
      all_ok = false;
      row["worst_y"] = to_string(validity.worst.y);
    }
    lines.push_back(std::move(row));
  }
  ojson doc;
  doc["instance"] = common.instance_path;
  doc["cuts"] = std::move(lines);
  doc["all_valid"] = all_ok;
  write_output(common.out_path, doc.dump(2) + "\n");
  return all_ok ? 0 : kExitCheckFailed;
}

int cmd_hull(const CommonOptions& common) {
  Instance inst = load_instance_file(common.instance_path);
  int cap = common.limit > 0 ? common.limit : kDefaultHullCap;
  write_output(common.out_path,
               hull_to_json(inst, enumerate_hull_points(inst, cap)));
  return 0;
}

int cmd_bench(const CommonOptions& common, int bench_n,
              const std::string& p_list) {
  RatVector ps = parse_rat_list(p_list);
  if (ps.empty()) throw BadFlags("bench needs a nonempty --p grid");

  std::string csv = "n,p,mr_pairs,wall_ms\n";
  std::vector<double> log_p, log_t;
  for (const Rat& p : ps) {
    long pl = to_long(p);
    if (pl < 1 || pl >= bench_n) throw BadFlags("bench needs 1 <= p < n");
    RatVector h, a(bench_n, Rat(1));
    SplitMix64 rng(common.seed);
    for (int j = 0; j < bench_n; ++j)
      h.emplace_back(static_cast<long>(rng.below(1000)));
    std::sort(h.begin(), h.end(), std::greater<Rat>());
    if (h[0] == 0) h[0] = 1;
    Instance inst = Instance::canonicalize(std::move(h), std::move(a), p);

    SeparationQuery query;
    query.y_star = 0;
    for (int j = 0; j < bench_n; ++j)
      query.z_star.emplace_back(static_cast<long>(rng.below(5)), 4);

    auto t0 = std::chrono::steady_clock::now();
    StructuredAllResult all = separate_structured_all(inst, query, common.jobs);
    double ms = wall_ms(t0);
    csv += std::to_string(bench_n) + "," + std::to_string(pl) + "," +
           std::to_string(all.per_pair.size()) + "," + std::to_string(ms) + "\n";
    log_p.push_back(std::log(static_cast<double>(pl)));
    log_t.push_back(std::log(std::max(ms, 1e-3)));
  }
  if (ps.size() >= 2) {
    double n = static_cast<double>(log_p.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < log_p.size(); ++i) {
      sx += log_p[i];
      sy += log_t[i];
      sxx += log_p[i] * log_p[i];
      sxy += log_p[i] * log_t[i];
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    csv += "# log-log slope in p: " + std::to_string(slope) + "\n";
  }
  write_output(common.out_path, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cut machinery for the mixing set with a knapsack constraint"};
  app.require_subcommand(1);

  CommonOptions common;
  GenerateOptions gen;
  std::string weights_list, values_list, p_value, epsilon_value, cuts_path;
  int bench_n = 2000;
  std::string bench_p = "25,50,100";

  auto add_common = [&](CLI::App* cmd, bool with_instance) {
    if (with_instance)
      cmd->add_option("--instance", common.instance_path, "instance JSON file")
          ->required();
    cmd->add_option("--out", common.out_path, "output path (default stdout)");
    cmd->add_option("--seed", common.seed, "deterministic seed");
    cmd->add_option("--jobs", common.jobs, "worker thread cap");
    cmd->add_option("--limit", common.limit, "budget (patterns/specs/hull cap)");
  };

  CLI::App* generate = app.add_subcommand("generate", "emit a random instance");
  add_common(generate, false);
  generate->add_option("--n", gen.n, "scenario count");
  generate->add_flag("--cardinality", gen.cardinality, "unit weights, p = floor(0.6 n)");
  generate->add_flag("--ccp", gen.ccp, "emit a chance-constrained source");
  generate->add_option("--weights", weights_list, "explicit weights a, comma-separated");
  generate->add_option("--h", values_list, "explicit values h, comma-separated");
  generate->add_option("--p", p_value, "explicit capacity");
  generate->add_option("--epsilon", epsilon_value, "risk level for --ccp");

  CLI::App* separate = app.add_subcommand("separate", "separate a point");
  add_common(separate, true);
  separate->add_option("--query", common.query_path, "query JSON file")->required();
  separate->add_option("--method", common.method,
                       "exact | structured | heuristic | all");
  separate->add_option("--m", common.m, "structured: fixed level m");
  separate->add_option("--r", common.r, "structured: forced positions r");
  separate->add_flag("--all", common.all, "structured: sweep all (m, r)");
  separate->add_option("--patterns", common.patterns,
                       "heuristic: auto or a pattern file");
  separate->add_option("--box", common.box, "coefficient box half-width");

  CLI::App* fdi = app.add_subcommand("fdi", "enumerate the explicit family");
  add_common(fdi, true);
  fdi->add_flag("--all", common.all, "all admissible members, not only facets");

  CLI::App* verify = app.add_subcommand("verify", "certify a cut file");
  add_common(verify, true);
  verify->add_option("cuts", cuts_path, "cut file (JSON lines)")->required();

  CLI::App* hull = app.add_subcommand("hull", "dump the feasible hull points");
  add_common(hull, true);

  CLI::App* bench = app.add_subcommand("bench", "time structured separation");
  add_common(bench, false);
  bench->add_option("--n", bench_n, "scenario count");
  bench->add_option("--p", bench_p, "comma-separated capacity grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (generate->parsed()) {
      if (!weights_list.empty()) gen.weights = parse_rat_list(weights_list);
      if (!values_list.empty()) gen.values = parse_rat_list(values_list);
      if (!p_value.empty()) gen.p = parse_rational(p_value);
      if (!epsilon_value.empty()) gen.epsilon = parse_rational(epsilon_value);
      gen.seed = common.seed;
      return cmd_generate(common, gen);
    }
    if (separate->parsed()) return cmd_separate(common);
    if (fdi->parsed()) return cmd_fdi(common);
    if (verify->parsed()) return cmd_verify(common, cuts_path);
    if (hull->parsed()) return cmd_hull(common);
    if (bench->parsed()) return cmd_bench(common, bench_n, bench_p);
  } catch (const std::exception& e) {
    MIXKNAP_LOG_ERROR("%s", e.what());
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
