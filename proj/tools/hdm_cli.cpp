// hdm: Hasse diagrams of fundamental representations and the maps between them.
//
//   hdm hasse G2 fund:short --format dot
//   hdm map A6 fund:1 G2 fund:short
//   hdm classify --max-rank 6 --format json
//   hdm verify --max-rank 8
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or configuration
// error, 3 non-dominant or zero weight.

#include "hdm/io.hpp"

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitWeight = 3;

struct RunConfig {
  int max_rank = hdm::kMaxClassifyRank;
  bool no_extremal_constraint = false;
  std::string format = "text";
  std::string output;
  bool include_identity = false;
  bool witnesses = false;
  unsigned threads = 0;
  std::string expected_path;
};

int emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << cfg.output << "\n";
    return kExitUsage;
  }
  out << text;
  return 0;
}

int cmd_hasse(const std::string& system, const std::string& weight, const RunConfig& cfg) {
  const auto spec = hdm::parse_diagram_spec(system, weight);
  const auto d = hdm::build_hasse(hdm::RootSystem(spec.system), spec.highest);
  if (cfg.format == "dot") return emit(cfg, hdm::export_dot(d));
  if (cfg.format == "json") return emit(cfg, hdm::dump(hdm::diagram_to_json(d)));
  return emit(cfg, hdm::diagram_to_text(d));
}

int cmd_map(const std::array<std::string, 4>& args, const RunConfig& cfg) {
  const auto src = hdm::parse_diagram_spec(args[0], args[1]);
  const auto tgt = hdm::parse_diagram_spec(args[2], args[3]);
  hdm::DiagramCache cache;
  const auto sd = cache.get(src.system, src.highest);
  const auto td = cache.get(tgt.system, tgt.highest);
  const auto maps = hdm::find_maps(sd, td);
  if (cfg.format == "json") return emit(cfg, hdm::dump(hdm::maps_to_json(*sd, *td, maps)));
  return emit(cfg, hdm::maps_to_text(maps));
}

hdm::ClassifyOptions classify_options(const RunConfig& cfg) { return {!cfg.no_extremal_constraint, cfg.threads}; }

int cmd_classify(const RunConfig& cfg) {
  const auto entries = hdm::classify_all(cfg.max_rank, classify_options(cfg));
  const hdm::ClassificationOutput out{cfg.max_rank, !cfg.no_extremal_constraint, cfg.include_identity, cfg.witnesses};
  if (cfg.format == "json") return emit(cfg, hdm::dump(hdm::classification_to_json(entries, out)));
  return emit(cfg, hdm::classification_to_text(entries, out));
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<hdm::ExpectedPair> expected;
  if (cfg.expected_path.empty()) {
    expected = hdm::expected_pairs(hdm::expected_table(), cfg.max_rank);
  } else {
    std::ifstream in(cfg.expected_path);
    if (!in) throw hdm::ParseError("cannot read expected table " + cfg.expected_path);
    nlohmann::json j;
    try {
      in >> j;
      expected = hdm::expected_from_json(j);
    } catch (const nlohmann::json::exception& e) {
      throw hdm::ParseError(std::string("malformed expected table: ") + e.what());
    }
    std::erase_if(expected, [&](const auto& p) { return p.source.rank > cfg.max_rank; });
  }
  const auto entries = hdm::classify_all(cfg.max_rank, classify_options(cfg));
  const auto report = hdm::verify_against_expected(entries, expected);
  if (const int rc = emit(cfg, hdm::format_report(report)); rc != 0) return rc;
  return report.ok() ? 0 : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hasse diagrams of fundamental representations and surjective diagram maps"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(std::move(allowed)));
    sub->add_option("--output", cfg.output, "write to this file instead of stdout");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--max-rank", cfg.max_rank, "largest source rank searched (2..8)");
    sub->add_flag("--no-extremal-constraint", cfg.no_extremal_constraint,
                  "allow extremal nodes to map to non-extremal nodes");
    sub->add_option("--threads", cfg.threads, "worker threads (0 = hardware concurrency)");
  };

  std::string system, weight;
  auto* hasse = app.add_subcommand("hasse", "build the Hasse diagram of a dominant weight");
  hasse->add_option("system", system, "system type, e.g. G2")->required();
  hasse->add_option("weight", weight, "fund:<node> or [k1,...,kn]")->required();
  add_format(hasse, {"dot", "json", "text"});

  // separate positionals: CLI11 would read "[1,0]" as a bracketed list for a vector option
  std::array<std::string, 4> map_args;
  auto* map = app.add_subcommand("map", "list labelings inducing a map between two diagrams");
  map->add_option("src_system", map_args[0], "source system")->required();
  map->add_option("src_weight", map_args[1], "source weight")->required();
  map->add_option("tgt_system", map_args[2], "target system")->required();
  map->add_option("tgt_weight", map_args[3], "target weight")->required();
  add_format(map, {"json", "text"});

  auto* classify = app.add_subcommand("classify", "search all pairs of systems up to a rank");
  add_format(classify, {"json", "text"});
  add_search(classify);
  classify->add_flag("--witnesses", cfg.witnesses, "include witness maps and rejection certificates");
  classify->add_flag("--include-identity", cfg.include_identity, "report identity pairs");

  auto* verify = app.add_subcommand("verify", "compare the classification with the built-in table");
  add_search(verify);
  verify->add_option("--output", cfg.output, "write the report to this file");
  verify->add_option("--expected", cfg.expected_path, "JSON table to compare against instead of the built-in one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*hasse) return cmd_hasse(system, weight, cfg);
    if (*map) return cmd_map(map_args, cfg);
    if (*classify) return cmd_classify(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const hdm::WeightError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitWeight;
  } catch (const hdm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
