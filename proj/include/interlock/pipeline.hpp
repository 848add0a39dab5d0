#pragma once

// File-level pipeline behind the command-line tool: ingest -> project ->
// analyze -> report. Every command is a deterministic function of its input
// bytes and configuration; the worker count never changes output bytes.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "interlock/affiliation_csv.hpp"
#include "interlock/centrality.hpp"
#include "interlock/cohesion.hpp"
#include "interlock/concordance.hpp"
#include "interlock/error.hpp"
#include "interlock/fixtures.hpp"
#include "interlock/pajek.hpp"
#include "interlock/projection.hpp"
#include "interlock/random.hpp"
#include "interlock/report.hpp"
#include "interlock/validate.hpp"

namespace interlock {

enum class InputFormat { affiliation_csv, pajek_net };

struct RunConfig {
  std::filesystem::path input;
  InputFormat format = InputFormat::pajek_net;
  std::filesystem::path out = ".";
  ClosenessVariant closeness = ClosenessVariant::corrected;
  std::vector<std::size_t> thresholds = {1};
  std::size_t min_size = 2;
  bool json = false;
  std::size_t workers = 1;
  std::uint64_t seed = 1;

  /// Thresholds >= 1 and strictly increasing; workers >= 1.
  void check() const {
    if (workers < 1) throw Error(ErrorKind::invalid_argument, "--workers must be >= 1");
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
      if (thresholds[i] < 1) throw Error(ErrorKind::invalid_argument, "m thresholds must be >= 1");
      if (i && thresholds[i] <= thresholds[i - 1]) {
        throw Error(ErrorKind::invalid_argument, "m thresholds must be strictly increasing");
      }
    }
  }
};

struct CommandResult {
  std::vector<std::filesystem::path> written;
  IngestWarnings warnings;
};

namespace pipeline_detail {

inline std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open input " + path.string());
  return in;
}

inline std::string with_file(const std::filesystem::path& path, const Error& e) {
  return path.string() + ": " + e.what();
}

/// Re-raises an ingest error with the file name in front.
template <typename F>
auto read_file(const std::filesystem::path& path, F&& parse) {
  auto in = open_input(path);
  try {
    return parse(in);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.detail(), e.line());
  }
}

inline void write_file(CommandResult& result, const std::filesystem::path& path,
                       const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path.string());
  out << bytes;
  out.close();
  if (!out) throw Error(ErrorKind::io, "failed writing " + path.string());
  result.written.push_back(path);
}

inline void prepare_out(const RunConfig& cfg) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.out, ec);
  if (ec) throw Error(ErrorKind::io, "cannot create output directory " + cfg.out.string());
}

inline std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace pipeline_detail

inline AffiliationNetwork load_affiliation(const RunConfig& cfg, IngestWarnings& warnings) {
  return pipeline_detail::read_file(cfg.input, [&](std::istream& in) {
    return cfg.format == InputFormat::affiliation_csv ? read_affiliation_csv(in, &warnings)
                                                      : read_pajek_affiliation(in, &warnings);
  });
}

/// A one-mode network: read as Pajek, or projected from an affiliation CSV.
inline JournalGraph load_network(const RunConfig& cfg, IngestWarnings& warnings) {
  if (cfg.format == InputFormat::affiliation_csv) return project(load_affiliation(cfg, warnings));
  return pipeline_detail::read_file(
      cfg.input, [&](std::istream& in) { return read_pajek_net(in, &warnings); });
}

/// network.net, summary.csv, degree_distribution.csv, line_values.csv.
inline CommandResult run_project(const RunConfig& cfg) {
  using namespace pipeline_detail;
  cfg.check();
  CommandResult result;
  const auto a = load_affiliation(cfg, result.warnings);
  const auto g = project(a);
  const auto summary = summarize(a, g);
  prepare_out(cfg);
  write_file(result, cfg.out / "network.net", write_pajek_net(g));
  write_file(result, cfg.out / "summary.csv", summary.to_csv());
  write_file(result, cfg.out / "degree_distribution.csv", degree_distribution(g).to_csv("degree", 1));
  write_file(result, cfg.out / "line_values.csv", line_value_distribution(g).to_csv("line_value", 2));
  if (cfg.json) {
    nlohmann::ordered_json j;
    j["journals"] = summary.journals;
    j["editors"] = summary.editors;
    j["seats"] = summary.seats;
    j["mean_seats_per_journal"] = summary.mean_seats_per_journal;
    j["mean_participation"] = summary.mean_participation;
    j["lines"] = summary.lines;
    j["density"] = summary.density;
    j["mean_degree"] = summary.mean_degree;
    j["median_degree"] = summary.median_degree;
    j["degree_sd"] = summary.degree_sd;
    write_file(result, cfg.out / "summary.json", dump(j));
  }
  return result;
}

/// centrality.csv, centralization.csv, concordance.json.
inline CommandResult run_analyze(const RunConfig& cfg) {
  using namespace pipeline_detail;
  cfg.check();
  CommandResult result;
  const auto g = load_network(cfg, result.warnings);
  if (g.vertex_count() < 3) {
    throw Error(ErrorKind::degenerate_network, "analysis needs at least 3 journals");
  }
  const auto report = centrality_report(g, cfg.closeness, cfg.workers);
  const auto indices = centralization(g, cfg.workers);
  const auto concordance = centrality_concordance(report);
  prepare_out(cfg);
  write_file(result, cfg.out / "centrality.csv", report.to_csv());
  write_file(result, cfg.out / "centralization.csv", indices.to_csv());
  write_file(result, cfg.out / "concordance.json", dump(concordance.to_json()));
  if (cfg.json) {
    nlohmann::ordered_json j;
    j["degree_centralization"] = indices.degree_centralization;
    j["closeness_centralization"] = indices.closeness_centralization;
    j["betweenness_centralization"] = indices.betweenness_centralization;
    j["closeness_subnetwork_size"] = indices.closeness_subnetwork_size;
    write_file(result, cfg.out / "centralization.json", dump(j));
  }
  return result;
}

/// slices.csv plus, per threshold m, components_m<m>.txt and slice_m<m>.clu.
inline CommandResult run_slices(const RunConfig& cfg) {
  using namespace pipeline_detail;
  cfg.check();
  if (cfg.thresholds.empty()) throw Error(ErrorKind::invalid_argument, "--m list is empty");
  CommandResult result;
  const auto g = load_network(cfg, result.warnings);
  std::vector<double> betweenness(g.vertex_count(), 0.0);
  if (g.vertex_count() >= 3) betweenness = betweenness_centrality(g, cfg.workers);
  prepare_out(cfg);
  std::string table = SliceCensus::kCsvHeader;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t m : cfg.thresholds) {
    const auto slice = m_slice(g, m);
    const auto parts = components(slice);
    const auto census = census_of(parts, m);
    table += census.csv_row();
    rows.push_back({{"m", m},
                    {"components", census.component_count_nontrivial},
                    {"journals", census.journals_in_nontrivial},
                    {"isolated", census.isolated},
                    {"giant", census.giant_size},
                    {"components_total", census.component_count_total}});
    const auto groups = component_members(g, m, cfg.min_size, betweenness);
    const std::string k = std::to_string(m);
    write_file(result, cfg.out / ("components_m" + k + ".txt"), format_groups(groups, m));
    write_file(result, cfg.out / ("slice_m" + k + ".clu"), write_pajek_clu(parts));
  }
  write_file(result, cfg.out / "slices.csv", table);
  if (cfg.json) write_file(result, cfg.out / "slices.json", dump(rows));
  return result;
}

/// components.csv (journal -> component), components.clu, census.csv.
inline CommandResult run_components(const RunConfig& cfg) {
  using namespace pipeline_detail;
  cfg.check();
  CommandResult result;
  const auto g = load_network(cfg, result.warnings);
  const auto parts = components(g);
  prepare_out(cfg);
  std::string table = "journal,component,component_size\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const ComponentId c = parts.assignment[v];
    table += text::csv_field(g.labels()[v]) + ',' + std::to_string(c + 1) + ',' +
             std::to_string(parts.sizes[c]) + '\n';
  }
  write_file(result, cfg.out / "components.csv", table);
  write_file(result, cfg.out / "components.clu", write_pajek_clu(parts));
  write_file(result, cfg.out / "census.csv",
             std::string(SliceCensus::kCsvHeader) + census_of(parts, 1).csv_row());
  return result;
}

/// concordance.json from a per-journal table (`centrality.csv` or fixture).
inline CommandResult run_concord(const RunConfig& cfg) {
  using namespace pipeline_detail;
  cfg.check();
  CommandResult result;
  const auto rows =
      read_file(cfg.input, [](std::istream& in) { return read_fixture_a1(in); });
  const auto concordance = centrality_concordance(report_from_rows(rows));
  prepare_out(cfg);
  write_file(result, cfg.out / "concordance.json", dump(concordance.to_json()));
  return result;
}

/// affiliation CSV -> two-mode `affiliation.net`, or the reverse.
inline CommandResult run_convert(const RunConfig& cfg) {
  using namespace pipeline_detail;
  cfg.check();
  CommandResult result;
  const auto a = load_affiliation(cfg, result.warnings);
  prepare_out(cfg);
  if (cfg.format == InputFormat::affiliation_csv) {
    write_file(result, cfg.out / "affiliation.net", write_pajek_affiliation(a));
  } else {
    write_file(result, cfg.out / "affiliation.csv", write_affiliation_csv(a));
  }
  return result;
}

struct GenerateOptions {
  enum class Kind { graph, affiliation };
  Kind kind = Kind::graph;
  std::size_t vertices = 100;
  double probability = 0.05;
  LineValue max_value = 5;
  std::size_t editors = 200;
  std::size_t journals = 40;
};

/// random.net (valued graph) or random_affiliation.csv from `cfg.seed`.
inline CommandResult run_generate(const RunConfig& cfg, const GenerateOptions& opt) {
  using namespace pipeline_detail;
  cfg.check();
  if (opt.probability < 0 || opt.probability > 1) {
    throw Error(ErrorKind::invalid_argument, "probability must lie in [0, 1]");
  }
  CommandResult result;
  prepare_out(cfg);
  if (opt.kind == GenerateOptions::Kind::graph) {
    const auto g = random_graph(opt.vertices, opt.probability, opt.max_value, cfg.seed);
    write_file(result, cfg.out / "random.net", write_pajek_net(g));
  } else {
    const auto a = random_affiliation(opt.editors, opt.journals, opt.probability, cfg.seed);
    write_file(result, cfg.out / "random_affiliation.csv", write_affiliation_csv(a));
  }
  return result;
}

}  // namespace interlock
