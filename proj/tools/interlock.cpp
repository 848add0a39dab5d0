// interlock: command-line front end for the journal interlock pipeline.
//
//   interlock project    --input boards.csv --out run/
//   interlock analyze    --input run/network.net --out run/ --workers 4
//   interlock slices     --input run/network.net --m 2,3,6 --out run/
//   interlock components --input run/network.net --out run/
//   interlock concord    --input run/centrality.csv --out run/
//   interlock convert    --input boards.csv --out run/
//   interlock validate   --input data/fixtures
//   interlock generate   --kind graph --vertices 2000 --probability 0.004 --seed 7 --out run/

#include <cstdint>
#include <exception>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "interlock/interlock.hpp"

namespace {

using interlock::InputFormat;

struct Options {
  std::string input;
  std::string format;  // empty: infer from the file extension
  std::string out = ".";
  std::string closeness = "corrected";
  std::vector<std::size_t> thresholds;
  std::size_t min_size = 2;
  std::size_t workers = 1;
  std::vector<std::string> reports = {"csv"};
  std::uint64_t seed = 1;
  interlock::GenerateOptions generate;
  std::string kind = "graph";
};

InputFormat resolve_format(const Options& o) {
  if (o.format == "affiliation-csv") return InputFormat::affiliation_csv;
  if (o.format == "pajek-net") return InputFormat::pajek_net;
  const std::string ext = std::filesystem::path(o.input).extension().string();
  if (interlock::text::iequals(ext, ".csv")) return InputFormat::affiliation_csv;
  if (interlock::text::iequals(ext, ".net")) return InputFormat::pajek_net;
  throw interlock::Error(interlock::ErrorKind::invalid_argument,
                         "cannot infer the format of " + o.input + "; pass --format");
}

interlock::RunConfig make_config(const Options& o, bool needs_format) {
  interlock::RunConfig cfg;
  cfg.input = o.input;
  if (needs_format) cfg.format = resolve_format(o);
  cfg.out = o.out;
  cfg.closeness = o.closeness == "verbal" ? interlock::ClosenessVariant::verbal
                                          : interlock::ClosenessVariant::corrected;
  if (!o.thresholds.empty()) cfg.thresholds = o.thresholds;
  cfg.min_size = o.min_size;
  cfg.workers = o.workers;
  cfg.seed = o.seed;
  for (const auto& r : o.reports) cfg.json = cfg.json || r == "json";
  cfg.check();
  return cfg;
}

void report(const interlock::CommandResult& result) {
  for (const auto& path : result.written) std::cout << path.string() << '\n';
  const auto& w = result.warnings;
  if (w.duplicate_rows) std::cerr << "warning: " << w.duplicate_rows << " duplicate rows ignored\n";
  if (w.ignored_vertex_attributes) {
    std::cerr << "warning: " << w.ignored_vertex_attributes << " vertex attribute lines ignored\n";
  }
  if (w.ignored_edge_attributes) {
    std::cerr << "warning: " << w.ignored_edge_attributes << " edge attribute lines ignored\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interlocking editorship network analysis"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--input,-i", o.input, "Input file")->required();
    if (with_format) {
      sub->add_option("--format", o.format, "Input format (default: from extension)")
          ->check(CLI::IsMember({"affiliation-csv", "pajek-net"}));
    }
    sub->add_option("--out,-o", o.out, "Output directory")->capture_default_str();
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", o.workers, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto add_report = [&](CLI::App* sub) {
    sub->add_option("--report", o.reports, "Report formats")
        ->delimiter(',')
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* project = app.add_subcommand("project", "Project an affiliation network onto journals");
  add_input(project, true);
  add_report(project);

  auto* analyze = app.add_subcommand("analyze", "Centrality, centralization and concordance");
  add_input(analyze, true);
  add_workers(analyze);
  add_report(analyze);
  analyze->add_option("--closeness", o.closeness, "Closeness variant")
      ->check(CLI::IsMember({"verbal", "corrected"}))
      ->capture_default_str();

  auto* slices = app.add_subcommand("slices", "m-slice census and cohesive subgroups");
  add_input(slices, true);
  add_workers(slices);
  add_report(slices);
  slices->add_option("--m", o.thresholds, "Slice thresholds, e.g. 2,3,6")->delimiter(',');
  slices->add_option("--min-size", o.min_size, "Smallest group to list")
      ->check(CLI::Range(std::size_t{2}, std::size_t(-1)))
      ->capture_default_str();

  auto* comps = app.add_subcommand("components", "Connected components of the network");
  add_input(comps, true);

  auto* concord = app.add_subcommand("concord", "Rank concordance from a centrality table");
  add_input(concord, false);

  auto* convert = app.add_subcommand("convert", "affiliation-csv <-> two-mode pajek-net");
  add_input(convert, true);

  auto* validate = app.add_subcommand("validate", "Replay published tables from fixtures");
  validate->add_option("--input,-i", o.input, "Fixture directory")->required();

  auto* generate = app.add_subcommand("generate", "Seeded random test network");
  generate->add_option("--out,-o", o.out, "Output directory")->capture_default_str();
  generate->add_option("--kind", o.kind, "graph or affiliation")
      ->check(CLI::IsMember({"graph", "affiliation"}))
      ->capture_default_str();
  generate->add_option("--vertices", o.generate.vertices)->capture_default_str();
  generate->add_option("--probability", o.generate.probability)->capture_default_str();
  generate->add_option("--max-value", o.generate.max_value)->capture_default_str();
  generate->add_option("--editors", o.generate.editors)->capture_default_str();
  generate->add_option("--journals", o.generate.journals)->capture_default_str();
  generate->add_option("--seed", o.seed)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*project) {
      report(interlock::run_project(make_config(o, true)));
    } else if (*analyze) {
      report(interlock::run_analyze(make_config(o, true)));
    } else if (*slices) {
      if (o.thresholds.empty()) o.thresholds = {1};
      report(interlock::run_slices(make_config(o, true)));
    } else if (*comps) {
      report(interlock::run_components(make_config(o, true)));
    } else if (*concord) {
      report(interlock::run_concord(make_config(o, false)));
    } else if (*convert) {
      report(interlock::run_convert(make_config(o, true)));
    } else if (*validate) {
      const auto result = interlock::validate_fixtures(o.input);
      std::cout << result.text();
      return result.passed() ? 0 : 1;
    } else if (*generate) {
      o.generate.kind = o.kind == "graph" ? interlock::GenerateOptions::Kind::graph
                                          : interlock::GenerateOptions::Kind::affiliation;
      report(interlock::run_generate(make_config(o, false), o.generate));
    }
  } catch (const interlock::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
