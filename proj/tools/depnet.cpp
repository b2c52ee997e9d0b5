// depnet: dependency-network statistics for package repository metadata.
//
//   depnet analyze --format debian Packages --out report/
//   depnet compare debian/report.json bsd/report.json --paper-values
//   depnet baseline --n 1000 --m 2000 --seeds 50 --out baseline.json
//   depnet edges --format bsd-index INDEX

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "CLI11.hpp"

#include "depnet/graph.hpp"
#include "depnet/ingest.hpp"
#include "depnet/report.hpp"

namespace {

using depnet::AltPolicy;
using depnet::DegreeConvention;
using depnet::FitMethod;
using depnet::SourceFormat;
using depnet::UnknownPolicy;

const std::map<std::string, SourceFormat> kFormats{{"debian", SourceFormat::debian},
                                                   {"bsd-index", SourceFormat::bsd_index}};
const std::map<std::string, AltPolicy> kAltPolicies{
    {"first", AltPolicy::first}, {"all", AltPolicy::all}, {"none", AltPolicy::none}};
const std::map<std::string, UnknownPolicy> kUnknownPolicies{{"drop", UnknownPolicy::drop},
                                                            {"stub", UnknownPolicy::stub}};
const std::map<std::string, FitMethod> kFitMethods{{"frequency", FitMethod::frequency},
                                                   {"ccdf", FitMethod::ccdf}};
const std::map<std::string, DegreeConvention> kConventions{{"directed", DegreeConvention::directed},
                                                           {"undirected", DegreeConvention::undirected}};

// Binds a keyword option to an enum value.
template <typename Enum>
CLI::Option* add_choice(CLI::App* app, const std::string& flag, Enum& target,
                        const std::map<std::string, Enum>& table, const std::string& help = "") {
  std::vector<std::string> keys;
  for (const auto& [key, value] : table) keys.push_back(key);
  return app
      ->add_option_function<std::string>(
          flag, [&target, &table](const std::string& s) { target = table.at(s); }, help)
      ->check(CLI::IsMember(keys));
}

}  // namespace

int main(int argc, char** argv) {
  using namespace depnet;

  CLI::App app{"Package dependency network statistics"};
  app.require_subcommand(1);

  // analyze
  AnalyzeOptions opts;
  std::string input, out_dir = ".";
  std::string dep_kind, l_mode, diameter_mode;
  auto* analyze = app.add_subcommand("analyze", "Analyze one repository snapshot");
  analyze->add_option("input", input, "Packages or INDEX file")->required();
  add_choice(analyze, "--format", opts.format, kFormats, "Input format")->required();
  analyze->add_option("--dep-kind", dep_kind, "Dependency kind (default: run for debian, build for bsd-index)")
      ->check(CLI::IsMember({"build", "run"}));
  add_choice(analyze, "--alt-policy", opts.alt_policy, kAltPolicies, "Resolution of 'a | b' alternatives");
  analyze->add_flag("--pre-depends", opts.include_pre_depends, "Also read Pre-Depends");
  add_choice(analyze, "--unknown", opts.unknown_policy, kUnknownPolicies, "Dependencies on unknown packages");
  analyze->add_option("--k-min", opts.k_min, "Smallest degree entering the power-law fit");
  add_choice(analyze, "--fit-method", opts.fit_method, kFitMethods, "Power-law regression");
  analyze->add_option("--top", opts.top, "Length of the in-degree ranking")->check(CLI::PositiveNumber);
  analyze->add_option("--l-mode", l_mode, "Path length mode (default: exact below 50000 giant vertices)")
      ->check(CLI::IsMember({"exact", "sampled"}));
  analyze->add_option("--sources", opts.sample_sources, "BFS sources for sampled path length")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--diameter-mode", diameter_mode, "Diameter mode (default follows --l-mode rule)")
      ->check(CLI::IsMember({"exact", "sampled"}));
  analyze->add_option("--diameter-sweeps", opts.diameter_sweeps, "BFS sweeps for the sampled diameter bound")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--seed", opts.seed, "Seed for every sampled quantity");
  add_choice(analyze, "--degree-convention", opts.degree_convention, kConventions,
             "Mean degree fed to random baselines");
  analyze->add_option("--r-min", opts.thresholds.r_min, "Small-world minimum C/C_random");
  analyze->add_option("--f-max", opts.thresholds.f_max, "Small-world maximum L/L_random");
  analyze->add_option("--label", opts.label, "Free-text snapshot label");
  analyze->add_option("--timestamp", opts.timestamp, "Snapshot timestamp (default: input mtime, UTC)");
  analyze->add_option("--out", out_dir, "Output directory");
  analyze->add_flag("--paper-values", opts.published_values, "Embed the published 2004 values for comparison");

  // compare
  std::string report_a, report_b;
  bool compare_published = false;
  auto* compare = app.add_subcommand("compare", "Side-by-side table of two reports");
  compare->add_option("report_a", report_a)->required();
  compare->add_option("report_b", report_b)->required();
  compare->add_flag("--paper-values", compare_published, "Append the published 2004 columns");

  // baseline
  BaselineOptions base;
  std::string base_out, base_l_mode;
  auto* baseline = app.add_subcommand("baseline", "Measure C and L on Erdos-Renyi G(n, m) graphs");
  baseline->add_option("--n", base.n, "Vertices")->required();
  baseline->add_option("--m", base.m, "Undirected edges")->required();
  baseline->add_option("--seeds", base.seeds, "Number of graphs");
  baseline->add_option("--seed", base.first_seed, "First seed");
  baseline->add_option("--l-mode", base_l_mode)->check(CLI::IsMember({"exact", "sampled"}));
  baseline->add_option("--sources", base.sample_sources)->check(CLI::PositiveNumber);
  baseline->add_option("--out", base_out, "Write the baseline report as JSON");

  // edges
  std::string edges_input, edges_dep_kind;
  AnalyzeOptions edge_opts;
  auto* edges = app.add_subcommand("edges", "Print the canonical edge list of a snapshot");
  edges->add_option("input", edges_input)->required();
  add_choice(edges, "--format", edge_opts.format, kFormats)->required();
  edges->add_option("--dep-kind", edges_dep_kind)->check(CLI::IsMember({"build", "run"}));
  add_choice(edges, "--alt-policy", edge_opts.alt_policy, kAltPolicies);
  add_choice(edges, "--unknown", edge_opts.unknown_policy, kUnknownPolicies);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? exit_code::ok : exit_code::input_error;
  }

  auto path_kind = [](const std::string& s) {
    return s == "exact" ? PathLengthMode::Kind::exact : PathLengthMode::Kind::sampled;
  };

  if (analyze->parsed()) {
    if (!dep_kind.empty()) opts.dep_kind = parse_dep_kind(dep_kind);
    if (!l_mode.empty()) opts.l_mode = path_kind(l_mode);
    if (!diameter_mode.empty())
      opts.diameter_mode = diameter_mode == "exact" ? DiameterMode::Kind::exact : DiameterMode::Kind::sampled;
    return run_analyze(input, out_dir, opts, std::cerr);
  }
  if (compare->parsed()) return run_compare(report_a, report_b, compare_published, std::cout, std::cerr);
  if (baseline->parsed()) {
    if (!base_l_mode.empty()) base.l_mode = path_kind(base_l_mode);
    std::optional<std::filesystem::path> out;
    if (!base_out.empty()) out = base_out;
    return run_random_baseline(base, out, std::cout, std::cerr);
  }
  if (edges->parsed()) {
    std::ifstream in(edges_input, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read input '" << edges_input << "'\n";
      return exit_code::input_error;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (!edges_dep_kind.empty()) edge_opts.dep_kind = parse_dep_kind(edges_dep_kind);
    const IngestResult parsed = edge_opts.format == SourceFormat::debian
                                    ? parse_debian_packages(text, edge_opts.alt_policy)
                                    : parse_bsd_index(text);
    if (parsed.records.empty()) {
      std::cerr << "error: no package records parsed\n";
      return exit_code::empty_parse;
    }
    std::cout << to_edge_list(build_graph(parsed.records, effective_dep_kind(edge_opts), edge_opts.unknown_policy));
    return exit_code::ok;
  }
  return exit_code::input_error;
}
