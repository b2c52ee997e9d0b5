#include "depnet/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "depnet/random_graph.hpp"
#include "depnet/rng.hpp"

namespace depnet {

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string histogram_csv(const DegreeHistogram& hist) {
  std::string csv = "degree,count\n";
  for (const auto& [degree, count] : hist.counts)
    csv += std::to_string(degree) + ',' + std::to_string(count) + '\n';
  return csv;
}

std::string scatter_csv(const std::vector<ScatterPoint>& points) {
  std::string csv = "degree,count\n";
  for (const auto& p : points) csv += std::to_string(p.degree) + ',' + std::to_string(p.count) + '\n';
  return csv;
}

std::string top_k_csv(const std::vector<RankedPackage>& ranking) {
  std::string csv = "rank,name,in_degree\n";
  for (std::size_t i = 0; i < ranking.size(); ++i)
    csv += std::to_string(i + 1) + ',' + csv_field(ranking[i].name) + ',' +
           std::to_string(ranking[i].in_degree) + '\n';
  return csv;
}

Json fit_json(const DegreeHistogram& hist, const AnalyzeOptions& options) {
  const std::uint64_t zero = hist.counts.contains(0) ? hist.counts.at(0) : 0;
  Json j;
  j["method"] = to_string(options.fit_method);
  try {
    const PowerLawFit fit = fit_power_law(hist, options.k_min, options.fit_method);
    j["alpha"] = canonical(fit.alpha);
    j["slope"] = canonical(fit.slope);
    j["intercept"] = canonical(fit.intercept);
    j["r_squared"] = canonical(fit.r_squared);
    j["points_used"] = fit.points_used;
    j["k_min"] = fit.k_min;
  } catch (const FitError& e) {
    j["alpha"] = nullptr;
    j["slope"] = nullptr;
    j["intercept"] = nullptr;
    j["r_squared"] = nullptr;
    j["points_used"] = 0;
    j["k_min"] = std::max<std::uint32_t>(options.k_min, 1);
    j["error"] = e.what();
  }
  j["zero_degree_excluded"] = zero;
  return j;
}

std::string_view to_string(PathLengthMode::Kind kind) {
  return kind == PathLengthMode::Kind::exact ? "exact" : "sampled";
}

std::string_view to_string(DiameterMode::Kind kind) {
  return kind == DiameterMode::Kind::exact ? "exact" : "sampled";
}

void require_finite(const Json& j, const std::string& where) {
  if (j.is_number_float() && !std::isfinite(j.get<double>()))
    throw InvariantViolation("non-finite number in report at " + where);
  if (j.is_object())
    for (const auto& [key, value] : j.items()) require_finite(value, where + "/" + key);
  if (j.is_array())
    for (std::size_t i = 0; i < j.size(); ++i) require_finite(j[i], where + "/" + std::to_string(i));
}

std::string iso_utc(std::chrono::system_clock::time_point t) {
  const std::time_t secs = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return std::move(buf).str();
}

bool write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  return static_cast<bool>(out);
}

}  // namespace

double canonical(double value) {
  if (!std::isfinite(value) || value == 0.0) return value == 0.0 ? 0.0 : value;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return std::strtod(buf, nullptr);
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

DepKind effective_dep_kind(const AnalyzeOptions& options) {
  if (options.dep_kind) return *options.dep_kind;
  return options.format == SourceFormat::debian ? DepKind::run : DepKind::build;
}

Json reference_values() {
  Json ref;
  ref["source"] = "published figures for the September 2004 Debian unstable (i386) and FreeBSD ports "
                  "(build dependencies) snapshots; display only, not reproducible";
  ref["debian"] = {{"n", 19504},       {"m", 73960},        {"giant_size", 17351}, {"alpha_in", 0.9},
                   {"alpha_out", 2.33}, {"C", 0.52},         {"L", 3.34},           {"mean_degree", 3.79},
                   {"c_random", 0.0019}, {"l_random", 7.41}, {"components", 1945},  {"diameter", 31},
                   {"zero_in_degree", 10142}};
  ref["bsd"] = {{"n", 10222},      {"m", 74318},     {"giant_size", 7441},  {"alpha_in", 0.62},
                {"alpha_out", 1.28}, {"C", 0.56},      {"L", 2.86},           {"mean_degree", 7.27},
                {"c_random", 0.007}, {"l_random", 7.11}};
  // k/n and ln n / ln k recomputed from the published n and mean degree
  Json recomputed;
  recomputed["debian"] = {{"c_random", canonical(analytic_c_random(19504, 3.79))},
                          {"l_random", canonical(analytic_l_random(19504, 3.79))}};
  recomputed["bsd"] = {{"c_random", canonical(analytic_c_random(10222, 7.27))},
                       {"l_random", canonical(analytic_l_random(10222, 7.27))}};
  ref["recomputed_baselines"] = recomputed;
  ref["note"] = "published C_random values are about ten times k/n, and the published BSD L_random "
                "does not follow ln n / ln k; both are shown side by side without reconciliation";
  return ref;
}

AnalysisArtifacts analyze_snapshot(std::string_view text, std::string_view input_path,
                                   std::string_view timestamp, const AnalyzeOptions& options) {
  const IngestResult ingest =
      options.format == SourceFormat::debian
          ? parse_debian_packages(text, DebianOptions{options.alt_policy, options.include_pre_depends})
          : parse_bsd_index(text);
  if (ingest.records.empty())
    throw EmptyParse("no package records parsed from '" + std::string(input_path) + "'");

  const DepKind dep_kind = effective_dep_kind(options);
  const DependencyGraph g = build_graph(ingest.records, dep_kind, options.unknown_policy);
  g.verify();

  const SummaryStatistics stats = summary_statistics(g);
  const DegreeHistogram hist_in = degree_distribution(g, Direction::in);
  const DegreeHistogram hist_out = degree_distribution(g, Direction::out);
  for (const DegreeHistogram* h : {&hist_in, &hist_out}) {
    std::uint64_t vertices = 0, endpoints = 0;
    for (const auto& [degree, count] : h->counts) {
      vertices += count;
      endpoints += static_cast<std::uint64_t>(degree) * count;
    }
    if (vertices != g.n() || endpoints != g.m())
      throw InvariantViolation("degree histogram totals disagree with n or m");
  }

  const ComponentLabeling components = label_components(g);
  const ComponentSummary& comp = components.summary;
  std::size_t covered = 0, singletons = 0;
  for (std::size_t size : comp.component_sizes) {
    covered += size;
    if (size == 1) ++singletons;
  }
  if (covered != g.n()) throw InvariantViolation("component sizes do not sum to n");

  const bool large = comp.giant_size >= kExactGiantLimit;
  const PathLengthMode::Kind l_kind =
      options.l_mode.value_or(large ? PathLengthMode::Kind::sampled : PathLengthMode::Kind::exact);
  const DiameterMode::Kind d_kind =
      options.diameter_mode.value_or(large ? DiameterMode::Kind::sampled : DiameterMode::Kind::exact);

  const ClusteringResult clustering = clustering_coefficient(g);

  std::optional<PathLengthResult> path;
  std::string path_error;
  try {
    path = characteristic_path_length(g, l_kind == PathLengthMode::Kind::exact
                                             ? PathLengthMode::exact()
                                             : PathLengthMode::sampled(options.sample_sources, options.seed));
  } catch (const std::domain_error& e) {
    path_error = e.what();
  }

  const DiameterResult diameter =
      diameter_of_giant(g, d_kind == DiameterMode::Kind::exact
                               ? DiameterMode::exact()
                               : DiameterMode::sampled(options.diameter_sweeps, options.seed));

  Json report;
  report["schema"] = kReportSchema;

  Json& snap = report["snapshot"];
  snap["source_format"] = to_string(options.format);
  snap["input_path"] = input_path;
  snap["label"] = options.label.empty()
                      ? std::filesystem::path(std::string(input_path)).filename().string()
                      : options.label;
  snap["dep_kind"] = to_string(dep_kind);
  snap["alt_policy"] = to_string(options.alt_policy);
  snap["include_pre_depends"] = options.include_pre_depends;
  snap["unknown_policy"] = to_string(options.unknown_policy);
  snap["timestamp"] = timestamp;

  Json& ing = report["ingest"];
  ing["stanza_count"] = ingest.diagnostics.stanza_count;
  ing["records"] = ingest.records.size();
  ing["dropped_self_refs"] = ingest.diagnostics.dropped_self_refs;
  ing["alternative_groups_seen"] = ingest.diagnostics.alternative_groups_seen;
  ing["malformed_line_count"] = ingest.diagnostics.malformed_lines.size();
  Json malformed = Json::array();
  for (const auto& entry : ingest.diagnostics.malformed_lines)
    malformed.push_back({{"line", entry.line}, {"reason", entry.reason}});
  ing["malformed_lines"] = std::move(malformed);

  report["n"] = g.n();
  report["m"] = g.m();
  report["mean_degree"] = canonical(stats.mean_degree);
  report["unresolved_edges"] = g.unresolved_edges();

  Json& deg = report["degrees"];
  deg["zero_in_degree"] = stats.zero_in_degree;
  deg["zero_in_fraction"] = canonical(stats.zero_in_fraction);
  deg["nonzero_out_degree"] = stats.nonzero_out_degree;
  deg["nonzero_out_fraction"] = canonical(stats.nonzero_out_fraction);
  deg["max_in_degree"] = hist_in.counts.rbegin()->first;
  deg["max_out_degree"] = hist_out.counts.rbegin()->first;

  Json& cj = report["components"];
  cj["count"] = comp.component_count;
  cj["giant_size"] = comp.giant_size;
  cj["giant_fraction"] = canonical(comp.giant_fraction);
  cj["singletons"] = singletons;
  cj["sizes"] = comp.component_sizes;

  Json& dj = report["diameter"];
  dj["value"] = diameter.value;
  dj["exact"] = diameter.exact;
  dj["mode"] = to_string(d_kind);
  dj["bfs_runs"] = diameter.bfs_runs;
  if (d_kind == DiameterMode::Kind::sampled) {
    dj["sweeps"] = options.diameter_sweeps;
    dj["seed"] = options.seed;
  }

  Json& clj = report["clustering"];
  clj["C"] = canonical(clustering.global);
  clj["low_degree_vertices"] = clustering.low_degree_vertices;
  clj["convention"] = "undirected projection; C_v = triangles / (k_v choose 2); C_v = 0 when k_v < 2; "
                      "C = mean over all n vertices";

  Json& pj = report["path_length"];
  pj["L"] = path ? Json(canonical(path->value)) : Json(nullptr);
  pj["mode"] = to_string(l_kind);
  pj["exact"] = path ? path->exact : false;
  pj["sources"] = path ? path->sources_used : 0;
  pj["giant_size"] = comp.giant_size;
  pj["seed"] = options.seed;
  if (!path) pj["error"] = path_error;

  report["power_law"] = {{"in", fit_json(hist_in, options)}, {"out", fit_json(hist_out, options)}};

  Json& sw = report["small_world"];
  const double k = mean_degree(g, options.degree_convention);
  sw["degree_convention"] = to_string(options.degree_convention);
  sw["mean_degree"] = canonical(k);
  try {
    if (!path) throw std::domain_error(path_error);
    const SmallWorldVerdict v = small_world_assessment(clustering.global, path->value, g.n(), k,
                                                       options.degree_convention, options.thresholds);
    sw["c_observed"] = canonical(v.c_observed);
    sw["l_observed"] = canonical(v.l_observed);
    sw["c_random"] = canonical(v.c_random);
    sw["l_random"] = canonical(v.l_random);
    sw["clustering_ratio"] = canonical(v.clustering_ratio);
    sw["r_min"] = v.thresholds.r_min;
    sw["f_max"] = v.thresholds.f_max;
    sw["is_small_world"] = v.is_small_world;
  } catch (const std::domain_error& e) {
    sw["r_min"] = options.thresholds.r_min;
    sw["f_max"] = options.thresholds.f_max;
    sw["is_small_world"] = nullptr;
    sw["error"] = e.what();
  }

  const auto ranking = top_k_in_degree(g, std::max<std::size_t>(options.top, 1));
  Json top = Json::array();
  for (std::size_t i = 0; i < ranking.size(); ++i)
    top.push_back({{"rank", i + 1}, {"name", ranking[i].name}, {"in_degree", ranking[i].in_degree}});
  report["top_k"] = std::move(top);

  report["rng"] = {{"algorithm", Rng::kAlgorithm}, {"seed", options.seed}};
  if (options.published_values) report["reference_values"] = reference_values();

  require_finite(report, "");

  AnalysisArtifacts out;
  out.report = std::move(report);
  out.degree_in_csv = histogram_csv(hist_in);
  out.degree_out_csv = histogram_csv(hist_out);
  out.scatter_in_csv = scatter_csv(emit_scatter(hist_in));
  out.scatter_out_csv = scatter_csv(emit_scatter(hist_out));
  out.top_k_csv = top_k_csv(ranking);
  return out;
}

int run_analyze(const std::filesystem::path& input, const std::filesystem::path& out_dir,
                const AnalyzeOptions& options, std::ostream& log) {
  const auto text = read_file(input);
  if (!text) {
    log << "error: cannot read input '" << input.string() << "'\n";
    return exit_code::input_error;
  }

  std::string timestamp;
  if (options.timestamp) {
    timestamp = *options.timestamp;
  } else {
    std::error_code ec;
    const auto mtime = std::filesystem::last_write_time(input, ec);
    timestamp = ec ? "unknown" : iso_utc(std::chrono::file_clock::to_sys(mtime));
  }

  AnalysisArtifacts artifacts;
  try {
    artifacts = analyze_snapshot(*text, input.string(), timestamp, options);
  } catch (const EmptyParse& e) {
    log << "error: " << e.what() << '\n';
    return exit_code::empty_parse;
  } catch (const std::exception& e) {
    log << "internal error: " << e.what() << '\n';
    return exit_code::invariant_violation;
  }

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    log << "error: cannot create output directory '" << out_dir.string() << "': " << ec.message() << '\n';
    return exit_code::input_error;
  }
  const std::pair<const char*, const std::string*> files[] = {
      {"degree_in.csv", &artifacts.degree_in_csv},   {"degree_out.csv", &artifacts.degree_out_csv},
      {"scatter_in.csv", &artifacts.scatter_in_csv}, {"scatter_out.csv", &artifacts.scatter_out_csv},
      {"top_k.csv", &artifacts.top_k_csv},
  };
  const std::string report = render_json(artifacts.report);
  bool ok = write_file(out_dir / "report.json", report);
  for (const auto& [name, content] : files) ok = write_file(out_dir / name, *content) && ok;
  if (!ok) {
    log << "error: failed writing output files into '" << out_dir.string() << "'\n";
    return exit_code::input_error;
  }
  return exit_code::ok;
}

namespace {

struct CompareRow {
  const char* label;
  const char* pointer;
  const char* debian_key;
};

constexpr CompareRow kCompareRows[] = {
    {"n", "/n", "n"},
    {"m", "/m", "m"},
    {"|giant|", "/components/giant_size", "giant_size"},
    {"alpha_in", "/power_law/in/alpha", "alpha_in"},
    {"alpha_out", "/power_law/out/alpha", "alpha_out"},
    {"C", "/clustering/C", "C"},
    {"L", "/path_length/L", "L"},
};

std::optional<double> number_at(const Json& doc, const char* pointer) {
  const Json::json_pointer ptr(pointer);
  if (!doc.contains(ptr)) throw InputError(std::string("report is missing ") + pointer);
  const Json& v = doc.at(ptr);
  if (v.is_null()) return std::nullopt;
  if (!v.is_number()) throw InputError(std::string("report field ") + pointer + " is not a number");
  return v.get<double>();
}

std::string cell(std::optional<double> v) {
  if (!v) return "n/a";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", *v == 0.0 ? 0.0 : *v);
  return buf;
}

std::string label_of(const Json& doc) {
  const Json::json_pointer ptr("/snapshot/label");
  return doc.contains(ptr) && doc.at(ptr).is_string() ? doc.at(ptr).get<std::string>() : "?";
}

}  // namespace

std::string compare_reports(const Json& a, const Json& b, bool published_values) {
  for (const Json* doc : {&a, &b}) {
    if (!doc->is_object() || !doc->contains("schema") || (*doc)["schema"] != kReportSchema)
      throw InputError("not a " + std::string(kReportSchema) + " document");
  }
  const Json ref = published_values ? reference_values() : Json();

  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %14s %14s %14s", "", label_of(a).substr(0, 14).c_str(),
                label_of(b).substr(0, 14).c_str(), "delta");
  out << line;
  if (published_values) {
    std::snprintf(line, sizeof line, " %14s %14s", "Debian-2004", "BSD-2004");
    out << line;
  }
  out << '\n';

  for (const auto& row : kCompareRows) {
    const auto va = number_at(a, row.pointer);
    const auto vb = number_at(b, row.pointer);
    const std::optional<double> delta = va && vb ? std::optional<double>(*vb - *va) : std::nullopt;
    std::snprintf(line, sizeof line, "%-10s %14s %14s %14s", row.label, cell(va).c_str(), cell(vb).c_str(),
                  cell(delta).c_str());
    out << line;
    if (published_values) {
      std::snprintf(line, sizeof line, " %14s %14s", cell(ref["debian"][row.debian_key].get<double>()).c_str(),
                    cell(ref["bsd"][row.debian_key].get<double>()).c_str());
      out << line;
    }
    out << '\n';
  }
  return out.str();
}

int run_compare(const std::filesystem::path& a, const std::filesystem::path& b, bool published_values,
                std::ostream& out, std::ostream& err) {
  Json docs[2];
  const std::filesystem::path paths[2] = {a, b};
  for (int i = 0; i < 2; ++i) {
    const auto text = read_file(paths[i]);
    if (!text) {
      err << "error: cannot read report '" << paths[i].string() << "'\n";
      return exit_code::input_error;
    }
    try {
      docs[i] = Json::parse(*text);
    } catch (const Json::parse_error& e) {
      err << "error: '" << paths[i].string() << "' is not valid JSON: " << e.what() << '\n';
      return exit_code::input_error;
    }
  }
  try {
    out << compare_reports(docs[0], docs[1], published_values);
  } catch (const std::exception& e) {
    err << "error: schema mismatch: " << e.what() << '\n';
    return exit_code::input_error;
  }
  return exit_code::ok;
}

namespace {

struct Moments {
  double mean = 0.0, stddev = 0.0, stderr_ = 0.0;
  std::size_t count = 0;
};

Moments moments(const std::vector<double>& xs) {
  Moments m;
  m.count = xs.size();
  if (xs.empty()) return m;
  for (double x : xs) m.mean += x;
  m.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    m.stderr_ = m.stddev / std::sqrt(static_cast<double>(xs.size()));
  }
  return m;
}

Json analytic_json(std::size_t n, double k) {
  Json j;
  j["mean_degree"] = canonical(k);
  j["c_random"] = canonical(analytic_c_random(n, k));
  if (n >= 2 && k > 1.0) j["l_random"] = canonical(analytic_l_random(n, k));
  else j["l_random"] = nullptr;
  return j;
}

}  // namespace

Json random_baseline_report(const BaselineOptions& options) {
  if (options.seeds == 0) throw std::invalid_argument("baseline needs at least one seed");
  const bool large = options.n >= kExactGiantLimit;
  const PathLengthMode::Kind l_kind =
      options.l_mode.value_or(large ? PathLengthMode::Kind::sampled : PathLengthMode::Kind::exact);

  Json runs = Json::array();
  std::vector<double> cs, ls;
  for (std::size_t i = 0; i < options.seeds; ++i) {
    const std::uint64_t seed = options.first_seed + i;
    const DependencyGraph g = er_random_graph({options.n, options.m, seed});
    const double c = clustering_coefficient(g).global;
    cs.push_back(c);
    Json run = {{"seed", seed}, {"C", canonical(c)}};
    try {
      const auto path = characteristic_path_length(
          g, l_kind == PathLengthMode::Kind::exact ? PathLengthMode::exact()
                                                   : PathLengthMode::sampled(options.sample_sources, seed));
      ls.push_back(path.value);
      run["L"] = canonical(path.value);
      run["giant_size"] = path.giant_size;
    } catch (const std::domain_error&) {
      run["L"] = nullptr;
      run["giant_size"] = label_components(g).summary.giant_size;
    }
    runs.push_back(std::move(run));
  }

  const Moments mc = moments(cs), ml = moments(ls);
  Json report;
  report["schema"] = kBaselineSchema;
  report["n"] = options.n;
  report["m"] = options.m;
  report["seeds"] = options.seeds;
  report["first_seed"] = options.first_seed;
  report["algorithm"] = kRandomGraphAlgorithm;
  report["l_mode"] = to_string(l_kind);
  report["measured"] = {
      {"C_mean", canonical(mc.mean)}, {"C_stddev", canonical(mc.stddev)}, {"C_stderr", canonical(mc.stderr_)},
      {"L_mean", ml.count ? Json(canonical(ml.mean)) : Json(nullptr)},
      {"L_stddev", ml.count ? Json(canonical(ml.stddev)) : Json(nullptr)},
      {"L_stderr", ml.count ? Json(canonical(ml.stderr_)) : Json(nullptr)},
  };
  const auto n = static_cast<double>(options.n);
  report["analytic"] = {
      {"undirected", analytic_json(options.n, 2.0 * static_cast<double>(options.m) / n)},
      {"directed", analytic_json(options.n, static_cast<double>(options.m) / n)},
  };
  report["runs"] = std::move(runs);
  return report;
}

std::string format_baseline_table(const Json& report) {
  std::ostringstream out;
  char line[256];
  auto num = [](const Json& v) { return v.is_null() ? std::optional<double>() : v.get<double>(); };
  out << "G(n=" << report["n"].get<std::size_t>() << ", m=" << report["m"].get<std::size_t>() << ") over "
      << report["seeds"].get<std::size_t>() << " seed(s), L " << report["l_mode"].get<std::string>() << ", "
      << report["algorithm"].get<std::string>() << '\n';
  std::snprintf(line, sizeof line, "%-4s %14s %14s %16s %16s\n", "", "measured mean", "stddev",
                "analytic k=2m/n", "analytic k=m/n");
  out << line;
  const Json& measured = report["measured"];
  const Json& analytic = report["analytic"];
  std::snprintf(line, sizeof line, "%-4s %14s %14s %16s %16s\n", "C", cell(num(measured["C_mean"])).c_str(),
                cell(num(measured["C_stddev"])).c_str(), cell(num(analytic["undirected"]["c_random"])).c_str(),
                cell(num(analytic["directed"]["c_random"])).c_str());
  out << line;
  std::snprintf(line, sizeof line, "%-4s %14s %14s %16s %16s\n", "L", cell(num(measured["L_mean"])).c_str(),
                cell(num(measured["L_stddev"])).c_str(), cell(num(analytic["undirected"]["l_random"])).c_str(),
                cell(num(analytic["directed"]["l_random"])).c_str());
  out << line;
  return out.str();
}

int run_random_baseline(const BaselineOptions& options, const std::optional<std::filesystem::path>& output,
                        std::ostream& out, std::ostream& err) {
  const std::uint64_t slots = static_cast<std::uint64_t>(options.n) * (options.n ? options.n - 1 : 0) / 2;
  if (options.n < 1 || options.m > slots || options.seeds < 1) {
    err << "error: invalid G(n, m) baseline: need n >= 1, 0 <= m <= n(n-1)/2, seeds >= 1\n";
    return exit_code::input_error;
  }
  Json report;
  try {
    report = random_baseline_report(options);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::invariant_violation;
  }
  out << format_baseline_table(report);
  if (output) {
    if (output->has_parent_path()) {
      std::error_code ec;
      std::filesystem::create_directories(output->parent_path(), ec);
    }
    if (!write_file(*output, render_json(report))) {
      err << "error: cannot write '" << output->string() << "'\n";
      return exit_code::input_error;
    }
  }
  return exit_code::ok;
}

}  // namespace depnet
