#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "depnet/report.hpp"
#include "oracles.hpp"

using namespace depnet;
namespace fs = std::filesystem;

namespace {

const std::string kStamp = "2004-09-01T00:00:00Z";

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("depnet_test_" + name);
  fs::remove_all(dir);
  return dir;
}

Json load(const fs::path& p) { return Json::parse(oracle::read_text(p.string())); }

// Covers the keywords used by docs/report.schema.json: type, const, enum,
// required, properties, additionalProperties, items, minimum, maximum, $ref.
class SchemaCheck {
 public:
  explicit SchemaCheck(Json root) : root_(std::move(root)) {}

  std::vector<std::string> errors(const Json& doc) {
    problems_.clear();
    check(root_, doc, "");
    return problems_;
  }

 private:
  static bool has_type(const Json& v, const std::string& type) {
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "string") return v.is_string();
    if (type == "boolean") return v.is_boolean();
    if (type == "null") return v.is_null();
    if (type == "integer") return v.is_number_integer();
    if (type == "number") return v.is_number();
    return false;
  }

  void check(const Json& schema, const Json& v, const std::string& at) {
    if (schema.contains("$ref")) {
      const std::string ref = schema["$ref"].get<std::string>();
      check(root_.at(Json::json_pointer(ref.substr(1))), v, at);
      return;
    }
    if (schema.contains("type")) {
      bool ok = false;
      if (schema["type"].is_array()) {
        for (const auto& t : schema["type"]) ok = ok || has_type(v, t.get<std::string>());
      } else {
        ok = has_type(v, schema["type"].get<std::string>());
      }
      if (!ok) {
        problems_.push_back(at + ": wrong type");
        return;
      }
    }
    if (schema.contains("const") && v != schema["const"]) problems_.push_back(at + ": const mismatch");
    if (schema.contains("enum")) {
      bool found = false;
      for (const auto& e : schema["enum"]) found = found || e == v;
      if (!found) problems_.push_back(at + ": not in enum");
    }
    if (v.is_number()) {
      if (schema.contains("minimum") && v.get<double>() < schema["minimum"].get<double>())
        problems_.push_back(at + ": below minimum");
      if (schema.contains("maximum") && v.get<double>() > schema["maximum"].get<double>())
        problems_.push_back(at + ": above maximum");
    }
    if (v.is_object()) {
      if (schema.contains("required"))
        for (const auto& key : schema["required"])
          if (!v.contains(key.get<std::string>())) problems_.push_back(at + ": missing " + key.get<std::string>());
      const Json props = schema.value("properties", Json::object());
      for (const auto& [key, value] : v.items()) {
        if (props.contains(key)) {
          check(props[key], value, at + "/" + key);
        } else if (schema.contains("additionalProperties") && schema["additionalProperties"] == false) {
          problems_.push_back(at + ": unexpected " + key);
        }
      }
    }
    if (v.is_array() && schema.contains("items"))
      for (std::size_t i = 0; i < v.size(); ++i) check(schema["items"], v[i], at + "/" + std::to_string(i));
  }

  Json root_;
  std::vector<std::string> problems_;
};

AnalysisArtifacts debian_artifacts(AnalyzeOptions opts = {}) {
  opts.format = SourceFormat::debian;
  return analyze_snapshot(oracle::read_text(DEPNET_FIXTURES "/debian/Packages"), "Packages", kStamp, opts);
}

std::size_t line_count(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

}  // namespace

TEST_CASE("analyze: Debian fixture matches the frozen report") {
  const Json expected = load(DEPNET_FIXTURES "/debian/expected_report.json");
  const Json actual = debian_artifacts().report;
  for (const char* key : {"n", "m"}) CHECK(actual[key] == expected[key]);
  CHECK(canonical(actual["clustering"]["C"].get<double>()) == expected["clustering"]["C"].get<double>());
  CHECK(canonical(actual["path_length"]["L"].get<double>()) == expected["path_length"]["L"].get<double>());
  CHECK(render_json(actual) == render_json(expected));
}

TEST_CASE("analyze: report fields follow the manifest") {
  const Json manifest = load(DEPNET_FIXTURES "/debian/manifest.json");
  const Json r = debian_artifacts().report;
  CHECK(r["n"] == manifest["n"]);
  CHECK(r["m"] == manifest["alt_policy"]["first"]["m"]);
  CHECK(r["unresolved_edges"] == manifest["alt_policy"]["first"]["unresolved_edges"]);
  CHECK(r["ingest"]["malformed_line_count"] == manifest["malformed_lines"]);
  CHECK(r["degrees"]["zero_in_degree"] == manifest["zero_in_degree"]);
  CHECK(r["top_k"][0]["name"] == "libc6");
  CHECK(r["snapshot"]["dep_kind"] == "run");
  CHECK(r["path_length"]["mode"] == "exact");
  CHECK(r["diameter"]["exact"] == true);
}

TEST_CASE("analyze: top-level key order is fixed") {
  const Json r = debian_artifacts().report;
  std::vector<std::string> keys;
  for (const auto& [key, value] : r.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"schema", "snapshot", "ingest", "n", "m", "mean_degree",
                                         "unresolved_edges", "degrees", "components", "diameter", "clustering",
                                         "path_length", "power_law", "small_world", "top_k", "rng"});
  AnalyzeOptions with_ref;
  with_ref.published_values = true;
  const Json withref = debian_artifacts(with_ref).report;
  CHECK(withref.contains("reference_values"));
  CHECK(withref["reference_values"]["debian"]["l_random"] == 7.41);
}

TEST_CASE("analyze: reports validate against the published schema") {
  SchemaCheck schema(load(DEPNET_DOCS "/report.schema.json"));
  CHECK(schema.errors(debian_artifacts().report).empty());

  AnalyzeOptions sampled;
  sampled.published_values = true;
  sampled.fit_method = FitMethod::ccdf;
  sampled.l_mode = PathLengthMode::Kind::sampled;
  sampled.diameter_mode = DiameterMode::Kind::sampled;
  sampled.sample_sources = 5;
  CHECK(schema.errors(debian_artifacts(sampled).report).empty());

  AnalyzeOptions bsd;
  bsd.format = SourceFormat::bsd_index;
  for (auto kind : {DepKind::build, DepKind::run}) {
    bsd.dep_kind = kind;
    auto report = analyze_snapshot(oracle::read_text(DEPNET_FIXTURES "/bsd/INDEX"), "INDEX", kStamp, bsd).report;
    auto problems = schema.errors(report);
    for (const auto& p : problems) MESSAGE(p);
    CHECK(problems.empty());
  }

  // a tiny graph where the fit and the verdict both fail still validates
  auto tiny = analyze_snapshot("Package: a\nDepends: b\n\nPackage: b\n", "tiny", kStamp, AnalyzeOptions{});
  CHECK(tiny.report["power_law"]["in"]["alpha"].is_null());
  CHECK(tiny.report["small_world"]["is_small_world"].is_null());
  CHECK(schema.errors(tiny.report).empty());

  Json broken = debian_artifacts().report;
  broken["clustering"]["C"] = 1.5;
  broken.erase("rng");
  CHECK(schema.errors(broken).size() == 2);
}

TEST_CASE("analyze: CSV headers and row counts") {
  auto a = debian_artifacts();
  const auto n = a.report["n"].get<std::size_t>();
  for (const std::string* csv : {&a.degree_in_csv, &a.degree_out_csv, &a.scatter_in_csv, &a.scatter_out_csv})
    CHECK(csv->rfind("degree,count\n", 0) == 0);
  CHECK(a.top_k_csv.rfind("rank,name,in_degree\n", 0) == 0);

  auto total = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::uint64_t sum = 0;
    while (std::getline(in, line)) sum += std::stoull(line.substr(line.find(',') + 1));
    return sum;
  };
  CHECK(total(a.degree_in_csv) == n);
  CHECK(total(a.degree_out_csv) == n);
  CHECK(total(a.scatter_in_csv) == n - a.report["power_law"]["in"]["zero_degree_excluded"].get<std::size_t>());
  CHECK(line_count(a.top_k_csv) == 1 + std::min<std::size_t>(20, n));
}

TEST_CASE("run_analyze: writes files, is deterministic, handles errors") {
  const fs::path out = scratch("analyze");
  std::ostringstream log;
  AnalyzeOptions opts;
  REQUIRE(run_analyze(DEPNET_FIXTURES "/debian/Packages", out, opts, log) == exit_code::ok);
  for (const char* f : {"report.json", "degree_in.csv", "degree_out.csv", "scatter_in.csv", "scatter_out.csv",
                        "top_k.csv"})
    CHECK(fs::exists(out / f));
  const std::string first = oracle::read_text((out / "report.json").string());
  REQUIRE(run_analyze(DEPNET_FIXTURES "/debian/Packages", out, opts, log) == exit_code::ok);
  CHECK(oracle::read_text((out / "report.json").string()) == first);

  const fs::path missing_out = scratch("missing");
  CHECK(run_analyze(DEPNET_FIXTURES "/does/not/exist", missing_out, opts, log) == exit_code::input_error);
  CHECK_FALSE(fs::exists(missing_out));

  const fs::path empty_in = scratch("empty_input");
  fs::create_directories(empty_in);
  { std::ofstream(empty_in / "Packages"); }
  const fs::path empty_out = scratch("empty_out");
  CHECK(run_analyze(empty_in / "Packages", empty_out, opts, log) == exit_code::empty_parse);
  CHECK_FALSE(fs::exists(empty_out));
}

TEST_CASE("run_analyze: BSD dependency kinds differ as the manifest says") {
  const Json manifest = load(DEPNET_FIXTURES "/bsd/manifest.json");
  std::ostringstream log;
  AnalyzeOptions opts;
  opts.format = SourceFormat::bsd_index;
  opts.timestamp = kStamp;
  Json reports[2];
  const DepKind kinds[2] = {DepKind::build, DepKind::run};
  for (int i = 0; i < 2; ++i) {
    opts.dep_kind = kinds[i];
    const fs::path out = scratch(std::string("bsd_") + (i == 0 ? "build" : "run"));
    REQUIRE(run_analyze(DEPNET_FIXTURES "/bsd/INDEX", out, opts, log) == exit_code::ok);
    reports[i] = load(out / "report.json");
  }
  CHECK(reports[0]["m"] == manifest["dep_kind"]["build"]["m"]);
  CHECK(reports[1]["m"] == manifest["dep_kind"]["run"]["m"]);
  CHECK(reports[0]["m"].get<int>() - reports[1]["m"].get<int>() ==
        manifest["dep_kind"]["build"]["m"].get<int>() - manifest["dep_kind"]["run"]["m"].get<int>());
}

TEST_CASE("compare: identity, published columns, schema mismatch") {
  const Json a = debian_artifacts().report;
  const std::string table = compare_reports(a, a, false);
  std::istringstream in(table);
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream cells(line);
    std::string label, va, vb, delta;
    cells >> label >> va >> vb >> delta;
    CHECK(va == vb);
    CHECK(delta == "0");
  }
  CHECK(rows == 7);

  const std::string with_published = compare_reports(a, a, true);
  CHECK(with_published.find("Debian-2004") != std::string::npos);
  CHECK(with_published.find("19504") != std::string::npos);
  CHECK(with_published.find("10222") != std::string::npos);
  CHECK(with_published.find("2.33") != std::string::npos);

  Json wrong = a;
  wrong["schema"] = "something-else/1";
  CHECK_THROWS_AS(compare_reports(a, wrong, false), InputError);

  const fs::path dir = scratch("compare");
  fs::create_directories(dir);
  { std::ofstream(dir / "a.json") << render_json(a); }
  { std::ofstream(dir / "bad.json") << render_json(wrong); }
  std::ostringstream out, err;
  CHECK(run_compare(dir / "a.json", dir / "a.json", false, out, err) == exit_code::ok);
  CHECK(run_compare(dir / "a.json", dir / "bad.json", false, out, err) == exit_code::input_error);
  CHECK(run_compare(dir / "a.json", dir / "none.json", false, out, err) == exit_code::input_error);
}

TEST_CASE("compare: Debian vs BSD rows carry each report's values") {
  const Json deb = debian_artifacts().report;
  AnalyzeOptions bsd_opts;
  bsd_opts.format = SourceFormat::bsd_index;
  const Json bsd = analyze_snapshot(oracle::read_text(DEPNET_FIXTURES "/bsd/INDEX"), "INDEX", kStamp, bsd_opts).report;
  const std::string table = compare_reports(deb, bsd, false);
  std::istringstream in(table);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  std::istringstream n_row(line);
  std::string label, va, vb;
  n_row >> label >> va >> vb;
  CHECK(label == "n");
  CHECK(std::stoi(va) == deb["n"].get<int>());
  CHECK(std::stoi(vb) == bsd["n"].get<int>());
}

TEST_CASE("baseline: complete graph and reproducibility") {
  BaselineOptions k10{10, 45, 1, 1, std::nullopt, 1000};
  const Json r = random_baseline_report(k10);
  CHECK(r["measured"]["C_mean"] == 1.0);
  CHECK(r["measured"]["L_mean"] == 1.0);
  CHECK(r["schema"] == kBaselineSchema);

  BaselineOptions small{200, 400, 5, 7, std::nullopt, 1000};
  CHECK(render_json(random_baseline_report(small)) == render_json(random_baseline_report(small)));

  std::ostringstream out, err;
  CHECK(run_random_baseline({5, 11, 1, 1, std::nullopt, 10}, std::nullopt, out, err) == exit_code::input_error);
  CHECK(run_random_baseline({0, 0, 1, 1, std::nullopt, 10}, std::nullopt, out, err) == exit_code::input_error);
  CHECK(run_random_baseline({10, 5, 0, 1, std::nullopt, 10}, std::nullopt, out, err) == exit_code::input_error);

  const fs::path dir = scratch("baseline");
  CHECK(run_random_baseline(k10, dir / "b.json", out, err) == exit_code::ok);
  CHECK(load(dir / "b.json")["measured"]["C_mean"] == 1.0);
}

TEST_CASE("baseline: Debian-scale analytic row") {
  BaselineOptions deb{19504, 73960, 1, 1, PathLengthMode::Kind::sampled, 50};
  const Json r = random_baseline_report(deb);
  // k = m/n = 3.79 reproduces the published 7.41
  CHECK(std::abs(r["analytic"]["directed"]["l_random"].get<double>() - 7.41) <= 0.01);
  CHECK(format_baseline_table(r).find("7.41") != std::string::npos);
}

TEST_CASE("canonical formatting") {
  CHECK(canonical(0.1 + 0.2) == 0.3);
  CHECK(canonical(1.0 / 3.0) == 0.333333333);
  CHECK(canonical(-0.0) == 0.0);
  CHECK(canonical(123456789012.0) == 123456789000.0);
}
