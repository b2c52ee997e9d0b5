#ifndef DEPNET_REPORT_HPP
#define DEPNET_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "depnet/graph.hpp"
#include "depnet/ingest.hpp"
#include "depnet/metrics.hpp"
#include "depnet/powerlaw.hpp"

namespace depnet {

using Json = nlohmann::ordered_json;

/// Process exit statuses of the command-line tool.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int input_error = 2;
inline constexpr int empty_parse = 3;
inline constexpr int invariant_violation = 4;
}  // namespace exit_code

inline constexpr std::string_view kReportSchema = "depnet-report/1";
inline constexpr std::string_view kBaselineSchema = "depnet-baseline/1";

/// Giant components at or above this size switch path length and
/// diameter to their sampled forms unless a mode is forced.
inline constexpr std::size_t kExactGiantLimit = 50000;

class EmptyParse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AnalyzeOptions {
  SourceFormat format = SourceFormat::debian;
  /// Unset: run for Debian metadata (the only kind it carries), build for
  /// ports INDEX files.
  std::optional<DepKind> dep_kind;
  AltPolicy alt_policy = AltPolicy::first;
  bool include_pre_depends = false;
  UnknownPolicy unknown_policy = UnknownPolicy::drop;
  std::uint32_t k_min = 1;
  FitMethod fit_method = FitMethod::frequency;
  std::size_t top = 20;
  /// Unset: exact below kExactGiantLimit giant vertices, sampled above.
  std::optional<PathLengthMode::Kind> l_mode;
  std::size_t sample_sources = 1000;
  std::optional<DiameterMode::Kind> diameter_mode;
  std::size_t diameter_sweeps = 16;
  std::uint64_t seed = 1;
  DegreeConvention degree_convention = DegreeConvention::directed;
  SmallWorldThresholds thresholds;
  std::string label;
  /// Unset: the input file's modification time (UTC).
  std::optional<std::string> timestamp;
  bool published_values = false;
};

DepKind effective_dep_kind(const AnalyzeOptions& options);

struct AnalysisArtifacts {
  Json report;
  std::string degree_in_csv;
  std::string degree_out_csv;
  std::string scatter_in_csv;
  std::string scatter_out_csv;
  std::string top_k_csv;
};

/// Runs the whole pipeline on in-memory metadata. Throws EmptyParse when
/// nothing parses and InvariantViolation when an internal check fails.
AnalysisArtifacts analyze_snapshot(std::string_view text, std::string_view input_path,
                                   std::string_view timestamp, const AnalyzeOptions& options);

/// Rounds to 9 significant digits so reports print identically.
double canonical(double value);

/// Pretty-printed JSON with a trailing newline.
std::string render_json(const Json& doc);

/// Published values of the 2004 Debian/FreeBSD snapshots, display only.
Json reference_values();

/// analyze subcommand: reads `input`, writes report.json and the CSVs into
/// `out_dir`. Returns an exit_code value.
int run_analyze(const std::filesystem::path& input, const std::filesystem::path& out_dir,
                const AnalyzeOptions& options, std::ostream& log);

/// Side-by-side table of two reports (plus the published columns when
/// `published_values` is set).
std::string compare_reports(const Json& a, const Json& b, bool published_values);

int run_compare(const std::filesystem::path& a, const std::filesystem::path& b, bool published_values,
                std::ostream& out, std::ostream& err);

struct BaselineOptions {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t seeds = 1;
  std::uint64_t first_seed = 1;
  std::optional<PathLengthMode::Kind> l_mode;
  std::size_t sample_sources = 1000;
};

/// Measures C and L over `seeds` G(n, m) draws next to the analytic values.
Json random_baseline_report(const BaselineOptions& options);

std::string format_baseline_table(const Json& report);

int run_random_baseline(const BaselineOptions& options, const std::optional<std::filesystem::path>& output,
                        std::ostream& out, std::ostream& err);

}  // namespace depnet

#endif  // DEPNET_REPORT_HPP
