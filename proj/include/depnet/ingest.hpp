#ifndef DEPNET_INGEST_HPP
#define DEPNET_INGEST_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace depnet {

enum class SourceFormat { debian, bsd_index };

/// How a Debian `a | b` alternative group becomes edges.
enum class AltPolicy {
  first,  ///< keep the first alternative (apt's default candidate)
  all,    ///< keep every alternative
  none,   ///< drop groups that offer a choice
};

/// One package and the names it declares as dependencies.
///
/// Dependency lists are duplicate-free, never contain `name`, and keep
/// the order of first declaration.
struct PackageRecord {
  std::string name;
  std::vector<std::string> build_deps;
  std::vector<std::string> run_deps;
  SourceFormat source_format = SourceFormat::debian;

  bool operator==(const PackageRecord&) const = default;
};

struct MalformedLine {
  std::size_t line = 0;  // 1-based
  std::string reason;

  bool operator==(const MalformedLine&) const = default;
};

struct IngestDiagnostics {
  std::size_t stanza_count = 0;
  std::size_t dropped_self_refs = 0;
  std::size_t alternative_groups_seen = 0;
  std::vector<MalformedLine> malformed_lines;

  bool clean() const { return malformed_lines.empty(); }
};

struct IngestResult {
  std::vector<PackageRecord> records;
  IngestDiagnostics diagnostics;
};

struct DebianOptions {
  AltPolicy alt_policy = AltPolicy::first;
  // Pre-Depends entries are merged ahead of Depends when set.
  bool include_pre_depends = false;
};

/// Parses a Debian `Packages` control file. Never throws on bad input:
/// anything that cannot be used lands in the diagnostics. Duplicate
/// package stanzas resolve last-wins.
IngestResult parse_debian_packages(std::string_view text, const DebianOptions& options = {});

inline IngestResult parse_debian_packages(std::string_view text, AltPolicy alt_policy) {
  return parse_debian_packages(text, DebianOptions{alt_policy, false});
}

/// Parses a FreeBSD ports INDEX file (`|`-delimited, build deps in field 8,
/// run deps in field 9). Lines with fewer than 9 fields are skipped.
IngestResult parse_bsd_index(std::string_view text);

/// True when `bytes` is well-formed UTF-8.
bool is_valid_utf8(std::string_view bytes);

std::string_view to_string(SourceFormat format);
std::string_view to_string(AltPolicy policy);
std::optional<SourceFormat> parse_source_format(std::string_view text);
std::optional<AltPolicy> parse_alt_policy(std::string_view text);

}  // namespace depnet

#endif  // DEPNET_INGEST_HPP
