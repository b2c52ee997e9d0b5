#include "depnet/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <unordered_map>

namespace depnet {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

// Splits on '\n', dropping a trailing '\r' from each line.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

bool valid_package_name(std::string_view name) {
  return !name.empty() && std::none_of(name.begin(), name.end(), [](char c) {
    return c == '|' || is_space(c);
  });
}

// Appends `dep` unless it is the record's own name or already present.
void add_dependency(std::vector<std::string>& deps, std::string_view dep, std::string_view self,
                    IngestDiagnostics& diag) {
  if (dep == self) {
    ++diag.dropped_self_refs;
    return;
  }
  if (std::find(deps.begin(), deps.end(), dep) == deps.end()) deps.emplace_back(dep);
}

// "libfoo:any (>= 1.0) [i386] <!nocheck>" -> "libfoo"
std::string_view strip_relation(std::string_view alt) {
  std::size_t cut = alt.find_first_of("([<");
  std::string_view name = trim(alt.substr(0, cut));
  std::size_t ws = name.find_first_of(" \t");
  if (ws != std::string_view::npos) name = name.substr(0, ws);
  std::size_t colon = name.find(':');
  if (colon != std::string_view::npos) name = name.substr(0, colon);
  return name;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) tokens.push_back(s.substr(start, i - start));
  }
  return tokens;
}

void parse_relation_field(std::string_view value, AltPolicy policy, std::string_view self,
                          std::vector<std::string>& deps, IngestDiagnostics& diag) {
  for (std::string_view group : split(value, ',')) {
    std::vector<std::string_view> alternatives;
    for (std::string_view alt : split(group, '|')) {
      std::string_view name = strip_relation(alt);
      if (!name.empty()) alternatives.push_back(name);
    }
    if (alternatives.empty()) continue;
    if (alternatives.size() > 1) {
      ++diag.alternative_groups_seen;
      if (policy == AltPolicy::none) continue;
      if (policy == AltPolicy::first) alternatives.resize(1);
    }
    for (std::string_view name : alternatives) add_dependency(deps, name, self, diag);
  }
}

struct Field {
  std::string name;
  std::string value;
  std::size_t line;
  bool valid_utf8;
};

// Records are kept at the position of the first stanza that named them;
// later duplicates overwrite in place.
class RecordTable {
 public:
  // Returns the line of the earlier definition when `name` was already
  // present.
  std::optional<std::size_t> put(PackageRecord record, std::size_t line) {
    auto [it, inserted] = index_.try_emplace(record.name, records_.size());
    if (inserted) {
      records_.push_back(std::move(record));
      lines_.push_back(line);
      return std::nullopt;
    }
    std::size_t previous = lines_[it->second];
    records_[it->second] = std::move(record);
    lines_[it->second] = line;
    return previous;
  }

  std::vector<PackageRecord> take() { return std::move(records_); }

 private:
  std::vector<PackageRecord> records_;
  std::vector<std::size_t> lines_;
  std::unordered_map<std::string, std::size_t> index_;
};

void finish_stanza(std::vector<Field>& fields, std::size_t stanza_line, const DebianOptions& options,
                   RecordTable& table, IngestDiagnostics& diag) {
  if (fields.empty()) return;
  const Field* package = nullptr;
  const Field* depends = nullptr;
  const Field* pre_depends = nullptr;
  for (const Field& f : fields) {
    if (iequals(f.name, "Package")) package = &f;
    else if (iequals(f.name, "Depends")) depends = &f;
    else if (iequals(f.name, "Pre-Depends")) pre_depends = &f;
  }

  if (package == nullptr) {
    diag.malformed_lines.push_back({stanza_line, "stanza has no Package field; skipped"});
    return;
  }
  if (!package->valid_utf8) {
    diag.malformed_lines.push_back({package->line, "Package field is not valid UTF-8; stanza skipped"});
    return;
  }
  std::string_view name = trim(package->value);
  if (!valid_package_name(name)) {
    diag.malformed_lines.push_back({package->line, "invalid package name; stanza skipped"});
    return;
  }

  PackageRecord record;
  record.name = std::string(name);
  record.source_format = SourceFormat::debian;

  auto read_relations = [&](const Field* field) {
    if (field == nullptr) return;
    if (!field->valid_utf8) {
      diag.malformed_lines.push_back({field->line, field->name + " field is not valid UTF-8; ignored"});
      return;
    }
    parse_relation_field(field->value, options.alt_policy, record.name, record.run_deps, diag);
  };
  if (options.include_pre_depends) read_relations(pre_depends);
  read_relations(depends);

  std::size_t line = package->line;
  if (auto previous = table.put(std::move(record), line)) {
    diag.malformed_lines.push_back(
        {line, "duplicate package '" + std::string(name) + "' (previous stanza at line " +
                   std::to_string(*previous) + "); last stanza wins"});
  }
}

}  // namespace

bool is_valid_utf8(std::string_view bytes) {
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    auto c = static_cast<unsigned char>(bytes[i]);
    std::size_t len;
    std::uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > n) return false;
    for (std::size_t k = 1; k < len; ++k) {
      auto cc = static_cast<unsigned char>(bytes[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // overlong forms, surrogates, out of range
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF)
      return false;
    i += len;
  }
  return true;
}

IngestResult parse_debian_packages(std::string_view text, const DebianOptions& options) {
  IngestResult result;
  IngestDiagnostics& diag = result.diagnostics;
  RecordTable table;

  std::vector<Field> fields;
  std::size_t stanza_line = 0;
  bool in_stanza = false;
  const auto lines = split_lines(text);

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view line = lines[i];

    if (trim(line).empty()) {
      finish_stanza(fields, stanza_line, options, table, diag);
      fields.clear();
      in_stanza = false;
      continue;
    }
    if (!in_stanza) {
      in_stanza = true;
      ++diag.stanza_count;
      stanza_line = line_no;
    }

    if (line.front() == ' ' || line.front() == '\t') {
      if (fields.empty()) {
        diag.malformed_lines.push_back({line_no, "continuation line outside of a field"});
        continue;
      }
      Field& last = fields.back();
      last.value += ' ';
      last.value += trim(line);
      last.valid_utf8 = last.valid_utf8 && is_valid_utf8(line);
      continue;
    }

    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos || trim(line.substr(0, colon)).empty()) {
      diag.malformed_lines.push_back({line_no, "field line has no 'Name:' prefix"});
      continue;
    }
    fields.push_back(Field{std::string(trim(line.substr(0, colon))),
                           std::string(trim(line.substr(colon + 1))), line_no, is_valid_utf8(line)});
  }
  finish_stanza(fields, stanza_line, options, table, diag);

  result.records = table.take();
  return result;
}

IngestResult parse_bsd_index(std::string_view text) {
  constexpr std::size_t kNameField = 0;
  constexpr std::size_t kBuildDepsField = 7;
  constexpr std::size_t kRunDepsField = 8;
  constexpr std::size_t kMinFields = 9;

  IngestResult result;
  IngestDiagnostics& diag = result.diagnostics;
  RecordTable table;

  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view line = lines[i];
    if (trim(line).empty()) continue;
    ++diag.stanza_count;

    auto fields = split(line, '|');
    if (fields.size() < kMinFields) {
      diag.malformed_lines.push_back(
          {line_no, "expected at least 9 '|'-delimited fields, found " + std::to_string(fields.size())});
      continue;
    }
    std::string_view name = trim(fields[kNameField]);
    if (!valid_package_name(name)) {
      diag.malformed_lines.push_back({line_no, "invalid package name"});
      continue;
    }

    PackageRecord record;
    record.name = std::string(name);
    record.source_format = SourceFormat::bsd_index;
    for (std::string_view dep : split_ws(fields[kBuildDepsField]))
      add_dependency(record.build_deps, dep, record.name, diag);
    for (std::string_view dep : split_ws(fields[kRunDepsField]))
      add_dependency(record.run_deps, dep, record.name, diag);

    if (auto previous = table.put(std::move(record), line_no)) {
      diag.malformed_lines.push_back(
          {line_no, "duplicate package '" + std::string(name) + "' (previous entry at line " +
                        std::to_string(*previous) + "); last entry wins"});
    }
  }

  result.records = table.take();
  return result;
}

std::string_view to_string(SourceFormat format) {
  return format == SourceFormat::debian ? "debian" : "bsd-index";
}

std::string_view to_string(AltPolicy policy) {
  switch (policy) {
    case AltPolicy::first: return "first";
    case AltPolicy::all: return "all";
    case AltPolicy::none: return "none";
  }
  return "first";
}

std::optional<SourceFormat> parse_source_format(std::string_view text) {
  if (text == "debian") return SourceFormat::debian;
  if (text == "bsd-index") return SourceFormat::bsd_index;
  return std::nullopt;
}

std::optional<AltPolicy> parse_alt_policy(std::string_view text) {
  if (text == "first") return AltPolicy::first;
  if (text == "all") return AltPolicy::all;
  if (text == "none") return AltPolicy::none;
  return std::nullopt;
}

}  // namespace depnet
