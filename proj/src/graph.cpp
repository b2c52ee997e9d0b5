#include "depnet/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "depnet/rng.hpp"

namespace depnet {

namespace {

// Builds CSR offsets/items from (key, value) pairs already sorted by key.
void fill_csr(std::size_t n, const std::vector<Edge>& sorted, std::vector<std::size_t>& offsets,
              std::vector<VertexId>& items) {
  offsets.assign(n + 1, 0);
  items.clear();
  items.reserve(sorted.size());
  for (const auto& [key, value] : sorted) {
    ++offsets[key + 1];
    items.push_back(value);
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
}

std::string padded_id(std::size_t id, std::size_t width) {
  std::string digits = std::to_string(id);
  return std::string(width - digits.size(), '0') + digits;
}

}  // namespace

DependencyGraph::DependencyGraph(std::vector<std::string> names, std::span<const Edge> edges,
                                 std::size_t unresolved_edges)
    : names_(std::move(names)), unresolved_edges_(unresolved_edges) {
  for (std::size_t i = 1; i < names_.size(); ++i) {
    if (!(names_[i - 1] < names_[i]))
      throw std::invalid_argument("vertex names must be unique and sorted: '" + names_[i] + "'");
  }
  const std::size_t n = names_.size();

  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u != v) out.emplace_back(u, v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());

  std::vector<Edge> in;
  in.reserve(out.size());
  for (const auto& [u, v] : out) in.emplace_back(v, u);
  std::sort(in.begin(), in.end());

  std::vector<Edge> und;
  und.reserve(2 * out.size());
  for (const auto& [u, v] : out) {
    und.emplace_back(u, v);
    und.emplace_back(v, u);
  }
  std::sort(und.begin(), und.end());
  und.erase(std::unique(und.begin(), und.end()), und.end());

  fill_csr(n, out, out_offsets_, out_targets_);
  fill_csr(n, in, in_offsets_, in_sources_);
  fill_csr(n, und, und_offsets_, und_neighbors_);
}

DependencyGraph DependencyGraph::with_numbered_vertices(std::size_t n, std::span<const Edge> edges) {
  const std::size_t width = n <= 1 ? 1 : std::to_string(n - 1).size();
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(padded_id(i, width));
  return DependencyGraph(std::move(names), edges);
}

std::optional<VertexId> DependencyGraph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

bool DependencyGraph::has_edge(VertexId from, VertexId to) const {
  auto out = out_neighbors(from);
  return std::binary_search(out.begin(), out.end(), to);
}

std::vector<Edge> DependencyGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(m());
  for (VertexId u = 0; u < n(); ++u)
    for (VertexId v : out_neighbors(u)) result.emplace_back(u, v);
  return result;
}

void DependencyGraph::verify() const {
  const std::size_t count = n();
  if (out_offsets_.size() != count + 1 || in_offsets_.size() != count + 1 ||
      und_offsets_.size() != count + 1)
    throw InvariantViolation("adjacency offsets do not match vertex count");
  if (out_targets_.size() != in_sources_.size())
    throw InvariantViolation("sum of out-degrees differs from sum of in-degrees");
  for (VertexId u = 0; u < count; ++u) {
    auto out = out_neighbors(u);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i] >= count) throw InvariantViolation("adjacency references an invalid vertex");
      if (out[i] == u) throw InvariantViolation("self-loop on '" + names_[u] + "'");
      if (i > 0 && out[i - 1] >= out[i]) throw InvariantViolation("duplicate or unsorted edge");
      auto in = in_neighbors(out[i]);
      if (!std::binary_search(in.begin(), in.end(), u))
        throw InvariantViolation("in-adjacency is missing a reverse entry");
    }
    for (VertexId w : neighbors(u)) {
      if (w >= count) throw InvariantViolation("adjacency references an invalid vertex");
      auto back = neighbors(w);
      if (!std::binary_search(back.begin(), back.end(), u))
        throw InvariantViolation("undirected projection is not symmetric");
    }
  }
}

DependencyGraph build_graph(std::span<const PackageRecord> records, DepKind dep_kind,
                            UnknownPolicy unknown_policy) {
  std::vector<std::string> names;
  names.reserve(records.size());
  for (const auto& r : records) names.push_back(r.name);
  std::sort(names.begin(), names.end());
  if (auto dup = std::adjacent_find(names.begin(), names.end()); dup != names.end())
    throw std::invalid_argument("duplicate package name '" + *dup + "'");

  auto deps_of = [dep_kind](const PackageRecord& r) -> const std::vector<std::string>& {
    return dep_kind == DepKind::build ? r.build_deps : r.run_deps;
  };

  std::size_t unresolved = 0;
  if (unknown_policy == UnknownPolicy::stub) {
    std::unordered_set<std::string> known(names.begin(), names.end());
    std::vector<std::string> stubs;
    for (const auto& r : records)
      for (const auto& dep : deps_of(r))
        if (!known.contains(dep)) {
          ++unresolved;
          stubs.push_back(dep);
        }
    std::sort(stubs.begin(), stubs.end());
    stubs.erase(std::unique(stubs.begin(), stubs.end()), stubs.end());
    names.insert(names.end(), stubs.begin(), stubs.end());
    std::sort(names.begin(), names.end());
  }

  std::unordered_map<std::string_view, VertexId> id_of;
  id_of.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) id_of.emplace(names[i], static_cast<VertexId>(i));

  std::vector<Edge> edges;
  for (const auto& r : records) {
    const VertexId u = id_of.at(r.name);
    for (const auto& dep : deps_of(r)) {
      auto it = id_of.find(dep);
      if (it == id_of.end()) {
        ++unresolved;
        continue;
      }
      edges.emplace_back(u, it->second);
    }
  }
  return DependencyGraph(std::move(names), edges, unresolved);
}

std::string to_edge_list(const DependencyGraph& g) {
  std::vector<std::string> lines;
  lines.reserve(g.m() + g.n());
  for (VertexId u = 0; u < g.n(); ++u) {
    if (g.degree(u) == 0) lines.push_back(g.name(u));
    for (VertexId v : g.out_neighbors(u)) lines.push_back(g.name(u) + '\t' + g.name(v));
  }
  std::sort(lines.begin(), lines.end());
  std::string text;
  for (const auto& line : lines) {
    text += line;
    text += '\n';
  }
  return text;
}

DependencyGraph from_edge_list(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      names.emplace_back(line);
      continue;
    }
    std::string source(line.substr(0, tab)), target(line.substr(tab + 1));
    if (source.empty() || target.empty() || target.find('\t') != std::string::npos)
      throw std::invalid_argument("malformed edge-list line: '" + std::string(line) + "'");
    names.push_back(source);
    names.push_back(target);
    pairs.emplace_back(std::move(source), std::move(target));
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  auto id = [&names](const std::string& name) {
    return static_cast<VertexId>(std::lower_bound(names.begin(), names.end(), name) - names.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [s, t] : pairs) edges.emplace_back(id(s), id(t));
  return DependencyGraph(std::move(names), edges);
}

std::vector<VertexId> ComponentLabeling::giant_vertices() const {
  std::vector<VertexId> result;
  if (size_by_label.empty()) return result;
  result.reserve(size_by_label[giant_label]);
  for (std::size_t v = 0; v < label.size(); ++v)
    if (label[v] == giant_label) result.push_back(static_cast<VertexId>(v));
  return result;
}

ComponentLabeling label_components(const DependencyGraph& g) {
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  ComponentLabeling out;
  out.label.assign(g.n(), kNone);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < g.n(); ++root) {
    if (out.label[root] != kNone) continue;
    const auto id = static_cast<std::uint32_t>(out.size_by_label.size());
    std::size_t size = 0;
    out.label[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      ++size;
      for (VertexId w : g.neighbors(u)) {
        if (out.label[w] == kNone) {
          out.label[w] = id;
          stack.push_back(w);
        }
      }
    }
    out.size_by_label.push_back(size);
  }

  auto& s = out.summary;
  s.component_count = out.size_by_label.size();
  s.component_sizes = out.size_by_label;
  std::sort(s.component_sizes.begin(), s.component_sizes.end(), std::greater<>());
  if (!out.size_by_label.empty()) {
    auto giant = std::max_element(out.size_by_label.begin(), out.size_by_label.end());
    out.giant_label = static_cast<std::uint32_t>(giant - out.size_by_label.begin());
    s.giant_size = *giant;
    s.giant_fraction = static_cast<double>(s.giant_size) / static_cast<double>(g.n());
  }
  return out;
}

ComponentSummary weakly_connected_components(const DependencyGraph& g) {
  return label_components(g).summary;
}

std::vector<std::uint32_t> bfs_distances(const DependencyGraph& g, VertexId source,
                                         Orientation orientation) {
  if (source >= g.n()) throw std::out_of_range("BFS source " + std::to_string(source) + " out of range");
  std::vector<std::uint32_t> dist(g.n(), kUnreachable);
  std::vector<VertexId> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    auto next = orientation == Orientation::directed ? g.out_neighbors(u) : g.neighbors(u);
    for (VertexId w : next) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

BfsWorkspace::BfsWorkspace(const DependencyGraph& g) : g_(&g), dist_(g.n(), kUnreachable) {
  queue_.reserve(g.n());
}

SweepStats BfsWorkspace::sweep(VertexId source) {
  if (source >= g_->n()) throw std::out_of_range("BFS source out of range");
  // only reset what the previous sweep touched
  for (VertexId v : queue_) dist_[v] = kUnreachable;
  queue_.clear();

  SweepStats stats;
  dist_[source] = 0;
  queue_.push_back(source);
  stats.farthest = source;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const VertexId u = queue_[head];
    const std::uint32_t du = dist_[u];
    stats.distance_sum += du;
    if (du > stats.eccentricity) {
      stats.eccentricity = du;
      stats.farthest = u;
    }
    for (VertexId w : g_->neighbors(u)) {
      if (dist_[w] == kUnreachable) {
        dist_[w] = du + 1;
        queue_.push_back(w);
      }
    }
  }
  stats.reached = queue_.size();
  return stats;
}

namespace {

// Exact diameter by eccentricity bounding: every BFS from v tightens
// max(d, ecc(v) - d) <= ecc(w) <= ecc(v) + d for all w, and vertices whose
// upper bound cannot exceed the best known eccentricity drop out.
DiameterResult bounded_exact_diameter(const DependencyGraph& g, const std::vector<VertexId>& giant) {
  DiameterResult result;
  if (giant.size() <= 1) return result;

  BfsWorkspace bfs(g);
  std::vector<std::uint32_t> lower(giant.size(), 0);
  std::vector<std::uint32_t> upper(giant.size(), std::numeric_limits<std::uint32_t>::max());
  std::vector<std::size_t> candidates(giant.size());
  std::iota(candidates.begin(), candidates.end(), std::size_t{0});

  std::uint32_t best = 0;
  std::uint32_t bound = std::numeric_limits<std::uint32_t>::max();
  bool pick_high = true;

  while (!candidates.empty() && best < bound) {
    auto better = [&](std::size_t a, std::size_t b) {
      if (pick_high ? upper[a] != upper[b] : lower[a] != lower[b])
        return pick_high ? upper[a] > upper[b] : lower[a] < lower[b];
      const auto da = g.degree(giant[a]), db = g.degree(giant[b]);
      if (da != db) return da > db;
      return a < b;
    };
    const std::size_t pick = *std::min_element(candidates.begin(), candidates.end(), better);
    pick_high = !pick_high;

    const SweepStats stats = bfs.sweep(giant[pick]);
    ++result.bfs_runs;
    const std::uint32_t ecc = stats.eccentricity;
    best = std::max(best, ecc);
    bound = std::min(bound, 2 * ecc);

    const auto dist = bfs.distances();
    for (std::size_t c : candidates) {
      const std::uint32_t d = dist[giant[c]];
      lower[c] = std::max({lower[c], d, ecc - d});
      upper[c] = std::min(upper[c], ecc + d);
      best = std::max(best, lower[c]);
    }

    std::uint32_t max_upper = best;
    std::erase_if(candidates, [&](std::size_t c) { return upper[c] <= best; });
    for (std::size_t c : candidates) max_upper = std::max(max_upper, upper[c]);
    bound = std::min(bound, max_upper);
  }
  result.value = best;
  return result;
}

DiameterResult sampled_diameter(const DependencyGraph& g, const std::vector<VertexId>& giant,
                                std::size_t sweeps, std::uint64_t seed) {
  DiameterResult result;
  result.exact = false;
  if (giant.size() <= 1 || sweeps == 0) return result;

  Rng rng(seed);
  BfsWorkspace bfs(g);
  std::unordered_set<VertexId> used;
  VertexId source = giant[rng.below(giant.size())];
  for (std::size_t i = 0; i < sweeps && used.size() < giant.size(); ++i) {
    used.insert(source);
    const SweepStats stats = bfs.sweep(source);
    ++result.bfs_runs;
    result.value = std::max(result.value, stats.eccentricity);
    // chase the far end of the previous sweep, fall back to a fresh start
    source = stats.farthest;
    if (used.size() == giant.size()) break;
    while (used.contains(source)) source = giant[rng.below(giant.size())];
  }
  return result;
}

}  // namespace

DiameterResult diameter_of_giant(const DependencyGraph& g, DiameterMode mode) {
  if (g.n() == 0) throw std::domain_error("diameter of an empty graph is undefined");
  const auto giant = label_components(g).giant_vertices();
  if (mode.kind == DiameterMode::Kind::sampled) return sampled_diameter(g, giant, mode.sweeps, mode.seed);
  return bounded_exact_diameter(g, giant);
}

std::string_view to_string(DepKind kind) { return kind == DepKind::build ? "build" : "run"; }

std::string_view to_string(UnknownPolicy policy) {
  return policy == UnknownPolicy::drop ? "drop" : "stub";
}

std::optional<DepKind> parse_dep_kind(std::string_view text) {
  if (text == "build") return DepKind::build;
  if (text == "run") return DepKind::run;
  return std::nullopt;
}

std::optional<UnknownPolicy> parse_unknown_policy(std::string_view text) {
  if (text == "drop") return UnknownPolicy::drop;
  if (text == "stub") return UnknownPolicy::stub;
  return std::nullopt;
}

}  // namespace depnet
