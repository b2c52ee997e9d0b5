#ifndef DEPNET_GRAPH_HPP
#define DEPNET_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "depnet/ingest.hpp"

namespace depnet {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Marks an unreachable vertex in a distance array.
inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

enum class DepKind { build, run };
enum class UnknownPolicy { drop, stub };

/// Raised when a structural invariant fails to hold.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Simple directed graph over package names, immutable once built.
///
/// Vertex ids are dense and follow lexicographic name order. Besides the
/// directed out/in adjacency the graph keeps its undirected projection
/// (u ~ v iff u->v or v->u), which is what components, geodesics and
/// clustering run on. All adjacency lists are sorted.
class DependencyGraph {
 public:
  DependencyGraph() = default;

  /// `names` must be strictly increasing. Self-loops and repeated edges
  /// in `edges` are discarded; ids must be < names.size().
  DependencyGraph(std::vector<std::string> names, std::span<const Edge> edges,
                  std::size_t unresolved_edges = 0);

  /// Vertices named by zero-padded decimal ids, so name order matches id
  /// order.
  static DependencyGraph with_numbered_vertices(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const { return names_.size(); }
  std::size_t m() const { return out_targets_.size(); }
  std::size_t unresolved_edges() const { return unresolved_edges_; }
  /// Number of edges in the undirected projection.
  std::size_t undirected_edge_count() const { return und_neighbors_.size() / 2; }

  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;

  std::span<const VertexId> out_neighbors(VertexId v) const {
    return slice(out_offsets_, out_targets_, v);
  }
  std::span<const VertexId> in_neighbors(VertexId v) const { return slice(in_offsets_, in_sources_, v); }
  std::span<const VertexId> neighbors(VertexId v) const { return slice(und_offsets_, und_neighbors_, v); }

  std::size_t out_degree(VertexId v) const { return out_neighbors(v).size(); }
  std::size_t in_degree(VertexId v) const { return in_neighbors(v).size(); }
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  bool has_edge(VertexId from, VertexId to) const;

  /// Directed edges in (source, target) order.
  std::vector<Edge> edges() const;

  /// Re-checks the structural invariants; throws InvariantViolation.
  void verify() const;

 private:
  static std::span<const VertexId> slice(const std::vector<std::size_t>& offsets,
                                         const std::vector<VertexId>& items, VertexId v) {
    return std::span<const VertexId>(items).subspan(offsets[v], offsets[v + 1] - offsets[v]);
  }

  std::vector<std::string> names_;
  std::vector<std::size_t> out_offsets_{0}, in_offsets_{0}, und_offsets_{0};
  std::vector<VertexId> out_targets_, in_sources_, und_neighbors_;
  std::size_t unresolved_edges_ = 0;
};

/// One vertex per record; u->v when u's selected dependency list names v.
/// Throws std::invalid_argument on duplicate record names.
DependencyGraph build_graph(std::span<const PackageRecord> records, DepKind dep_kind,
                            UnknownPolicy unknown_policy = UnknownPolicy::drop);

/// Canonical edge list: `source\ttarget` lines sorted lexicographically.
/// Vertices with no incident edge are written as a bare name line so the
/// vertex set survives a round trip.
std::string to_edge_list(const DependencyGraph& g);
DependencyGraph from_edge_list(std::string_view text);

struct ComponentSummary {
  std::size_t component_count = 0;
  std::vector<std::size_t> component_sizes;  // descending
  std::size_t giant_size = 0;
  double giant_fraction = 0.0;

  bool operator==(const ComponentSummary&) const = default;
};

/// Weak components with a label per vertex. Labels are numbered in order
/// of each component's smallest vertex id; the giant is the largest
/// component, ties going to the smaller label.
struct ComponentLabeling {
  std::vector<std::uint32_t> label;
  std::vector<std::size_t> size_by_label;
  std::uint32_t giant_label = 0;
  ComponentSummary summary;

  std::vector<VertexId> giant_vertices() const;
};

ComponentLabeling label_components(const DependencyGraph& g);
ComponentSummary weakly_connected_components(const DependencyGraph& g);

enum class Orientation { directed, undirected };

/// Unweighted distances from `source`; kUnreachable where no path exists.
/// Throws std::out_of_range for an invalid source.
std::vector<std::uint32_t> bfs_distances(const DependencyGraph& g, VertexId source,
                                         Orientation orientation = Orientation::undirected);

/// Result of one undirected BFS sweep.
struct SweepStats {
  std::uint32_t eccentricity = 0;
  std::uint64_t distance_sum = 0;
  std::size_t reached = 0;
  VertexId farthest = 0;
};

/// Reusable buffers for repeated undirected BFS runs on one graph.
class BfsWorkspace {
 public:
  explicit BfsWorkspace(const DependencyGraph& g);

  SweepStats sweep(VertexId source);
  /// Distances from the most recent sweep.
  std::span<const std::uint32_t> distances() const { return dist_; }

 private:
  const DependencyGraph* g_;
  std::vector<std::uint32_t> dist_;
  std::vector<VertexId> queue_;
  std::vector<VertexId> touched_;
};

struct DiameterMode {
  enum class Kind { exact, sampled } kind = Kind::exact;
  std::size_t sweeps = 0;
  std::uint64_t seed = 0;

  static DiameterMode exact() { return {}; }
  static DiameterMode sampled(std::size_t sweeps, std::uint64_t seed) {
    return {Kind::sampled, sweeps, seed};
  }
};

struct DiameterResult {
  std::uint32_t value = 0;
  /// False when `value` is only a lower bound.
  bool exact = true;
  std::size_t bfs_runs = 0;
};

/// Longest finite undirected geodesic inside the giant component.
/// Throws std::domain_error on an empty graph.
DiameterResult diameter_of_giant(const DependencyGraph& g, DiameterMode mode = DiameterMode::exact());

std::string_view to_string(DepKind kind);
std::string_view to_string(UnknownPolicy policy);
std::optional<DepKind> parse_dep_kind(std::string_view text);
std::optional<UnknownPolicy> parse_unknown_policy(std::string_view text);

}  // namespace depnet

#endif  // DEPNET_GRAPH_HPP
