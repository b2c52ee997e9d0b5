#ifndef DEPNET_METRICS_HPP
#define DEPNET_METRICS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "depnet/graph.hpp"

namespace depnet {

enum class Direction { in, out, total };

/// Degree value -> number of vertices with that degree.
struct DegreeHistogram {
  Direction direction = Direction::out;
  std::map<std::uint32_t, std::uint64_t> counts;
  /// m/n for in and out, 2m/n for total.
  double mean_degree = 0.0;

  std::uint64_t vertex_count() const;
};

DegreeHistogram degree_distribution(const DependencyGraph& g, Direction direction);

struct ClusteringResult {
  std::vector<double> local;  // per vertex, in id order
  double global = 0.0;        // unweighted mean of `local`
  /// Vertices with undirected degree < 2; they contribute C_v = 0.
  std::size_t low_degree_vertices = 0;
};

/// Watts-Strogatz local clustering on the undirected projection:
/// C_v = triangles(v) / (k_v choose 2). Throws std::domain_error on an
/// empty graph.
ClusteringResult clustering_coefficient(const DependencyGraph& g);

struct PathLengthMode {
  enum class Kind { exact, sampled } kind = Kind::exact;
  std::size_t sources = 0;
  std::uint64_t seed = 0;

  static PathLengthMode exact() { return {}; }
  static PathLengthMode sampled(std::size_t sources, std::uint64_t seed) {
    return {Kind::sampled, sources, seed};
  }
};

struct PathLengthResult {
  double value = 0.0;
  bool exact = true;
  std::size_t sources_used = 0;
  std::size_t giant_size = 0;
};

/// Mean undirected geodesic over ordered pairs of distinct vertices in the
/// giant component. Sampled mode draws distinct BFS sources uniformly from
/// the giant; asking for at least the giant size makes it exact. Throws
/// std::domain_error when the giant has fewer than 2 vertices.
PathLengthResult characteristic_path_length(const DependencyGraph& g,
                                            PathLengthMode mode = PathLengthMode::exact());

/// How the mean degree fed to the random baselines is taken.
enum class DegreeConvention {
  directed,    ///< m / n, counting each dependency once
  undirected,  ///< 2 |E| / n over the undirected projection
};

double mean_degree(const DependencyGraph& g, DegreeConvention convention);

struct SmallWorldThresholds {
  double r_min = 10.0;  // minimum C / C_random
  double f_max = 2.0;   // maximum L / L_random
};

struct SmallWorldVerdict {
  double c_observed = 0.0;
  double l_observed = 0.0;
  double c_random = 0.0;
  double l_random = 0.0;
  double clustering_ratio = 0.0;
  std::size_t n = 0;
  double mean_degree = 0.0;
  DegreeConvention convention = DegreeConvention::directed;
  SmallWorldThresholds thresholds;
  bool is_small_world = false;
};

/// Compares observed C and L with the random-graph baselines
/// C_random = k/n and L_random = ln n / ln k. Requires n >= 2 and k > 1,
/// otherwise throws std::domain_error.
SmallWorldVerdict small_world_assessment(double c_observed, double l_observed, std::size_t n,
                                         double mean_degree,
                                         DegreeConvention convention = DegreeConvention::directed,
                                         SmallWorldThresholds thresholds = {});

struct SummaryStatistics {
  std::size_t n = 0;
  std::size_t m = 0;
  double mean_degree = 0.0;
  std::size_t zero_in_degree = 0;
  double zero_in_fraction = 0.0;
  std::size_t nonzero_out_degree = 0;
  double nonzero_out_fraction = 0.0;
  std::size_t unresolved_edges = 0;
};

SummaryStatistics summary_statistics(const DependencyGraph& g);

struct RankedPackage {
  std::string name;
  std::size_t in_degree = 0;

  bool operator==(const RankedPackage&) const = default;
};

/// The k most depended-upon vertices, descending, ties by name.
/// Throws std::invalid_argument when k == 0.
std::vector<RankedPackage> top_k_in_degree(const DependencyGraph& g, std::size_t k);

std::string_view to_string(Direction direction);
std::string_view to_string(DegreeConvention convention);
std::optional<DegreeConvention> parse_degree_convention(std::string_view text);

}  // namespace depnet

#endif  // DEPNET_METRICS_HPP
