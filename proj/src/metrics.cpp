#include "depnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "depnet/random_graph.hpp"
#include "depnet/rng.hpp"

namespace depnet {

namespace {

std::size_t worker_count(std::size_t jobs) {
  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  return std::clamp<std::size_t>(jobs / 32, 1, hw);
}

// Sum of BFS distance totals over `sources`. Integer accumulation, so the
// split across workers cannot change the result.
std::uint64_t total_distance(const DependencyGraph& g, const std::vector<VertexId>& sources) {
  const std::size_t workers = worker_count(sources.size());
  std::vector<std::uint64_t> partial(workers, 0);
  auto run = [&](std::size_t w) {
    BfsWorkspace bfs(g);
    for (std::size_t i = w; i < sources.size(); i += workers) partial[w] += bfs.sweep(sources[i]).distance_sum;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

}  // namespace

std::uint64_t DegreeHistogram::vertex_count() const {
  std::uint64_t total = 0;
  for (const auto& [degree, count] : counts) total += count;
  return total;
}

DegreeHistogram degree_distribution(const DependencyGraph& g, Direction direction) {
  DegreeHistogram hist;
  hist.direction = direction;
  for (VertexId v = 0; v < g.n(); ++v) {
    std::size_t k = 0;
    switch (direction) {
      case Direction::in: k = g.in_degree(v); break;
      case Direction::out: k = g.out_degree(v); break;
      case Direction::total: k = g.in_degree(v) + g.out_degree(v); break;
    }
    ++hist.counts[static_cast<std::uint32_t>(k)];
  }
  if (g.n() > 0) {
    const double edges = static_cast<double>(g.m()) * (direction == Direction::total ? 2.0 : 1.0);
    hist.mean_degree = edges / static_cast<double>(g.n());
  }
  return hist;
}

ClusteringResult clustering_coefficient(const DependencyGraph& g) {
  const std::size_t n = g.n();
  if (n == 0) throw std::domain_error("clustering coefficient of an empty graph is undefined");

  // Orient every undirected edge from lower to higher (degree, id) rank;
  // each triangle is then found exactly once from its lowest vertex.
  auto before = [&g](VertexId a, VertexId b) {
    const auto da = g.degree(a), db = g.degree(b);
    return da != db ? da < db : a < b;
  };
  std::vector<std::vector<VertexId>> forward(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId w : g.neighbors(u))
      if (before(u, w)) forward[u].push_back(w);

  std::vector<std::uint64_t> triangles(n, 0);
  std::vector<char> mark(n, 0);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : forward[u]) mark[v] = 1;
    for (VertexId v : forward[u]) {
      for (VertexId w : forward[v]) {
        if (mark[w]) {
          ++triangles[u];
          ++triangles[v];
          ++triangles[w];
        }
      }
    }
    for (VertexId v : forward[u]) mark[v] = 0;
  }

  ClusteringResult result;
  result.local.assign(n, 0.0);
  double sum = 0.0;
  for (VertexId v = 0; v < n; ++v) {
    const auto k = static_cast<std::uint64_t>(g.degree(v));
    if (k < 2) {
      ++result.low_degree_vertices;
      continue;
    }
    const std::uint64_t pairs = k * (k - 1) / 2;
    result.local[v] = static_cast<double>(triangles[v]) / static_cast<double>(pairs);
    sum += result.local[v];
  }
  result.global = sum / static_cast<double>(n);
  return result;
}

PathLengthResult characteristic_path_length(const DependencyGraph& g, PathLengthMode mode) {
  std::vector<VertexId> giant = label_components(g).giant_vertices();
  if (giant.size() < 2)
    throw std::domain_error("characteristic path length needs a giant component of at least 2 vertices");

  PathLengthResult result;
  result.giant_size = giant.size();

  std::vector<VertexId> sources;
  if (mode.kind == PathLengthMode::Kind::sampled && mode.sources < giant.size()) {
    if (mode.sources == 0) throw std::invalid_argument("sampled path length needs at least one source");
    // partial Fisher-Yates: the first `mode.sources` slots become the sample
    Rng rng(mode.seed);
    std::vector<VertexId> pool = giant;
    for (std::size_t i = 0; i < mode.sources; ++i) {
      const std::size_t j = i + rng.below(pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    pool.resize(mode.sources);
    std::sort(pool.begin(), pool.end());
    sources = std::move(pool);
    result.exact = false;
  } else {
    sources = giant;
  }
  result.sources_used = sources.size();

  const std::uint64_t total = total_distance(g, sources);
  const double pairs = static_cast<double>(sources.size()) * static_cast<double>(giant.size() - 1);
  result.value = static_cast<double>(total) / pairs;
  return result;
}

double mean_degree(const DependencyGraph& g, DegreeConvention convention) {
  if (g.n() == 0) return 0.0;
  const double edges = convention == DegreeConvention::directed
                           ? static_cast<double>(g.m())
                           : 2.0 * static_cast<double>(g.undirected_edge_count());
  return edges / static_cast<double>(g.n());
}

SmallWorldVerdict small_world_assessment(double c_observed, double l_observed, std::size_t n,
                                         double mean_degree, DegreeConvention convention,
                                         SmallWorldThresholds thresholds) {
  if (n < 2) throw std::domain_error("small-world baseline needs n >= 2");
  if (!(mean_degree > 1.0))
    throw std::domain_error("small-world baseline needs mean degree > 1 (ln k must be positive)");

  SmallWorldVerdict v;
  v.c_observed = c_observed;
  v.l_observed = l_observed;
  v.n = n;
  v.mean_degree = mean_degree;
  v.convention = convention;
  v.thresholds = thresholds;
  v.c_random = analytic_c_random(n, mean_degree);
  v.l_random = analytic_l_random(n, mean_degree);
  v.clustering_ratio = c_observed / v.c_random;
  v.is_small_world = v.clustering_ratio >= thresholds.r_min && l_observed <= thresholds.f_max * v.l_random;
  return v;
}

SummaryStatistics summary_statistics(const DependencyGraph& g) {
  SummaryStatistics s;
  s.n = g.n();
  s.m = g.m();
  s.unresolved_edges = g.unresolved_edges();
  for (VertexId v = 0; v < g.n(); ++v) {
    if (g.in_degree(v) == 0) ++s.zero_in_degree;
    if (g.out_degree(v) > 0) ++s.nonzero_out_degree;
  }
  if (s.n > 0) {
    const auto n = static_cast<double>(s.n);
    s.mean_degree = static_cast<double>(s.m) / n;
    s.zero_in_fraction = static_cast<double>(s.zero_in_degree) / n;
    s.nonzero_out_fraction = static_cast<double>(s.nonzero_out_degree) / n;
  }
  return s;
}

std::vector<RankedPackage> top_k_in_degree(const DependencyGraph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("top-k needs k >= 1");
  std::vector<VertexId> order(g.n());
  std::iota(order.begin(), order.end(), VertexId{0});
  // ids follow name order, so the id breaks ties lexicographically
  auto by_rank = [&g](VertexId a, VertexId b) {
    const auto da = g.in_degree(a), db = g.in_degree(b);
    return da != db ? da > db : a < b;
  };
  const std::size_t take = std::min(k, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take), order.end(), by_rank);

  std::vector<RankedPackage> result;
  result.reserve(take);
  for (std::size_t i = 0; i < take; ++i) result.push_back({g.name(order[i]), g.in_degree(order[i])});
  return result;
}

std::string_view to_string(Direction direction) {
  switch (direction) {
    case Direction::in: return "in";
    case Direction::out: return "out";
    case Direction::total: return "total";
  }
  return "out";
}

std::string_view to_string(DegreeConvention convention) {
  return convention == DegreeConvention::directed ? "directed" : "undirected";
}

std::optional<DegreeConvention> parse_degree_convention(std::string_view text) {
  if (text == "directed") return DegreeConvention::directed;
  if (text == "undirected") return DegreeConvention::undirected;
  return std::nullopt;
}

}  // namespace depnet
