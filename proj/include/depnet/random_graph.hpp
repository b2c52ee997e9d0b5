#ifndef DEPNET_RANDOM_GRAPH_HPP
#define DEPNET_RANDOM_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "depnet/graph.hpp"

namespace depnet {

/// Parameters of an Erdos-Renyi G(n, m) graph.
struct RandomGraphSpec {
  std::size_t n = 1;
  std::size_t m = 0;  // undirected edges
  std::uint64_t seed = 0;
};

/// Identifies the sampling procedure in reports.
inline constexpr std::string_view kRandomGraphAlgorithm = "gnm-rejection/mt19937_64/lemire-rejection";

/// Exactly m distinct undirected edges drawn uniformly without
/// replacement. Each edge appears as a symmetric pair of directed edges,
/// so the result has 2m directed edges. Throws std::invalid_argument when
/// n < 1 or m > n(n-1)/2.
DependencyGraph er_random_graph(const RandomGraphSpec& spec);

/// C_random = k / n. Throws std::invalid_argument for n = 0 or k < 0.
double analytic_c_random(std::size_t n, double mean_degree);

/// L_random = ln n / ln k. Throws std::domain_error unless n >= 2, k > 1.
double analytic_l_random(std::size_t n, double mean_degree);

}  // namespace depnet

#endif  // DEPNET_RANDOM_GRAPH_HPP
