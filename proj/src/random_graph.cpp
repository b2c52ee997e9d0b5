#include "depnet/random_graph.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "depnet/rng.hpp"

namespace depnet {

namespace {

std::uint64_t slot_key(VertexId u, VertexId v, std::size_t n) {
  if (u > v) std::swap(u, v);
  return static_cast<std::uint64_t>(u) * n + v;
}

// Draws `count` distinct unordered pairs by rejection, in draw order.
std::vector<Edge> draw_pairs(std::size_t n, std::size_t count, Rng& rng) {
  std::vector<Edge> pairs;
  pairs.reserve(count);
  std::unordered_set<std::uint64_t> taken;
  taken.reserve(count * 2);
  while (pairs.size() < count) {
    auto u = static_cast<VertexId>(rng.below(n));
    auto v = static_cast<VertexId>(rng.below(n));
    if (u == v) continue;
    if (!taken.insert(slot_key(u, v, n)).second) continue;
    pairs.emplace_back(std::min(u, v), std::max(u, v));
  }
  return pairs;
}

}  // namespace

DependencyGraph er_random_graph(const RandomGraphSpec& spec) {
  const std::size_t n = spec.n;
  if (n < 1) throw std::invalid_argument("G(n, m) needs n >= 1");
  const std::uint64_t slots = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (spec.m > slots)
    throw std::invalid_argument("G(n, m): m = " + std::to_string(spec.m) + " exceeds n(n-1)/2 = " +
                                std::to_string(slots));

  Rng rng(spec.seed);
  std::vector<Edge> chosen;
  if (spec.m <= slots / 2) {
    chosen = draw_pairs(n, spec.m, rng);
  } else {
    // dense: reject the complement instead, then keep every other slot
    const auto excluded = draw_pairs(n, slots - spec.m, rng);
    std::unordered_set<std::uint64_t> skip;
    for (const auto& [u, v] : excluded) skip.insert(slot_key(u, v, n));
    chosen.reserve(spec.m);
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (!skip.contains(slot_key(u, v, n))) chosen.emplace_back(u, v);
  }

  std::vector<Edge> directed;
  directed.reserve(2 * chosen.size());
  for (const auto& [u, v] : chosen) {
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  return DependencyGraph::with_numbered_vertices(n, directed);
}

double analytic_c_random(std::size_t n, double mean_degree) {
  if (n == 0) throw std::invalid_argument("C_random needs n >= 1");
  if (mean_degree < 0.0) throw std::invalid_argument("C_random needs a non-negative mean degree");
  return mean_degree / static_cast<double>(n);
}

double analytic_l_random(std::size_t n, double mean_degree) {
  if (n < 2) throw std::domain_error("L_random needs n >= 2");
  if (!(mean_degree > 1.0)) throw std::domain_error("L_random needs mean degree > 1");
  return std::log(static_cast<double>(n)) / std::log(mean_degree);
}

}  // namespace depnet
