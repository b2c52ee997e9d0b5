#include "doctest.h"

#include <array>
#include <cmath>

#include "depnet/metrics.hpp"
#include "depnet/random_graph.hpp"

using namespace depnet;

TEST_CASE("G(10, 45) is the complete graph") {
  auto g = er_random_graph({10, 45, 3});
  CHECK(g.n() == 10);
  CHECK(g.undirected_edge_count() == 45);
  CHECK(g.m() == 90);
  for (VertexId u = 0; u < 10; ++u)
    for (VertexId v = 0; v < 10; ++v)
      if (u != v) CHECK(g.has_edge(u, v));
}

TEST_CASE("G(7, 0) has only isolated vertices") {
  auto g = er_random_graph({7, 0, 1});
  CHECK(g.n() == 7);
  CHECK(g.m() == 0);
  CHECK(weakly_connected_components(g).component_count == 7);
}

TEST_CASE("out-of-range specs are rejected") {
  CHECK_THROWS_AS(er_random_graph({5, 11, 1}), std::invalid_argument);
  CHECK_THROWS_AS(er_random_graph({0, 0, 1}), std::invalid_argument);
  CHECK_NOTHROW(er_random_graph({5, 10, 1}));
  CHECK_NOTHROW(er_random_graph({1, 0, 1}));
}

TEST_CASE("edge counts are exact, sparse and dense") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (std::size_t m : {0ul, 1ul, 50ul, 600ul, 1100ul, 1225ul}) {
      auto g = er_random_graph({50, m, seed});
      CHECK(g.n() == 50);
      CHECK(g.undirected_edge_count() == m);
      CHECK(g.m() == 2 * m);
    }
  }
}

TEST_CASE("same seed, same graph; different seeds differ") {
  CHECK(er_random_graph({200, 400, 9}).edges() == er_random_graph({200, 400, 9}).edges());
  int differing = 0;
  for (std::uint64_t s = 1; s <= 100; ++s)
    if (er_random_graph({200, 400, s}).edges() != er_random_graph({200, 400, s + 1000}).edges()) ++differing;
  CHECK(differing == 100);
}

TEST_CASE("edge slots of G(6, 5) are uniform") {
  std::array<int, 36> hits{};
  const int draws = 10000;
  for (int d = 0; d < draws; ++d) {
    auto g = er_random_graph({6, 5, static_cast<std::uint64_t>(d) + 1});
    for (auto [u, v] : g.edges())
      if (u < v) ++hits[u * 6 + v];
  }
  for (VertexId u = 0; u < 6; ++u)
    for (VertexId v = u + 1; v < 6; ++v) {
      const double freq = hits[u * 6 + v] / static_cast<double>(draws);
      CAPTURE(u);
      CAPTURE(v);
      CHECK(std::abs(freq - 5.0 / 15.0) <= 0.02);
    }
}

TEST_CASE("analytic baselines") {
  CHECK(analytic_c_random(1000, 4.0) == doctest::Approx(0.004));
  CHECK(analytic_c_random(10, 0.0) == 0.0);
  CHECK(std::abs(analytic_c_random(19504, 3.79) - 1.94e-4) <= 0.005e-4);
  CHECK_THROWS_AS(analytic_c_random(0, 1.0), std::invalid_argument);

  CHECK(analytic_l_random(64, 4.0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(std::abs(analytic_l_random(19504, 3.79) - 7.41) <= 0.01);
  CHECK_THROWS_AS(analytic_l_random(100, 1.0), std::domain_error);
  CHECK_THROWS_AS(analytic_l_random(1, 4.0), std::domain_error);
}

TEST_CASE("measured clustering of G(1000, 2000) tracks k/n") {
  const int seeds = 30;
  double sum = 0.0, sum_sq = 0.0;
  for (int s = 1; s <= seeds; ++s) {
    const double c = clustering_coefficient(er_random_graph({1000, 2000, static_cast<std::uint64_t>(s)})).global;
    sum += c;
    sum_sq += c * c;
  }
  const double mean = sum / seeds;
  const double sd = std::sqrt((sum_sq - seeds * mean * mean) / (seeds - 1));
  CHECK(std::abs(mean - 0.004) <= 3.0 * sd / std::sqrt(static_cast<double>(seeds)));
}
