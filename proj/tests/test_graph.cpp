#include "doctest.h"

#include <algorithm>

#include "json.hpp"

#include "depnet/graph.hpp"
#include "depnet/ingest.hpp"
#include "depnet/random_graph.hpp"
#include "oracles.hpp"

using namespace depnet;

namespace {

DependencyGraph from_oracle(std::size_t n, const oracle::EdgeList& edges) {
  std::vector<Edge> converted(edges.begin(), edges.end());
  return DependencyGraph::with_numbered_vertices(n, converted);
}

PackageRecord rec(std::string name, std::vector<std::string> run) {
  return PackageRecord{std::move(name), {}, std::move(run), SourceFormat::debian};
}

oracle::EdgeList path_edges(std::uint32_t n) {
  oracle::EdgeList e;
  for (std::uint32_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

}  // namespace

TEST_CASE("build: one edge") {
  std::vector<PackageRecord> records{rec("a", {"b"}), rec("b", {})};
  auto g = build_graph(records, DepKind::run);
  CHECK(g.n() == 2);
  CHECK(g.m() == 1);
  CHECK(g.has_edge(*g.find("a"), *g.find("b")));
  CHECK_FALSE(g.has_edge(*g.find("b"), *g.find("a")));
  g.verify();
}

TEST_CASE("build: self loops and repeats collapse") {
  std::vector<PackageRecord> records{rec("a", {"a", "b", "b"}), rec("b", {})};
  auto g = build_graph(records, DepKind::run);
  CHECK(g.n() == 2);
  CHECK(g.m() == 1);
}

TEST_CASE("build: unknown targets dropped or stubbed") {
  std::vector<PackageRecord> records{rec("a", {"b", "ghost"}), rec("b", {"phantom"})};
  auto dropped = build_graph(records, DepKind::run, UnknownPolicy::drop);
  CHECK(dropped.n() == 2);
  CHECK(dropped.m() == 1);
  CHECK(dropped.unresolved_edges() == 2);

  auto stubbed = build_graph(records, DepKind::run, UnknownPolicy::stub);
  CHECK(stubbed.n() == 4);
  CHECK(stubbed.m() == 3);
  CHECK(stubbed.unresolved_edges() == 2);
  REQUIRE(stubbed.find("ghost"));
  CHECK(stubbed.out_degree(*stubbed.find("ghost")) == 0);
}

TEST_CASE("build: duplicate record names are rejected") {
  std::vector<PackageRecord> records{rec("a", {}), rec("a", {})};
  CHECK_THROWS_AS(build_graph(records, DepKind::run), std::invalid_argument);
}

TEST_CASE("build: dep kind selects the list") {
  std::vector<PackageRecord> records{PackageRecord{"x", {"y"}, {}, SourceFormat::bsd_index},
                                     PackageRecord{"y", {}, {"x"}, SourceFormat::bsd_index}};
  auto build = build_graph(records, DepKind::build);
  auto run = build_graph(records, DepKind::run);
  CHECK(build.has_edge(*build.find("x"), *build.find("y")));
  CHECK(run.has_edge(*run.find("y"), *run.find("x")));
}

TEST_CASE("build: Debian fixture matches the manifest for every alt policy") {
  const auto manifest = nlohmann::json::parse(oracle::read_text(DEPNET_FIXTURES "/debian/manifest.json"));
  const std::string text = oracle::read_text(DEPNET_FIXTURES "/debian/Packages");
  for (auto [policy, key] : {std::pair{AltPolicy::first, "first"}, std::pair{AltPolicy::all, "all"},
                             std::pair{AltPolicy::none, "none"}}) {
    auto parsed = parse_debian_packages(text, policy);
    auto g = build_graph(parsed.records, DepKind::run);
    CAPTURE(key);
    CHECK(g.n() == manifest["n"].get<std::size_t>());
    CHECK(g.m() == manifest["alt_policy"][key]["m"].get<std::size_t>());
    CHECK(g.unresolved_edges() == manifest["alt_policy"][key]["unresolved_edges"].get<std::size_t>());
  }
  auto stub = build_graph(parse_debian_packages(text).records, DepKind::run, UnknownPolicy::stub);
  CHECK(stub.n() == manifest["stub_first"]["n"].get<std::size_t>());
  CHECK(stub.m() == manifest["stub_first"]["m"].get<std::size_t>());
}

TEST_CASE("build: BSD fixture matches the manifest for both dependency kinds") {
  const auto manifest = nlohmann::json::parse(oracle::read_text(DEPNET_FIXTURES "/bsd/manifest.json"));
  auto parsed = parse_bsd_index(oracle::read_text(DEPNET_FIXTURES "/bsd/INDEX"));
  for (auto [kind, key] : {std::pair{DepKind::build, "build"}, std::pair{DepKind::run, "run"}}) {
    auto g = build_graph(parsed.records, kind);
    CAPTURE(key);
    CHECK(g.n() == manifest["n"].get<std::size_t>());
    CHECK(g.m() == manifest["dep_kind"][key]["m"].get<std::size_t>());
    CHECK(g.unresolved_edges() == manifest["dep_kind"][key]["unresolved_edges"].get<std::size_t>());
  }
}

TEST_CASE("components: disjoint pairs") {
  auto g = from_oracle(4, {{0, 1}, {2, 3}});
  auto s = weakly_connected_components(g);
  CHECK(s.component_count == 2);
  CHECK(s.component_sizes == std::vector<std::size_t>{2, 2});
  CHECK(s.giant_size == 2);
  CHECK(s.giant_fraction == doctest::Approx(0.5));
  // tie goes to the component holding vertex 0
  CHECK(label_components(g).giant_vertices() == std::vector<VertexId>{0, 1});
}

TEST_CASE("components: directed cycle is one component") {
  auto s = weakly_connected_components(from_oracle(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(s.component_count == 1);
  CHECK(s.giant_size == 3);
  CHECK(s.giant_fraction == doctest::Approx(1.0));
}

TEST_CASE("components: agree with union-find on random digraphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 20 + seed * 3;
    auto edges = oracle::random_digraph(n, 1.2 / static_cast<double>(n), seed);
    auto g = from_oracle(n, edges);
    auto s = weakly_connected_components(g);
    auto expected = oracle::component_sizes(n, edges);
    CHECK(s.component_sizes == expected);
    CHECK(s.component_count == expected.size());
    std::size_t total = 0;
    for (auto size : s.component_sizes) total += size;
    CHECK(total == n);

    auto giant = label_components(g).giant_vertices();
    auto members = oracle::giant_members(n, edges);
    CHECK(std::equal(giant.begin(), giant.end(), members.begin(), members.end()));
  }
}

TEST_CASE("bfs: path and isolated vertex") {
  auto g = from_oracle(4, {{0, 1}, {1, 2}});
  auto d = bfs_distances(g, 0);
  CHECK(d == std::vector<std::uint32_t>{0, 1, 2, kUnreachable});
  auto directed_back = bfs_distances(g, 2, Orientation::directed);
  CHECK(directed_back == std::vector<std::uint32_t>{kUnreachable, kUnreachable, 0, kUnreachable});
  CHECK_THROWS_AS(bfs_distances(g, 4), std::out_of_range);
}

TEST_CASE("bfs: matches Floyd-Warshall on random graphs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::size_t n = 10 + seed;
    auto edges = oracle::random_digraph(n, 0.08, seed * 7);
    auto g = from_oracle(n, edges);
    auto und = oracle::floyd_warshall(n, edges);
    auto dir = oracle::floyd_warshall_directed(n, edges);
    for (VertexId s = 0; s < n; ++s) {
      auto du = bfs_distances(g, s, Orientation::undirected);
      auto dd = bfs_distances(g, s, Orientation::directed);
      for (std::size_t t = 0; t < n; ++t) {
        CHECK(du[t] == (und[s][t] >= oracle::kInf ? kUnreachable : static_cast<std::uint32_t>(und[s][t])));
        CHECK(dd[t] == (dir[s][t] >= oracle::kInf ? kUnreachable : static_cast<std::uint32_t>(dir[s][t])));
      }
    }
  }
}

TEST_CASE("property: undirected distances satisfy the triangle inequality") {
  auto edges = oracle::random_digraph(40, 0.05, 99);
  auto g = from_oracle(40, edges);
  std::vector<std::vector<std::uint32_t>> d;
  for (VertexId s = 0; s < 40; ++s) d.push_back(bfs_distances(g, s));
  for (std::size_t a = 0; a < 40; ++a)
    for (std::size_t b = 0; b < 40; ++b) {
      CHECK(d[a][b] == d[b][a]);
      for (std::size_t c = 0; c < 40; ++c)
        if (d[a][b] != kUnreachable && d[b][c] != kUnreachable) CHECK(d[a][c] <= d[a][b] + d[b][c]);
    }
}

TEST_CASE("diameter: path, complete graph, random graphs") {
  auto path = diameter_of_giant(from_oracle(5, path_edges(5)));
  CHECK(path.value == 4);
  CHECK(path.exact);

  oracle::EdgeList k6;
  for (std::uint32_t i = 0; i < 6; ++i)
    for (std::uint32_t j = i + 1; j < 6; ++j) k6.emplace_back(i, j);
  CHECK(diameter_of_giant(from_oracle(6, k6)).value == 1);

  CHECK(diameter_of_giant(from_oracle(1, {})).value == 0);
  CHECK_THROWS_AS(diameter_of_giant(DependencyGraph{}), std::domain_error);

  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 15 + seed;
    auto edges = oracle::random_digraph(n, 2.0 / static_cast<double>(n), seed * 13);
    auto g = from_oracle(n, edges);
    const auto expected = static_cast<std::uint32_t>(oracle::giant_diameter(n, edges));
    auto exact = diameter_of_giant(g);
    CHECK(exact.value == expected);
    CHECK(exact.exact);
    auto sampled = diameter_of_giant(g, DiameterMode::sampled(4, seed));
    CHECK_FALSE(sampled.exact);
    CHECK(sampled.value <= expected);
  }
}

TEST_CASE("diameter: giant only, ignoring smaller components") {
  // K5 beside a 4-vertex path: the path's diameter 3 must not leak in
  oracle::EdgeList edges{{5, 6}, {6, 7}, {7, 8}};
  for (std::uint32_t i = 0; i < 5; ++i)
    for (std::uint32_t j = i + 1; j < 5; ++j) edges.emplace_back(i, j);
  CHECK(diameter_of_giant(from_oracle(9, edges)).value == 1);
}

TEST_CASE("edge list round trip") {
  const std::string text = oracle::read_text(DEPNET_FIXTURES "/debian/Packages");
  auto g = build_graph(parse_debian_packages(text).records, DepKind::run);
  const std::string once = to_edge_list(g);
  auto back = from_edge_list(once);
  CHECK(back.n() == g.n());
  CHECK(back.m() == g.m());
  CHECK(back.names() == g.names());
  CHECK(back.edges() == g.edges());
  CHECK(to_edge_list(back) == once);

  auto isolated = from_oracle(3, {{0, 1}});
  CHECK(from_edge_list(to_edge_list(isolated)).n() == 3);
}

TEST_CASE("property: undirected projection is symmetric and CSR is sorted") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = er_random_graph({60, 150, seed});
    g.verify();
    for (VertexId v = 0; v < g.n(); ++v) {
      auto nb = g.neighbors(v);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (VertexId w : nb) {
        auto back = g.neighbors(w);
        CHECK(std::binary_search(back.begin(), back.end(), v));
      }
    }
  }
}

TEST_CASE("enum keywords") {
  CHECK(parse_dep_kind("build") == DepKind::build);
  CHECK(parse_dep_kind("run") == DepKind::run);
  CHECK_FALSE(parse_dep_kind("test"));
  CHECK(to_string(UnknownPolicy::stub) == "stub");
  CHECK(parse_unknown_policy("drop") == UnknownPolicy::drop);
}
