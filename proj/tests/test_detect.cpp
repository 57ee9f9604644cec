#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "ordmatch/construct.hpp"
#include "ordmatch/detect.hpp"

using namespace ordmatch;

namespace {

const std::vector<PatternKind> kAllMatchingKinds = {
    PatternKind::Sep,     PatternKind::Nest,           PatternKind::Cross,
    PatternKind::NonSep,  PatternKind::NonNest,        PatternKind::NonCross,
    PatternKind::StronglyNonNest, PatternKind::CrossIslandPair, PatternKind::NestIslandPair};

OrderedGraph random_graph(std::mt19937& rng, int n, int density_pct) {
  std::vector<Edge> es;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (static_cast<int>(rng() % 100) < density_pct) es.push_back({u, v});
  return OrderedGraph(n, es);
}

}  // namespace

TEST_CASE("complete graph witnesses match the canonical shapes") {
  OrderedGraph k6 = OrderedGraph::complete(6);
  auto cross = max_pattern_matching(k6, PatternKind::Cross);
  CHECK(cross.size == 3);
  CHECK(cross.witness.edges == std::vector<Edge>{{1, 4}, {2, 5}, {3, 6}});
  auto nest = max_pattern_matching(k6, PatternKind::Nest);
  CHECK(nest.size == 3);
  CHECK(nest.witness.edges == std::vector<Edge>{{1, 6}, {2, 5}, {3, 4}});
  auto sep = max_pattern_matching(k6, PatternKind::Sep);
  CHECK(sep.size == 3);
  CHECK(sep.witness.edges == std::vector<Edge>{{1, 2}, {3, 4}, {5, 6}});
}

TEST_CASE("empty graph has no matching of any kind") {
  OrderedGraph g = OrderedGraph::empty(5);
  for (PatternKind k : kAllMatchingKinds) CHECK(max_pattern_matching(g, k).size == 0);
}

TEST_CASE("non-separated extremal graph stays below its threshold") {
  OrderedGraph g = extremal_construction(ExtremalFamily::NonSeparated, 14, 3);
  CHECK(max_pattern_matching(g, PatternKind::NonSep).size == 2);
}

TEST_CASE("cap clamps the result and still returns a valid witness") {
  OrderedGraph k8 = OrderedGraph::complete(8);
  auto capped = max_pattern_matching(k8, PatternKind::Cross, 2);
  CHECK(capped.size == 2);
  CHECK(capped.witness.edges.size() == 2);
  CHECK(matching_satisfies(PatternKind::Cross, capped.witness.edges));
}

TEST_CASE("alternating path detection") {
  CHECK(longest_alternating_path(OrderedGraph::complete(6)).length == 6);
  CHECK(longest_alternating_path(OrderedGraph(4, {{2, 3}})).length == 2);
  CHECK(longest_alternating_path(OrderedGraph::empty(3)).length == 1);
  OrderedGraph h = extremal_construction(ExtremalFamily::NestedAlt, 10, 2);
  auto res = longest_alternating_path(h);
  CHECK(res.length == 3);
  CHECK(path_is_alternating(h, res.witness.vertices));
}

TEST_CASE("incident nesting rule is side-based") {
  CHECK(edges_nested_for_path({1, 3}, {2, 3}));   // others 1,2 below 3
  CHECK(edges_nested_for_path({1, 2}, {1, 3}));   // others 2,3 above 1
  CHECK(!edges_nested_for_path({1, 2}, {2, 3}));  // opposite sides of 2
  CHECK(edges_nested_for_path({2, 6}, {3, 5}));
  CHECK(!edges_nested_for_path({1, 3}, {2, 4}));
}

TEST_CASE("split pattern examples") {
  CHECK(max_split_pattern(OrderedGraph::complete(8), IslandPattern::Cross, IslandGroups::Any).size == 4);
  CHECK(max_split_pattern(OrderedGraph::complete(6), IslandPattern::Nest, IslandGroups::Two).size == 3);
  CHECK(max_split_pattern(OrderedGraph(3, {{1, 2}}), IslandPattern::Cross, IslandGroups::Two).size == 1);
  OrderedGraph ms = cross_island_free_construction(30, 5);
  CHECK(max_split_pattern(ms, IslandPattern::Cross, IslandGroups::Two, 5).size < 5);
}

TEST_CASE("split witnesses carry island ranges that verify") {
  OrderedGraph k8 = OrderedGraph::complete(8);
  auto res = max_split_pattern(k8, IslandPattern::Cross, IslandGroups::Any);
  CHECK(matching_satisfies(PatternKind::StronglyNonNest, res.witness.edges));
  CHECK(!res.witness.islands.empty());
}

TEST_CASE("brute force oracle basics") {
  OrderedGraph k4 = OrderedGraph::complete(4);
  CHECK(brute_force_max(k4, {PatternKind::Cross, 1}) == 2);
  CHECK(brute_force_max(k4, {PatternKind::Sep, 1}) == 2);
  OrderedGraph k6 = OrderedGraph::complete(6);
  for (PatternKind k : kAllMatchingKinds)
    CHECK(brute_force_max(k6, {k, 1}) == max_pattern_matching(k6, k).size);
  CHECK_THROWS_AS(brute_force_max(OrderedGraph::complete(8), {PatternKind::NonNest, 1}, 10), Error);
}

TEST_CASE("oracle equivalence, exhaustive small graphs") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Edge> all;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) all.push_back({u, v});
    const int m = static_cast<int>(all.size());
    for (long long mask = 0; mask < (1LL << m); ++mask) {
      std::vector<Edge> es;
      for (int i = 0; i < m; ++i)
        if (mask >> i & 1) es.push_back(all[i]);
      OrderedGraph g(n, es);
      for (PatternKind k : kAllMatchingKinds)
        CHECK(max_pattern_matching(g, k).size == brute_force_max(g, {k, 1}));
      CHECK(longest_alternating_path(g).length == brute_force_max(g, {PatternKind::AltPath, 1}));
    }
  }
}

TEST_CASE("oracle equivalence, random graphs") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 120; ++trial) {
    OrderedGraph g = random_graph(rng, 4 + rng() % 8, 40);
    for (PatternKind k : kAllMatchingKinds)
      CHECK(max_pattern_matching(g, k).size == brute_force_max(g, {k, 1}, 2'000'000'000ULL));
    CHECK(longest_alternating_path(g).length ==
          brute_force_max(g, {PatternKind::AltPath, 1}, 2'000'000'000ULL));
  }
}

TEST_CASE("reversal invariance and edge monotonicity of detectors") {
  std::mt19937 rng(999);
  for (int trial = 0; trial < 60; ++trial) {
    OrderedGraph g = random_graph(rng, 4 + rng() % 7, 45);
    OrderedGraph r = reverse_graph(g);
    for (PatternKind k : kAllMatchingKinds)
      CHECK(max_pattern_matching(g, k).size == max_pattern_matching(r, k).size);
    CHECK(longest_alternating_path(g).length == longest_alternating_path(r).length);

    // adding one edge never decreases any detector value
    std::vector<Edge> missing;
    for (int u = 1; u <= g.n(); ++u)
      for (int v = u + 1; v <= g.n(); ++v)
        if (!g.has_edge(u, v)) missing.push_back({u, v});
    if (!missing.empty()) {
      OrderedGraph bigger = g.with_edge(missing[rng() % missing.size()]);
      for (PatternKind k : kAllMatchingKinds)
        CHECK(max_pattern_matching(bigger, k).size >= max_pattern_matching(g, k).size);
      CHECK(longest_alternating_path(bigger).length >= longest_alternating_path(g).length);
    }
  }
}

TEST_CASE("witness structure: Helly gap for NonSep, increasing rights for NonNest") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 80; ++trial) {
    OrderedGraph g = random_graph(rng, 5 + rng() % 6, 50);
    auto ns = max_pattern_matching(g, PatternKind::NonSep);
    if (ns.size >= 1) {
      bool some_gap = false;
      for (int gap = 1; gap < g.n() && !some_gap; ++gap) {
        bool all = true;
        for (const Edge& e : ns.witness.edges) all = all && spans_gap(e, gap);
        some_gap = all;
      }
      CHECK(some_gap);
    }
    auto nn = max_pattern_matching(g, PatternKind::NonNest);
    for (size_t i = 0; i + 1 < nn.witness.edges.size(); ++i) {
      CHECK(nn.witness.edges[i].u < nn.witness.edges[i + 1].u);
      CHECK(nn.witness.edges[i].v < nn.witness.edges[i + 1].v);
    }
  }
}

TEST_CASE("alternating peel follows the parity rule") {
  auto seq = alternating_peel(OrderedGraph::complete(4), 2);
  REQUIRE(seq.size() == 3);
  CHECK(seq[1].edges() == std::vector<Edge>{{2, 3}, {2, 4}, {3, 4}});
  CHECK(seq[2].edges() == std::vector<Edge>{{2, 3}});
  // e(G_1) >= e(G_0) - (n - 0 - 1)
  CHECK(seq[1].edge_count() >= seq[0].edge_count() - (4 - 0 - 1));

  auto empty = alternating_peel(OrderedGraph::empty(5), 3);
  for (const auto& g : empty) CHECK(g.edge_count() == 0);
}

TEST_CASE("peel edge-count chain and soundness on random graphs") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    OrderedGraph g = random_graph(rng, 4 + rng() % 8, 50);
    const int n = g.n();
    for (int k = 2; k <= 3; ++k) {
      auto seq = alternating_peel(g, 2 * k - 2);
      for (size_t i = 0; i + 1 < seq.size(); ++i)
        CHECK(seq[i + 1].edge_count() >=
              seq[i].edge_count() - (n - static_cast<int>(i) - 1));
      if (longest_alternating_path(g).length < 2 * k) CHECK(seq.back().edge_count() == 0);
    }
  }
}

TEST_CASE("pattern kind names round trip") {
  for (PatternKind k : kAllMatchingKinds) CHECK(parse_pattern_kind(pattern_kind_name(k)) == k);
  CHECK(parse_pattern_kind("altpath") == PatternKind::AltPath);
  CHECK(!parse_pattern_kind("bogus").has_value());
}
