#include <optional>

#include "bdvd/matching.hpp"
#include "bdvd/star_packing.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bdvd;

namespace {

template <typename F>
std::optional<ErrorCode> error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

Graph k13() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

}  // namespace

TEST_CASE("build_bipartite") {
  Graph star = k13();
  BipartiteGraph h = build_bipartite(star, {0}, {1, 2, 3});
  CHECK(h.cross_edge_count() == 3);
  CHECK(h.adj_left[0] == std::vector<int>{0, 1, 2});

  Graph path(3, {{0, 1}, {1, 2}});
  BipartiteGraph hp = build_bipartite(path, {0, 1}, {2});
  CHECK(hp.cross_edge_count() == 1);  // edge 0-1 is internal to X, dropped
  CHECK(hp.adj_left[0].empty());
  CHECK(hp.adj_left[1] == std::vector<int>{0});

  BipartiteGraph he = build_bipartite(path, {}, {0, 1, 2});
  CHECK(he.cross_edge_count() == 0);
  CHECK(he.left_count() == 0);

  CHECK(error_code_of([&] { build_bipartite(path, {0, 1}, {1, 2}); }) ==
        ErrorCode::OverlappingSides);
}

TEST_CASE("build_auxiliary") {
  Graph pair(2, {{0, 1}});
  BipartiteGraph h = build_bipartite(pair, {0}, {1});
  AuxiliaryGraph a = build_auxiliary(h, 1);
  CHECK(a.copies == 2);
  CHECK(a.left_count() == 2);
  CHECK(a.adj[0] == std::vector<int>{0});
  CHECK(a.adj[1] == std::vector<int>{0});
  CHECK(a.copy_index(1) == 1);
  CHECK(a.base_vertex(1) == 0);

  BipartiteGraph empty_h = build_bipartite(Graph(0, {}), {}, {});
  AuxiliaryGraph ae = build_auxiliary(empty_h, 3);
  CHECK(ae.copies == 4);
  CHECK(ae.left_count() == 0);

  Graph star = k13();
  BipartiteGraph hs = build_bipartite(star, {0}, {1, 2, 3});
  AuxiliaryGraph a0 = build_auxiliary(hs, 0);
  CHECK(a0.left_count() == hs.left_count());
  CHECK(a0.adj == hs.adj_left);
}

TEST_CASE("maximum_matching basics") {
  Graph complete22(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  BipartiteGraph h22 = build_bipartite(complete22, {0, 1}, {2, 3});
  CHECK(maximum_matching(h22).size() == 2);

  Graph fan(3, {{0, 2}, {1, 2}});
  BipartiteGraph hf = build_bipartite(fan, {0, 1}, {2});
  CHECK(maximum_matching(hf).size() == 1);

  Graph iso(3, {});
  BipartiteGraph hi = build_bipartite(iso, {0, 1}, {2});
  CHECK(maximum_matching(hi).size() == 0);
}

TEST_CASE("maximum_matching is deterministic") {
  testsup::Rng rng(11);
  for (int round = 0; round < 50; ++round) {
    int n = rng.int_in(2, 10);
    std::int64_t maxm = static_cast<std::int64_t>(n) * (n - 1) / 2;
    Graph g = testsup::random_graph(rng, n, rng.below(maxm + 1));
    VertexSet x, y;
    for (int v = 0; v < n; ++v) (rng.below(2) ? x : y).push_back(v);
    BipartiteGraph h = build_bipartite(g, x, y);
    Matching first = maximum_matching(h);
    Matching second = maximum_matching(h);
    CHECK(first.pairs == second.pairs);
  }
}

TEST_CASE("maximum_matching agrees with brute force") {
  testsup::Rng rng(12);
  for (int round = 0; round < 300; ++round) {
    int nl = rng.int_in(0, 5);
    int nr = rng.int_in(0, 5);
    std::vector<std::vector<int>> adj(nl);
    for (int x = 0; x < nl; ++x)
      for (int y = 0; y < nr; ++y)
        if (rng.below(2)) adj[x].push_back(y);

    BipartiteGraph h;
    for (int x = 0; x < nl; ++x) h.left.push_back(x);
    for (int y = 0; y < nr; ++y) h.right.push_back(nl + y);
    h.adj_left = adj;
    h.adj_right.resize(nr);
    for (int x = 0; x < nl; ++x)
      for (int y : adj[x]) h.adj_right[y].push_back(x);

    CHECK(maximum_matching(h).size() ==
          testsup::brute_max_matching(adj, nl, nr));
  }
}

TEST_CASE("project_matching") {
  SUBCASE("two copies collapse onto one center") {
    Graph g(3, {{0, 1}, {0, 2}});
    BipartiteGraph h = build_bipartite(g, {0}, {1, 2});
    Matching m_prime;
    m_prime.pairs = {{0, 0}, {1, 1}};  // copy 0 and copy 1 of x-position 0
    MarkedEdgeSet m = project_matching(h, m_prime, 1);
    CHECK(m.size() == 2);
    CHECK(m.marked == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}});
    CHECK(m.leaves_of[0] == std::vector<int>{0, 1});
  }
  SUBCASE("empty matching") {
    Graph g(2, {{0, 1}});
    BipartiteGraph h = build_bipartite(g, {0}, {1});
    MarkedEdgeSet m = project_matching(h, Matching{}, 2);
    CHECK(m.size() == 0);
    CHECK(m.mate_of_right == std::vector<int>{-1});
  }
  SUBCASE("two distinct 1-stars at d=0") {
    Graph g(4, {{0, 2}, {1, 3}});
    BipartiteGraph h = build_bipartite(g, {0, 1}, {2, 3});
    Matching m_prime;
    m_prime.pairs = {{0, 0}, {1, 1}};
    MarkedEdgeSet m = project_matching(h, m_prime, 0);
    CHECK(m.marked == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
    CHECK(m.marked_degree(0) == 1);
    CHECK(m.marked_degree(1) == 1);
  }
  SUBCASE("rejects non-matchings") {
    Graph g(3, {{0, 1}, {0, 2}});
    BipartiteGraph h = build_bipartite(g, {0}, {1, 2});
    Matching not_edge;
    not_edge.pairs = {{0, 5}};
    CHECK(error_code_of([&] { project_matching(h, not_edge, 1); }) ==
          ErrorCode::NotAMatchingOfAuxiliary);
    Matching reused_copy;
    reused_copy.pairs = {{0, 0}, {0, 1}};
    CHECK(error_code_of([&] { project_matching(h, reused_copy, 1); }) ==
          ErrorCode::NotAMatchingOfAuxiliary);
    Matching reused_right;
    reused_right.pairs = {{0, 0}, {1, 0}};
    CHECK(error_code_of([&] { project_matching(h, reused_right, 1); }) ==
          ErrorCode::NotAMatchingOfAuxiliary);
  }
}

TEST_CASE("projection keeps the matching cardinality") {
  testsup::Rng rng(13);
  for (int round = 0; round < 100; ++round) {
    int n = rng.int_in(2, 10);
    std::int64_t maxm = static_cast<std::int64_t>(n) * (n - 1) / 2;
    Graph g = testsup::random_graph(rng, n, rng.below(maxm + 1));
    VertexSet x, y;
    for (int v = 0; v < n; ++v) (rng.below(2) ? x : y).push_back(v);
    int d = rng.int_in(0, 2);
    BipartiteGraph h = build_bipartite(g, x, y);
    Matching m_prime = maximum_matching(build_auxiliary(h, d));
    MarkedEdgeSet m = project_matching(h, m_prime, d);
    CHECK(m.size() == m_prime.size());
    for (int xp = 0; xp < h.left_count(); ++xp)
      CHECK(m.marked_degree(xp) <= d + 1);
  }
}

TEST_CASE("auxiliary matching equals best star packing edge count") {
  testsup::Rng rng(14);
  for (int round = 0; round < 200; ++round) {
    int nl = rng.int_in(0, 4);
    int nr = rng.int_in(0, 4);
    int d = rng.int_in(0, 2);
    std::vector<std::vector<int>> adj(nl);
    for (int x = 0; x < nl; ++x)
      for (int y = 0; y < nr; ++y)
        if (rng.below(2)) adj[x].push_back(y);

    BipartiteGraph h;
    for (int x = 0; x < nl; ++x) h.left.push_back(x);
    for (int y = 0; y < nr; ++y) h.right.push_back(nl + y);
    h.adj_left = adj;
    h.adj_right.resize(nr);
    for (int x = 0; x < nl; ++x)
      for (int y : adj[x]) h.adj_right[y].push_back(x);

    int matched = maximum_matching(build_auxiliary(h, d)).size();
    int packed = testsup::brute_max_star_packing_edges(adj, nl, nr, d + 1);
    CHECK(matched == packed);
  }
}

TEST_CASE("alternating_reachable") {
  SUBCASE("no untagged vertices") {
    Graph g(2, {{0, 1}});
    BipartiteGraph h = build_bipartite(g, {0}, {1});
    MarkedEdgeSet m = project_matching(h, Matching{}, 0);
    CHECK(alternating_reachable(h, m, {}) == VertexSet{});
  }

  SUBCASE("single unmarked hop") {
    Graph star = k13();
    BipartiteGraph h = build_bipartite(star, {0}, {1, 2, 3});
    Matching m_prime;
    m_prime.pairs = {{0, 0}, {1, 1}};  // star (0, {1, 2}) with d = 1
    MarkedEdgeSet m = project_matching(h, m_prime, 1);
    CHECK(alternating_reachable(h, m, {3}) == VertexSet{0});
  }

  SUBCASE("alternating chain reaches both centers") {
    // v1=0, v2=1, u1=2, u4=3, u6=4; marked: (v1,u4), (v2,u6); u1 untagged.
    Graph g(5, {{0, 2}, {0, 3}, {1, 3}, {1, 4}});
    BipartiteGraph h = build_bipartite(g, {0, 1}, {2, 3, 4});
    Matching m_prime;
    m_prime.pairs = {{0, 1}, {1, 2}};
    MarkedEdgeSet m = project_matching(h, m_prime, 0);
    VertexSet reached = alternating_reachable(h, m, {2});
    CHECK(set_contains(reached, 0));
    CHECK(set_contains(reached, 1));
  }

  SUBCASE("matched start vertex is rejected") {
    Graph star = k13();
    BipartiteGraph h = build_bipartite(star, {0}, {1, 2, 3});
    Matching m_prime;
    m_prime.pairs = {{0, 0}};
    MarkedEdgeSet m = project_matching(h, m_prime, 0);
    CHECK(error_code_of([&] { alternating_reachable(h, m, {1}); }) ==
          ErrorCode::UntaggedVertexIsMatched);
    CHECK(error_code_of([&] { alternating_reachable(h, m, {0}); }) ==
          ErrorCode::VertexOutOfRange);  // 0 sits on the X side
  }
}

TEST_CASE("reachable vertices center full stars under a maximum matching") {
  testsup::Rng rng(15);
  for (int round = 0; round < 200; ++round) {
    int n = rng.int_in(2, 12);
    std::int64_t maxm = static_cast<std::int64_t>(n) * (n - 1) / 2;
    Graph g = testsup::random_graph(rng, n, rng.below(maxm + 1));
    VertexSet x, y;
    for (int v = 0; v < n; ++v) (rng.below(2) ? x : y).push_back(v);
    int d = rng.int_in(0, 2);

    BipartiteGraph h = build_bipartite(g, x, y);
    MarkedEdgeSet m =
        project_matching(h, maximum_matching(build_auxiliary(h, d)), d);
    TagClassification tags = classify(h, m, d);
    if (tags.untagged.empty()) continue;
    for (int host : alternating_reachable(h, m, tags.untagged)) {
      CHECK(m.marked_degree(h.left_pos(host)) == d + 1);
    }
  }
}
