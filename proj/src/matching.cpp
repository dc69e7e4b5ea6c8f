#include "bdvd/matching.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace bdvd {

std::int64_t BipartiteGraph::cross_edge_count() const {
  std::int64_t total = 0;
  for (const auto& row : adj_left) total += static_cast<std::int64_t>(row.size());
  return total;
}

int BipartiteGraph::left_pos(int host_vertex) const {
  auto it = std::lower_bound(left.begin(), left.end(), host_vertex);
  if (it == left.end() || *it != host_vertex) return -1;
  return static_cast<int>(it - left.begin());
}

int BipartiteGraph::right_pos(int host_vertex) const {
  auto it = std::lower_bound(right.begin(), right.end(), host_vertex);
  if (it == right.end() || *it != host_vertex) return -1;
  return static_cast<int>(it - right.begin());
}

BipartiteGraph build_bipartite(const Graph& g, const VertexSet& x,
                               const VertexSet& y) {
  if (!is_canonical_set(x) || !is_canonical_set(y))
    throw std::invalid_argument("bipartite sides must be canonical vertex sets");
  if (!set_intersection(x, y).empty())
    raise(ErrorCode::OverlappingSides, "bipartite sides overlap");
  for (int v : x)
    if (v < 0 || v >= g.vertex_count())
      raise(ErrorCode::VertexOutOfRange, "left vertex out of range");
  for (int v : y)
    if (v < 0 || v >= g.vertex_count())
      raise(ErrorCode::VertexOutOfRange, "right vertex out of range");

  BipartiteGraph h;
  h.left = x;
  h.right = y;
  h.adj_left.resize(x.size());
  h.adj_right.resize(y.size());

  std::vector<int> right_of(g.vertex_count(), -1);
  for (int j = 0; j < static_cast<int>(y.size()); ++j) right_of[y[j]] = j;

  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    for (int u : g.neighbors(x[i])) {
      int j = right_of[u];
      if (j >= 0) {
        h.adj_left[i].push_back(j);
        h.adj_right[j].push_back(i);
      }
    }
  }
  return h;
}

AuxiliaryGraph build_auxiliary(const BipartiteGraph& h, int d) {
  if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
  AuxiliaryGraph a;
  a.copies = d + 1;
  a.base_left_count = h.left_count();
  a.right_count = h.right_count();
  a.adj.reserve(static_cast<std::size_t>(a.copies) * a.base_left_count);
  for (int c = 0; c < a.copies; ++c)
    for (int x = 0; x < a.base_left_count; ++x) a.adj.push_back(h.adj_left[x]);
  return a;
}

namespace {

Matching hopcroft_karp(int left_count, int right_count,
                       const std::vector<std::vector<int>>& adj) {
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> mate_left(left_count, -1);
  std::vector<int> mate_right(right_count, -1);
  std::vector<int> dist(left_count, kInf);
  std::vector<int> queue;
  queue.reserve(left_count);

  auto bfs = [&]() {
    queue.clear();
    for (int u = 0; u < left_count; ++u) {
      if (mate_left[u] < 0) {
        dist[u] = 0;
        queue.push_back(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool free_right_reached = false;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int y : adj[u]) {
        int w = mate_right[y];
        if (w < 0) {
          free_right_reached = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return free_right_reached;
  };

  auto dfs = [&](auto&& self, int u) -> bool {
    for (int y : adj[u]) {
      int w = mate_right[y];
      if (w < 0 || (dist[w] == dist[u] + 1 && self(self, w))) {
        mate_left[u] = y;
        mate_right[y] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs()) {
    for (int u = 0; u < left_count; ++u)
      if (mate_left[u] < 0) dfs(dfs, u);
  }

  Matching m;
  for (int u = 0; u < left_count; ++u)
    if (mate_left[u] >= 0) m.pairs.emplace_back(u, mate_left[u]);
  return m;
}

}  // namespace

Matching maximum_matching(const BipartiteGraph& h) {
  return hopcroft_karp(h.left_count(), h.right_count(), h.adj_left);
}

Matching maximum_matching(const AuxiliaryGraph& h_prime) {
  return hopcroft_karp(h_prime.left_count(), h_prime.right_count, h_prime.adj);
}

MarkedEdgeSet project_matching(const BipartiteGraph& h, const Matching& m_prime,
                               int d) {
  if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
  const int base = h.left_count();
  const int copy_vertices = (d + 1) * base;

  MarkedEdgeSet out;
  out.leaves_of.resize(base);
  out.mate_of_right.assign(h.right_count(), -1);

  std::vector<char> copy_used(copy_vertices, 0);
  for (const auto& [cv, y] : m_prime.pairs) {
    if (cv < 0 || cv >= copy_vertices || y < 0 || y >= h.right_count())
      raise(ErrorCode::NotAMatchingOfAuxiliary,
            "matching pair outside the auxiliary graph");
    if (copy_used[cv])
      raise(ErrorCode::NotAMatchingOfAuxiliary,
            "copy-vertex matched twice: " + std::to_string(cv));
    copy_used[cv] = 1;
    int x = cv % base;
    const auto& row = h.adj_left[x];
    if (!std::binary_search(row.begin(), row.end(), y))
      raise(ErrorCode::NotAMatchingOfAuxiliary,
            "matched pair is not an edge of the auxiliary graph");
    if (out.mate_of_right[y] >= 0)
      raise(ErrorCode::NotAMatchingOfAuxiliary,
            "right vertex matched twice: " + std::to_string(y));
    out.mate_of_right[y] = x;
    out.leaves_of[x].push_back(y);
    out.marked.emplace_back(x, y);
  }

  for (auto& leaves : out.leaves_of) std::sort(leaves.begin(), leaves.end());
  std::sort(out.marked.begin(), out.marked.end());
  return out;
}

VertexSet alternating_reachable(const BipartiteGraph& h, const MarkedEdgeSet& m,
                                const VertexSet& untagged) {
  if (!is_canonical_set(untagged))
    throw std::invalid_argument("untagged set must be canonical");
  if (untagged.empty()) return {};

  std::vector<char> visited_right(h.right_count(), 0);
  std::vector<char> visited_left(h.left_count(), 0);
  std::vector<int> queue;
  queue.reserve(h.right_count());

  for (int host : untagged) {
    int y = h.right_pos(host);
    if (y < 0)
      raise(ErrorCode::VertexOutOfRange,
            "untagged vertex " + std::to_string(host) + " is not on the Y side");
    if (m.mate_of_right[y] >= 0)
      raise(ErrorCode::UntaggedVertexIsMatched,
            "untagged vertex " + std::to_string(host) + " is covered by a marked edge");
    visited_right[y] = 1;
    queue.push_back(y);
  }

  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int y = queue[qi];
    for (int x : h.adj_right[y]) {
      if (m.mate_of_right[y] == x) continue;  // marked edge, wrong direction
      if (visited_left[x]) continue;
      visited_left[x] = 1;
      for (int y2 : m.leaves_of[x]) {
        if (!visited_right[y2]) {
          visited_right[y2] = 1;
          queue.push_back(y2);
        }
      }
    }
  }

  VertexSet out;
  for (int x = 0; x < h.left_count(); ++x)
    if (visited_left[x]) out.push_back(h.left[x]);
  return out;
}

}  // namespace bdvd
