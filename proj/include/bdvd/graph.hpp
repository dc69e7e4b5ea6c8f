#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bdvd/errors.hpp"

namespace bdvd {

// Sorted, duplicate-free list of vertex indices of some Graph.
using VertexSet = std::vector<int>;

bool is_canonical_set(const VertexSet& s);
VertexSet make_set(std::vector<int> values);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, int v);

// Immutable simple undirected graph. Vertices are dense indices 0..n-1;
// every vertex additionally carries a stable label so that induced
// subgraphs stay traceable to the graph they were cut from. Adjacency
// lists are kept sorted, which pins the iteration order of everything
// built on top.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list);
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list,
        std::vector<int> labels);

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return m_; }

  int degree(int v) const;
  int max_degree() const;
  std::span<const int> neighbors(int v) const;
  bool has_edge(int u, int v) const;

  int label(int v) const;
  const std::vector<int>& labels() const { return labels_; }

  VertexSet all_vertices() const;
  // N(s): neighbors outside s.
  VertexSet open_neighborhood(const VertexSet& s) const;
  // N[s] = N(s) union s.
  VertexSet closed_neighborhood(const VertexSet& s) const;

  // Subgraph on s with vertices renumbered 0..|s|-1 in the order of s;
  // labels are inherited from this graph.
  Graph induced_subgraph(const VertexSet& s) const;

  // All edges as (u, v) with u < v, ascending.
  std::vector<std::pair<int, int>> edges() const;

 private:
  void check_vertex(int v) const;
  void check_set(const VertexSet& s) const;

  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::int64_t> offsets_{0};
  std::vector<int> adjacency_;
  std::vector<int> labels_;
};

}  // namespace bdvd
