#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bdvd/graph.hpp"

namespace bdvd {

// Bipartite graph between two disjoint vertex sets of a host graph. The
// sides keep host vertex ids; adjacency is positional within each side.
struct BipartiteGraph {
  VertexSet left;
  VertexSet right;
  std::vector<std::vector<int>> adj_left;   // left position -> right positions
  std::vector<std::vector<int>> adj_right;  // right position -> left positions

  int left_count() const { return static_cast<int>(left.size()); }
  int right_count() const { return static_cast<int>(right.size()); }
  std::int64_t cross_edge_count() const;
  int left_pos(int host_vertex) const;   // -1 when absent
  int right_pos(int host_vertex) const;  // -1 when absent
};

// Cross edges are exactly the host edges with one endpoint in x and one
// in y; edges internal to either side are dropped.
BipartiteGraph build_bipartite(const Graph& g, const VertexSet& x,
                               const VertexSet& y);

// d+1 replicas of the left side sharing the right side. Copy-vertex
// c*|X|+x stands for the c-th replica of left position x and inherits
// its adjacency.
struct AuxiliaryGraph {
  int copies = 0;
  int base_left_count = 0;
  int right_count = 0;
  std::vector<std::vector<int>> adj;  // copy-vertex -> right positions

  int left_count() const { return copies * base_left_count; }
  int copy_index(int copy_vertex) const { return copy_vertex / base_left_count; }
  int base_vertex(int copy_vertex) const { return copy_vertex % base_left_count; }
};

AuxiliaryGraph build_auxiliary(const BipartiteGraph& h, int d);

struct Matching {
  // (left, right) position pairs, vertex-disjoint on both sides, sorted.
  std::vector<std::pair<int, int>> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
};

// Hopcroft-Karp maximum matching. Deterministic: BFS/DFS scan in
// ascending vertex order, so equal inputs give identical pair sets.
Matching maximum_matching(const BipartiteGraph& h);
Matching maximum_matching(const AuxiliaryGraph& h_prime);

// Marked H-edges obtained by collapsing the replicas of an auxiliary-graph
// matching. Grouped by left endpoint the marked edges form vertex-disjoint
// stars with at most d+1 leaves each.
struct MarkedEdgeSet {
  std::vector<std::pair<int, int>> marked;  // (left, right) positions, sorted
  std::vector<std::vector<int>> leaves_of;  // per left position, sorted
  std::vector<int> mate_of_right;           // right position -> left position or -1

  int size() const { return static_cast<int>(marked.size()); }
  int marked_degree(int left_position) const {
    return static_cast<int>(leaves_of[left_position].size());
  }
};

MarkedEdgeSet project_matching(const BipartiteGraph& h, const Matching& m_prime,
                               int d);

// Left-side host vertices reachable from the untagged right-side vertices
// by paths that alternate unmarked (right -> left) and marked
// (left -> right) edges, starting with an unmarked edge. Computed as a
// layered BFS from the whole untagged set at once.
VertexSet alternating_reachable(const BipartiteGraph& h, const MarkedEdgeSet& m,
                                const VertexSet& untagged);

}  // namespace bdvd
