#include "bdvd/star_packing.hpp"

#include <algorithm>
#include <stdexcept>

namespace bdvd {

VertexSet StarPacking::covered() const {
  std::vector<int> all;
  for (const auto& star : stars) {
    all.push_back(star.center);
    all.insert(all.end(), star.leaves.begin(), star.leaves.end());
  }
  return make_set(std::move(all));
}

bool is_valid_star_packing(const Graph& g, const StarPacking& p) {
  std::size_t total = 0;
  for (const auto& star : p.stars) {
    if (star.center < 0 || star.center >= g.vertex_count()) return false;
    if (star.leaves.empty() || !is_canonical_set(star.leaves)) return false;
    if (set_contains(star.leaves, star.center)) return false;
    for (int leaf : star.leaves) {
      if (leaf < 0 || leaf >= g.vertex_count()) return false;
      if (!g.has_edge(star.center, leaf)) return false;
    }
    total += 1 + star.leaves.size();
  }
  return total == p.covered().size();  // vertex-disjointness
}

bool is_full_star_packing(const Graph& g, const StarPacking& p,
                          const VertexSet& c, const VertexSet& i, int d) {
  if (!is_valid_star_packing(g, p)) return false;
  std::vector<int> centers;
  for (const auto& star : p.stars) {
    if (static_cast<int>(star.leaves.size()) != d + 1) return false;
    for (int leaf : star.leaves)
      if (!set_contains(i, leaf)) return false;
    centers.push_back(star.center);
  }
  return make_set(std::move(centers)) == c;
}

namespace {

// Extends the packing (given its coverage flags) until no uncovered vertex
// keeps d+1 uncovered neighbors.
void greedy_extend(const Graph& g, int d, std::vector<char>& covered,
                   std::vector<Star>& stars) {
  const int want = d + 1;
  VertexSet leaves;
  leaves.reserve(want);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (covered[v]) continue;
      leaves.clear();
      for (int u : g.neighbors(v)) {
        if (covered[u]) continue;
        leaves.push_back(u);
        if (static_cast<int>(leaves.size()) == want) break;
      }
      if (static_cast<int>(leaves.size()) < want) continue;
      covered[v] = 1;
      for (int u : leaves) covered[u] = 1;
      stars.push_back(Star{v, leaves});
      changed = true;
    }
  }
}

}  // namespace

StarPacking maximal_star_packing(const Graph& g, int d) {
  if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
  StarPacking packing;
  std::vector<char> covered(g.vertex_count(), 0);
  greedy_extend(g, d, covered, packing.stars);
  return packing;
}

StarPacking extend_to_maximal(const Graph& g, int d, StarPacking p) {
  if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
  std::vector<char> covered(g.vertex_count(), 0);
  for (int v : p.covered()) covered[v] = 1;
  greedy_extend(g, d, covered, p.stars);
  return p;
}

TagClassification classify(const BipartiteGraph& h,
                           const MarkedEdgeSet& projected, int d) {
  if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
  TagClassification tags;
  for (int x = 0; x < h.left_count(); ++x)
    if (projected.marked_degree(x) == d + 1) tags.fully_tagged.push_back(h.left[x]);
  for (int y = 0; y < h.right_count(); ++y)
    if (!h.adj_right[y].empty() && projected.mate_of_right[y] < 0)
      tags.untagged.push_back(h.right[y]);
  return tags;
}

bool full_star_packing_exists(const Graph& g, const VertexSet& c,
                              const VertexSet& i, int d) {
  if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
  if (c.empty()) return true;
  BipartiteGraph h = build_bipartite(g, c, i);
  AuxiliaryGraph aux = build_auxiliary(h, d);
  return maximum_matching(aux).size() ==
         (d + 1) * static_cast<int>(c.size());
}

}  // namespace bdvd
