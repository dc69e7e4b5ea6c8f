#pragma once

#include <vector>

#include "bdvd/graph.hpp"
#include "bdvd/matching.hpp"

namespace bdvd {

struct Star {
  int center = -1;
  VertexSet leaves;  // nonempty, excludes the center
};

struct StarPacking {
  std::vector<Star> stars;

  int size() const { return static_cast<int>(stars.size()); }
  VertexSet covered() const;
};

// Stars are pairwise vertex-disjoint, leaves nonempty, every
// (center, leaf) pair an edge of g.
bool is_valid_star_packing(const Graph& g, const StarPacking& p);

// Additionally: centers are exactly c, every star has d+1 leaves and all
// leaves lie in i.
bool is_full_star_packing(const Graph& g, const StarPacking& p,
                          const VertexSet& c, const VertexSet& i, int d);

// Greedy maximal packing of stars with exactly d+1 leaves: scan vertices
// ascending, give an eligible center its d+1 lowest-index uncovered
// neighbors, and repeat until a full pass adds nothing. Afterwards the
// uncovered residue has maximum degree <= d.
StarPacking maximal_star_packing(const Graph& g, int d);

// Same greedy pass, but seeded with an existing packing whose coverage is
// kept; only adds stars.
StarPacking extend_to_maximal(const Graph& g, int d, StarPacking p);

struct TagClassification {
  VertexSet fully_tagged;  // X-vertices whose marked star has d+1 leaves
  VertexSet untagged;      // Y-vertices with an X-neighbor but no star
};

TagClassification classify(const BipartiteGraph& h,
                           const MarkedEdgeSet& projected, int d);

// Whether |c| vertex-disjoint (d+1)-leaf stars with centers exactly c and
// all leaves in i exist; decided through the auxiliary-graph matching.
bool full_star_packing_exists(const Graph& g, const VertexSet& c,
                              const VertexSet& i, int d);

}  // namespace bdvd
