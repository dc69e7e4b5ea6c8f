#pragma once

#include <string>
#include <vector>

#include "bdvd/graph.hpp"
#include "bdvd/matching.hpp"
#include "bdvd/star_packing.hpp"

namespace bdvd {

struct BasicResult {
  VertexSet c_prime;
  VertexSet i_prime;
  // Full (d+1)-leaf stars from c_prime into i_prime.
  StarPacking witness_packing;
};

// Matching-based split of a partitioned graph (x, y) with G[y] of maximum
// degree <= d. The result satisfies: a full (d+1)-star packing runs from
// C' into I', and no edge joins I' to X \ C'.
BasicResult basic(const Graph& g, const VertexSet& x, const VertexSet& y, int d);

struct RepairState {
  VertexSet c_prime;
  VertexSet i_prime;
  VertexSet t_prime;       // N(i_prime) \ c_prime, recomputed in the full graph
  VertexSet bad_frontier;  // I'-vertices adjacent to an overloaded T'-vertex
  int iteration = 0;
};

// I'-vertices adjacent to some T'-vertex whose degree in g[V \ C'] exceeds
// d. Degrees are measured in the full residual graph, never in a subgraph
// restricted to C' and I'. Updates state.t_prime and state.bad_frontier.
VertexSet bad_vertices(const Graph& g, RepairState& state, int d);

// Partition (I, C, T, J) of the vertex set such that
//  (1) every vertex of I and T has degree <= d in g[V \ C],
//  (2) no edge joins I and J,
//  (3) a full (d+1)-star packing runs from C into I.
struct DBoundedDecomposition {
  VertexSet i, c, t, j;
  StarPacking witness_packing;
};

struct DecomposeStats {
  int packing_upgrades = 0;
  int repair_iterations = 0;
  int initial_c_size = 0;
  // Reachable centers whose marked star lacks d+1 leaves (must stay 0).
  int witness_defects = 0;
  // Repair iterations entered without |C'| having shrunk (must stay 0).
  int repair_shrink_violations = 0;
};

DBoundedDecomposition decompose(const Graph& g, int d,
                                DecomposeStats* stats = nullptr);

// All vertices whose whole closed neighborhood already meets the degree
// bound, as (I = those vertices, C = empty, T = N(I), J = rest).
DBoundedDecomposition trivial_reduction(const Graph& g, int d);

struct ValidationReport {
  bool partition_ok = false;
  bool degree_bound_ok = false;  // condition (1)
  bool separation_ok = false;    // condition (2)
  bool packing_ok = false;       // condition (3)
  bool crown_checked = false;    // d == 0 only
  bool crown_ok = false;         // I independent, no I-J edges, matching saturates C
  std::vector<std::string> failures;

  bool all_ok() const {
    return partition_ok && degree_bound_ok && separation_ok && packing_ok;
  }
};

ValidationReport validate_decomposition(const Graph& g, int d,
                                        const DBoundedDecomposition& dec);

}  // namespace bdvd
