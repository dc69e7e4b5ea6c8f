#pragma once

#include <cstdint>
#include <vector>

#include "bdvd/decomposition.hpp"
#include "bdvd/graph.hpp"

namespace bdvd {

// Guaranteed kernel size per unit of optimum: d^3 + 4d^2 + 5d + 3.
// Rejects d < 0 and d > 1'000'000.
std::int64_t bound_factor(int d);

struct RoundStats {
  int c_size = 0;
  int i_size = 0;
  int repair_iterations = 0;
  int packing_upgrades = 0;
  int initial_c_size = 0;
  int witness_defects = 0;
  int repair_shrink_violations = 0;
};

struct KernelResult {
  int d = 0;
  VertexSet c_total;  // accumulated partial solution, original labels
  VertexSet i_total;  // accumulated safely-discarded vertices, original labels
  Graph kernel;       // induced on the rest, labels preserved
  int rounds = 0;
  std::vector<RoundStats> round_stats;

  int total_packing_upgrades() const;
  int total_repair_iterations() const;
};

// Repeatedly decomposes the residual graph, committing C' to the partial
// solution and discarding I', until a round yields an empty I'.
KernelResult kernelize(const Graph& g, int d);

// True iff deleting s leaves every remaining vertex with degree <= d.
bool is_deletion_set(const Graph& g, int d, const VertexSet& s);

// kernel_solution holds indices of result.kernel; the returned set is in
// original labels and is a deletion set of the original graph, minimum
// whenever kernel_solution is.
VertexSet lift_solution(const KernelResult& result,
                        const VertexSet& kernel_solution);

}  // namespace bdvd
