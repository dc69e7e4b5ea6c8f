#include "bdvd/kernelization.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bdvd {

std::int64_t bound_factor(int d) {
  if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
  if (d > 1'000'000)
    raise(ErrorCode::DegreeBoundTooLarge,
          "degree bound " + std::to_string(d) + " exceeds the supported range");
  const std::int64_t dd = d;
  return dd * dd * dd + 4 * dd * dd + 5 * dd + 3;
}

int KernelResult::total_packing_upgrades() const {
  int total = 0;
  for (const auto& r : round_stats) total += r.packing_upgrades;
  return total;
}

int KernelResult::total_repair_iterations() const {
  int total = 0;
  for (const auto& r : round_stats) total += r.repair_iterations;
  return total;
}

KernelResult kernelize(const Graph& g, int d) {
  if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
  KernelResult result;
  result.d = d;

  Graph cur = g;
  std::vector<int> c_labels;
  std::vector<int> i_labels;
  while (true) {
    DecomposeStats ds;
    DBoundedDecomposition dec = decompose(cur, d, &ds);
    ++result.rounds;
    result.round_stats.push_back(RoundStats{
        static_cast<int>(dec.c.size()), static_cast<int>(dec.i.size()),
        ds.repair_iterations, ds.packing_upgrades, ds.initial_c_size,
        ds.witness_defects, ds.repair_shrink_violations});

    for (int v : dec.c) c_labels.push_back(cur.label(v));
    for (int v : dec.i) i_labels.push_back(cur.label(v));

    const bool last_round = dec.i.empty();
    if (!dec.i.empty() || !dec.c.empty()) {
      VertexSet keep =
          set_difference(cur.all_vertices(), set_union(dec.i, dec.c));
      cur = cur.induced_subgraph(keep);
    }
    if (last_round) break;
  }

  result.c_total = make_set(std::move(c_labels));
  result.i_total = make_set(std::move(i_labels));
  result.kernel = std::move(cur);
  return result;
}

bool is_deletion_set(const Graph& g, int d, const VertexSet& s) {
  if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
  if (!is_canonical_set(s))
    throw std::invalid_argument("deletion set must be canonical");
  if (!s.empty() && (s.front() < 0 || s.back() >= g.vertex_count()))
    raise(ErrorCode::VertexOutOfRange, "deletion set vertex out of range");

  std::vector<char> deleted(g.vertex_count(), 0);
  for (int v : s) deleted[v] = 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (deleted[v]) continue;
    int deg = 0;
    for (int u : g.neighbors(v)) {
      deg += !deleted[u];
      if (deg > d) return false;
    }
  }
  return true;
}

VertexSet lift_solution(const KernelResult& result,
                        const VertexSet& kernel_solution) {
  if (!is_deletion_set(result.kernel, result.d, kernel_solution))
    raise(ErrorCode::NotADeletionSetOfKernel,
          "given set is not a deletion set of the kernel");
  std::vector<int> lifted(result.c_total);
  for (int v : kernel_solution) lifted.push_back(result.kernel.label(v));
  return make_set(std::move(lifted));
}

}  // namespace bdvd
