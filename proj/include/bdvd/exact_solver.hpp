#pragma once

#include <optional>

#include "bdvd/graph.hpp"

namespace bdvd {

struct ExactConfig {
  // Inputs larger than this are refused; hard rail at 30 vertices.
  int max_vertices = 24;
  // When set, raise BudgetExceeded if the optimum exceeds it.
  std::optional<int> budget_k;

  enum class Strategy { Branching, SubsetEnumeration };
  Strategy strategy = Strategy::Branching;
};

// Minimum d-degree deletion set, ties broken toward the lexicographically
// smallest vertex set. Connected components are solved independently.
VertexSet solve_exact(const Graph& g, int d, const ExactConfig& cfg = {});

int optimum_size(const Graph& g, int d, const ExactConfig& cfg = {});

}  // namespace bdvd
