#include "bdvd/exact_solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bdvd {

namespace {

// Search state for one connected component, in local 0-based indices that
// ascend with the global vertex ids, so lexicographic choices transfer.
struct ComponentSolver {
  int d;
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<char> deleted;
  std::vector<int> degree;

  ComponentSolver(const Graph& g, const std::vector<int>& verts, int d_in)
      : d(d_in), n(static_cast<int>(verts.size())) {
    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < n; ++i) local[verts[i]] = i;
    adj.resize(n);
    for (int i = 0; i < n; ++i) {
      for (int u : g.neighbors(verts[i])) {
        if (local[u] >= 0) adj[i].push_back(local[u]);
      }
    }
    deleted.assign(n, 0);
    degree.resize(n);
    for (int i = 0; i < n; ++i) degree[i] = static_cast<int>(adj[i].size());
  }

  void remove(int v) {
    deleted[v] = 1;
    for (int u : adj[v])
      if (!deleted[u]) --degree[u];
  }

  void restore(int v) {
    deleted[v] = 0;
    for (int u : adj[v])
      if (!deleted[u]) ++degree[u];
  }

  int lowest_violator() const {
    for (int v = 0; v < n; ++v)
      if (!deleted[v] && degree[v] > d) return v;
    return -1;
  }

  // Vertex-disjoint stars with d+1 leaves each in the residual graph; any
  // deletion set must hit every one of them.
  int packing_lower_bound() const {
    std::vector<char> used(deleted.begin(), deleted.end());
    int stars = 0;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      int free_neighbors = 0;
      for (int u : adj[v]) {
        if (!used[u] && ++free_neighbors > d) break;
      }
      if (free_neighbors <= d) continue;
      used[v] = 1;
      int taken = 0;
      for (int u : adj[v]) {
        if (used[u]) continue;
        used[u] = 1;
        if (++taken == d + 1) break;
      }
      ++stars;
    }
    return stars;
  }

  // Is there a deletion set of size <= budget whose members are all >= floor?
  bool feasible(int floor, int budget) {
    int v = lowest_violator();
    if (v < 0) return true;
    if (budget <= 0) return false;
    if (packing_lower_bound() > budget) return false;

    // Any solution either deletes v or hits every set of d+1 of its
    // residual neighbors; branch over v and its d+1 lowest neighbors.
    std::vector<int> candidates;
    if (v >= floor) candidates.push_back(v);
    int taken = 0;
    for (int u : adj[v]) {
      if (deleted[u]) continue;
      if (u >= floor) candidates.push_back(u);
      if (++taken == d + 1) break;
    }
    for (int c : candidates) {
      remove(c);
      bool ok = feasible(floor, budget - 1);
      restore(c);
      if (ok) return true;
    }
    return false;
  }

  int optimum(int max_budget) {
    for (int k = packing_lower_bound(); k <= max_budget; ++k)
      if (feasible(0, k)) return k;
    return -1;  // nothing of size <= max_budget
  }

  // Lexicographically smallest deletion set of size opt, built element by
  // element with a feasibility probe per candidate.
  std::vector<int> lexmin(int opt) {
    std::vector<int> solution;
    int budget = opt;
    int lo = 0;
    while (lowest_violator() >= 0) {
      bool extended = false;
      for (int v = lo; v < n; ++v) {
        remove(v);
        if (feasible(v + 1, budget - 1)) {
          solution.push_back(v);
          --budget;
          lo = v + 1;
          extended = true;
          break;
        }
        restore(v);
      }
      if (!extended)
        throw std::logic_error("lexmin extension failed despite feasibility");
    }
    for (int v : solution) restore(v);
    return solution;
  }

  bool residual_ok_under(const std::vector<char>& removed) const {
    for (int v = 0; v < n; ++v) {
      if (removed[v]) continue;
      int deg = 0;
      for (int u : adj[v]) {
        if (!removed[u] && ++deg > d) return false;
      }
    }
    return true;
  }

  // First feasible k-subset in lexicographic order.
  bool subset_search(int k, std::vector<int>& out) {
    if (k > n) return false;
    std::vector<int> pick(k);
    std::vector<char> removed(n, 0);
    // Standard combination enumeration in lexicographic order.
    for (int i = 0; i < k; ++i) {
      pick[i] = i;
      removed[i] = 1;
    }
    while (true) {
      if (residual_ok_under(removed)) {
        out = pick;
        return true;
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) return false;
      removed[pick[i]] = 0;
      ++pick[i];
      removed[pick[i]] = 1;
      for (int j = i + 1; j < k; ++j) {
        removed[pick[j]] = 0;
        pick[j] = pick[j - 1] + 1;
        removed[pick[j]] = 1;
      }
    }
  }
};

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> components;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> stack;
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    stack.assign(1, start);
    std::vector<int> comp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

void check_config(const Graph& g, int d, const ExactConfig& cfg) {
  if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
  if (cfg.max_vertices < 0 || cfg.max_vertices > 30)
    raise(ErrorCode::InvalidConfig, "max_vertices must lie in [0, 30]");
  if (cfg.budget_k && *cfg.budget_k < 0)
    raise(ErrorCode::InvalidConfig, "budget_k must be nonnegative");
  if (g.vertex_count() > cfg.max_vertices)
    raise(ErrorCode::TooLarge, "instance has " +
                                   std::to_string(g.vertex_count()) +
                                   " vertices, cap is " +
                                   std::to_string(cfg.max_vertices));
}

VertexSet solve_impl(const Graph& g, int d, const ExactConfig& cfg) {
  check_config(g, d, cfg);

  std::vector<int> solution;
  int total = 0;
  for (const auto& comp : connected_components(g)) {
    ComponentSolver solver(g, comp, d);
    std::vector<int> local_solution;
    if (cfg.strategy == ExactConfig::Strategy::Branching) {
      int opt = solver.optimum(solver.n);
      local_solution = solver.lexmin(opt);
    } else {
      for (int k = 0; k <= solver.n; ++k) {
        if (solver.subset_search(k, local_solution)) break;
      }
    }
    total += static_cast<int>(local_solution.size());
    for (int v : local_solution) solution.push_back(comp[v]);
  }
  if (cfg.budget_k && total > *cfg.budget_k)
    raise(ErrorCode::BudgetExceeded,
          "optimum " + std::to_string(total) + " exceeds budget " +
              std::to_string(*cfg.budget_k));
  return make_set(std::move(solution));
}

}  // namespace

VertexSet solve_exact(const Graph& g, int d, const ExactConfig& cfg) {
  return solve_impl(g, d, cfg);
}

int optimum_size(const Graph& g, int d, const ExactConfig& cfg) {
  check_config(g, d, cfg);
  int total = 0;
  for (const auto& comp : connected_components(g)) {
    ComponentSolver solver(g, comp, d);
    if (cfg.strategy == ExactConfig::Strategy::Branching) {
      total += solver.optimum(solver.n);
    } else {
      std::vector<int> ignored;
      for (int k = 0; k <= solver.n; ++k) {
        if (solver.subset_search(k, ignored)) {
          total += k;
          break;
        }
      }
    }
  }
  if (cfg.budget_k && total > *cfg.budget_k)
    raise(ErrorCode::BudgetExceeded,
          "optimum " + std::to_string(total) + " exceeds budget " +
              std::to_string(*cfg.budget_k));
  return total;
}

}  // namespace bdvd
