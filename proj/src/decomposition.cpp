#include "bdvd/decomposition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bdvd {

namespace {

struct Phase2Result {
  VertexSet c_prime;
  VertexSet i_prime;
  StarPacking witness;     // stars centered in C', host ids
  StarPacking full_stars;  // all (d+1)-leaf stars of the marked packing
  int witness_defects = 0;
};

// Steps shared by basic() and decompose(): given H and the projected
// marked-edge set, derive C' (alternating reachability from the untagged
// vertices), I' (Y minus the leaves of stars centered outside C') and the
// witness packing.
Phase2Result phase2(const BipartiteGraph& h, const MarkedEdgeSet& m, int d) {
  Phase2Result out;
  TagClassification tags = classify(h, m, d);
  if (!tags.untagged.empty())
    out.c_prime = alternating_reachable(h, m, tags.untagged);

  std::vector<char> in_c(h.left_count(), 0);
  for (int host : out.c_prime) in_c[h.left_pos(host)] = 1;

  std::vector<int> y_prime_hosts;
  for (int x = 0; x < h.left_count(); ++x) {
    const auto& leaves = m.leaves_of[x];
    if (static_cast<int>(leaves.size()) == d + 1) {
      Star star;
      star.center = h.left[x];
      for (int y : leaves) star.leaves.push_back(h.right[y]);
      out.full_stars.stars.push_back(star);
    }
    if (in_c[x]) {
      if (static_cast<int>(leaves.size()) != d + 1) {
        ++out.witness_defects;
        continue;
      }
      out.witness.stars.push_back(out.full_stars.stars.back());
    } else {
      for (int y : leaves) y_prime_hosts.push_back(h.right[y]);
    }
  }
  out.i_prime = set_difference(h.right, make_set(std::move(y_prime_hosts)));
  return out;
}

void check_partition(const Graph& g, const VertexSet& x, const VertexSet& y) {
  if (!is_canonical_set(x) || !is_canonical_set(y))
    raise(ErrorCode::PartitionInvalid, "sides must be canonical vertex sets");
  if (x.size() + y.size() != static_cast<std::size_t>(g.vertex_count()) ||
      set_union(x, y) != g.all_vertices())
    raise(ErrorCode::PartitionInvalid,
          "(X, Y) does not partition the vertex set");
}

void check_degree_bound_in_y(const Graph& g, const VertexSet& y, int d) {
  std::vector<char> in_y(g.vertex_count(), 0);
  for (int v : y) in_y[v] = 1;
  for (int v : y) {
    int deg = 0;
    for (int u : g.neighbors(v)) deg += in_y[u];
    if (deg > d)
      raise(ErrorCode::DegreeBoundViolatedInY,
            "vertex " + std::to_string(v) + " has degree " + std::to_string(deg) +
                " > " + std::to_string(d) + " inside Y");
  }
}

BasicResult basic_impl(const Graph& g, const VertexSet& x, const VertexSet& y,
                       int d, DecomposeStats* stats) {
  check_partition(g, x, y);
  check_degree_bound_in_y(g, y, d);

  BipartiteGraph h = build_bipartite(g, x, y);
  AuxiliaryGraph aux = build_auxiliary(h, d);
  Matching m_prime = maximum_matching(aux);
  MarkedEdgeSet m = project_matching(h, m_prime, d);

  Phase2Result p2 = phase2(h, m, d);
  if (stats) stats->witness_defects += p2.witness_defects;
  return BasicResult{std::move(p2.c_prime), std::move(p2.i_prime),
                     std::move(p2.witness)};
}

// Positions of the elements of subset within the sorted superset.
VertexSet positions_in(const VertexSet& subset, const VertexSet& superset) {
  VertexSet out;
  out.reserve(subset.size());
  std::size_t j = 0;
  for (int v : subset) {
    while (j < superset.size() && superset[j] < v) ++j;
    out.push_back(static_cast<int>(j));
    ++j;
  }
  return out;
}

VertexSet map_from_positions(const VertexSet& positions, const VertexSet& superset) {
  VertexSet out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(superset[p]);
  return out;
}

StarPacking map_packing_from_positions(const StarPacking& p,
                                       const VertexSet& superset) {
  StarPacking out;
  out.stars.reserve(p.stars.size());
  for (const auto& star : p.stars) {
    Star mapped;
    mapped.center = superset[star.center];
    for (int leaf : star.leaves) mapped.leaves.push_back(superset[leaf]);
    std::sort(mapped.leaves.begin(), mapped.leaves.end());
    out.stars.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace

BasicResult basic(const Graph& g, const VertexSet& x, const VertexSet& y, int d) {
  if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
  return basic_impl(g, x, y, d, nullptr);
}

VertexSet bad_vertices(const Graph& g, RepairState& state, int d) {
  if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
  state.t_prime = set_difference(g.open_neighborhood(state.i_prime), state.c_prime);

  std::vector<char> in_c(g.vertex_count(), 0);
  for (int v : state.c_prime) in_c[v] = 1;

  VertexSet overloaded;
  for (int v : state.t_prime) {
    int deg = 0;
    for (int u : g.neighbors(v)) deg += !in_c[u];
    if (deg > d) overloaded.push_back(v);
  }
  state.bad_frontier =
      set_intersection(g.open_neighborhood(overloaded), state.i_prime);
  return state.bad_frontier;
}

DBoundedDecomposition decompose(const Graph& g, int d, DecomposeStats* stats) {
  if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
  DecomposeStats local;
  DecomposeStats& st = stats ? *stats : local;
  st = DecomposeStats{};

  const VertexSet all = g.all_vertices();
  StarPacking s = maximal_star_packing(g, d);

  BipartiteGraph h;
  MarkedEdgeSet m;
  Phase2Result p2;
  while (true) {
    VertexSet x = s.covered();
    VertexSet y = set_difference(all, x);
    h = build_bipartite(g, x, y);
    AuxiliaryGraph aux = build_auxiliary(h, d);
    Matching m_prime = maximum_matching(aux);
    m = project_matching(h, m_prime, d);

    p2 = phase2(h, m, d);
    if (p2.full_stars.size() > s.size()) {
      // Larger packing found through the matching; adopt it, then restore
      // maximality so the new Y side keeps its degree bound.
      s = extend_to_maximal(g, d, std::move(p2.full_stars));
      ++st.packing_upgrades;
      continue;
    }
    break;
  }

  st.witness_defects += p2.witness_defects;
  st.initial_c_size = static_cast<int>(p2.c_prime.size());

  RepairState rs;
  rs.c_prime = std::move(p2.c_prime);
  rs.i_prime = std::move(p2.i_prime);
  StarPacking witness = std::move(p2.witness);

  int entered_with_c = -1;
  while (true) {
    VertexSet bad = bad_vertices(g, rs, d);
    if (bad.empty()) break;
    ++st.repair_iterations;
    ++rs.iteration;
    if (entered_with_c >= 0 &&
        static_cast<int>(rs.c_prime.size()) >= entered_with_c)
      ++st.repair_shrink_violations;
    entered_with_c = static_cast<int>(rs.c_prime.size());

    rs.i_prime = set_difference(rs.i_prime, bad);
    VertexSet sub = set_union(rs.c_prime, rs.i_prime);
    Graph gs = g.induced_subgraph(sub);
    BasicResult br = basic_impl(gs, positions_in(rs.c_prime, sub),
                                positions_in(rs.i_prime, sub), d, &st);
    rs.c_prime = map_from_positions(br.c_prime, sub);
    rs.i_prime = map_from_positions(br.i_prime, sub);
    witness = map_packing_from_positions(br.witness_packing, sub);
  }

  DBoundedDecomposition dec;
  dec.i = std::move(rs.i_prime);
  dec.c = std::move(rs.c_prime);
  dec.t = set_difference(g.open_neighborhood(dec.i), dec.c);
  dec.j = set_difference(set_difference(set_difference(all, dec.i), dec.c), dec.t);
  dec.witness_packing = std::move(witness);
  return dec;
}

DBoundedDecomposition trivial_reduction(const Graph& g, int d) {
  if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
  std::vector<int> deg(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);

  DBoundedDecomposition dec;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] > d) continue;
    bool quiet = true;
    for (int u : g.neighbors(v)) {
      if (deg[u] > d) {
        quiet = false;
        break;
      }
    }
    if (quiet) dec.i.push_back(v);
  }
  dec.t = g.open_neighborhood(dec.i);
  dec.j = set_difference(set_difference(g.all_vertices(), dec.i), dec.t);
  return dec;
}

ValidationReport validate_decomposition(const Graph& g, int d,
                                        const DBoundedDecomposition& dec) {
  if (d < 0) throw std::invalid_argument("degree bound must be nonnegative");
  ValidationReport report;
  auto fail = [&report](std::string message) {
    report.failures.push_back(std::move(message));
  };

  // Partition: canonical, disjoint, covering.
  report.partition_ok = true;
  const VertexSet* parts[4] = {&dec.i, &dec.c, &dec.t, &dec.j};
  const char* names[4] = {"I", "C", "T", "J"};
  std::size_t total = 0;
  for (int k = 0; k < 4; ++k) {
    total += parts[k]->size();
    if (!is_canonical_set(*parts[k])) {
      report.partition_ok = false;
      fail(std::string("partition: ") + names[k] + " is not a canonical set");
    }
    for (int v : *parts[k]) {
      if (v < 0 || v >= g.vertex_count()) {
        report.partition_ok = false;
        fail(std::string("partition: ") + names[k] + " contains out-of-range vertex " +
             std::to_string(v));
      }
    }
  }
  if (report.partition_ok) {
    VertexSet merged = set_union(set_union(dec.i, dec.c), set_union(dec.t, dec.j));
    if (total != static_cast<std::size_t>(g.vertex_count()) ||
        merged != g.all_vertices()) {
      report.partition_ok = false;
      fail("partition: I, C, T, J do not partition the vertex set");
    }
  }
  if (!report.partition_ok) return report;

  std::vector<char> in_c(g.vertex_count(), 0);
  for (int v : dec.c) in_c[v] = 1;
  std::vector<char> in_j(g.vertex_count(), 0);
  for (int v : dec.j) in_j[v] = 1;

  // Condition (1): I and T vertices keep degree <= d once C is deleted.
  report.degree_bound_ok = true;
  VertexSet bounded = set_union(dec.i, dec.t);
  for (int v : bounded) {
    int deg = 0;
    for (int u : g.neighbors(v)) deg += !in_c[u];
    if (deg > d) {
      report.degree_bound_ok = false;
      fail("degree bound: vertex " + std::to_string(v) + " has degree " +
           std::to_string(deg) + " > " + std::to_string(d) + " in G[V \\ C]");
      break;
    }
  }

  // Condition (2): no edge joins I and J.
  report.separation_ok = true;
  for (int v : dec.i) {
    for (int u : g.neighbors(v)) {
      if (in_j[u]) {
        report.separation_ok = false;
        fail("separation: edge " + std::to_string(v) + "-" + std::to_string(u) +
             " joins I and J");
        break;
      }
    }
    if (!report.separation_ok) break;
  }

  // Condition (3): a full (d+1)-star packing from C into I exists.
  report.packing_ok = full_star_packing_exists(g, dec.c, dec.i, d);
  if (!report.packing_ok)
    fail("star packing: no full " + std::to_string(d + 1) +
         "-leaf star packing from C into I");

  if (d == 0) {
    report.crown_checked = true;
    report.crown_ok = true;
    std::vector<char> in_i(g.vertex_count(), 0);
    for (int v : dec.i) in_i[v] = 1;
    // The crown's third block is J with T folded in, so edges from I may
    // only go to C.
    for (int v : dec.i) {
      for (int u : g.neighbors(v)) {
        if (in_i[u]) {
          report.crown_ok = false;
          fail("crown: I contains edge " + std::to_string(v) + "-" +
               std::to_string(u));
          break;
        }
        if (!in_c[u]) {
          report.crown_ok = false;
          fail("crown: edge " + std::to_string(v) + "-" + std::to_string(u) +
               " leaves I without entering C");
          break;
        }
      }
      if (!report.crown_ok) break;
    }
    if (report.crown_ok && !dec.c.empty()) {
      BipartiteGraph h = build_bipartite(g, dec.c, dec.i);
      int matched = maximum_matching(h).size();
      if (matched != static_cast<int>(dec.c.size())) {
        report.crown_ok = false;
        fail("crown: matching saturates only " + std::to_string(matched) + " of " +
             std::to_string(dec.c.size()) + " C-vertices");
      }
    }
  }
  return report;
}

}  // namespace bdvd
