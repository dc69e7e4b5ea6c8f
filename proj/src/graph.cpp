#include "bdvd/graph.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bdvd {

bool is_canonical_set(const VertexSet& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] >= s[i]) return false;
  }
  return true;
}

VertexSet make_set(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool set_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list)
    : Graph(n, edge_list, {}) {}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list,
             std::vector<int> labels) {
  if (n < 0) raise(ErrorCode::VertexOutOfRange, "negative vertex count");
  n_ = n;
  m_ = static_cast<std::int64_t>(edge_list.size());

  if (labels.empty()) {
    labels_.resize(n_);
    std::iota(labels_.begin(), labels_.end(), 0);
  } else {
    if (static_cast<int>(labels.size()) != n_)
      throw std::invalid_argument("label count does not match vertex count");
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("labels must be pairwise distinct");
    labels_ = std::move(labels);
  }

  std::vector<std::int64_t> deg(n_, 0);
  for (const auto& [u, v] : edge_list) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      raise(ErrorCode::VertexOutOfRange,
            "edge endpoint out of range: (" + std::to_string(u) + ", " +
                std::to_string(v) + ")");
    if (u == v)
      raise(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
    ++deg[u];
    ++deg[v];
  }

  offsets_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.resize(static_cast<std::size_t>(2) * edge_list.size());

  std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edge_list) {
    adjacency_[cursor[u]++] = v;
    adjacency_[cursor[v]++] = u;
  }
  for (int v = 0; v < n_; ++v) {
    auto first = adjacency_.begin() + offsets_[v];
    auto last = adjacency_.begin() + offsets_[v + 1];
    std::sort(first, last);
    auto dup = std::adjacent_find(first, last);
    if (dup != last)
      raise(ErrorCode::DuplicateEdge, "duplicate edge (" + std::to_string(v) +
                                          ", " + std::to_string(*dup) + ")");
  }
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    raise(ErrorCode::VertexOutOfRange,
          "vertex " + std::to_string(v) + " out of range [0, " +
              std::to_string(n_) + ")");
}

void Graph::check_set(const VertexSet& s) const {
  if (!is_canonical_set(s))
    throw std::invalid_argument("vertex set must be sorted and duplicate-free");
  if (!s.empty()) {
    check_vertex(s.front());
    check_vertex(s.back());
  }
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(offsets_[v + 1] - offsets_[v]);
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v)
    best = std::max(best, static_cast<int>(offsets_[v + 1] - offsets_[v]));
  return best;
}

std::span<const int> Graph::neighbors(int v) const {
  check_vertex(v);
  return {adjacency_.data() + offsets_[v],
          static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::label(int v) const {
  check_vertex(v);
  return labels_[v];
}

VertexSet Graph::all_vertices() const {
  VertexSet out(n_);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

VertexSet Graph::open_neighborhood(const VertexSet& s) const {
  check_set(s);
  std::vector<char> in_s(n_, 0);
  for (int v : s) in_s[v] = 1;
  std::vector<char> seen(n_, 0);
  VertexSet out;
  for (int v : s) {
    for (int u : neighbors(v)) {
      if (!in_s[u] && !seen[u]) {
        seen[u] = 1;
        out.push_back(u);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet Graph::closed_neighborhood(const VertexSet& s) const {
  return set_union(open_neighborhood(s), s);
}

Graph Graph::induced_subgraph(const VertexSet& s) const {
  check_set(s);
  std::vector<int> pos(n_, -1);
  for (int i = 0; i < static_cast<int>(s.size()); ++i) pos[s[i]] = i;

  std::vector<std::pair<int, int>> sub_edges;
  std::vector<int> sub_labels;
  sub_labels.reserve(s.size());
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    int v = s[i];
    sub_labels.push_back(labels_[v]);
    for (int u : neighbors(v)) {
      if (u > v && pos[u] >= 0) sub_edges.emplace_back(i, pos[u]);
    }
  }
  return Graph(static_cast<int>(s.size()), sub_edges, std::move(sub_labels));
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int v = 0; v < n_; ++v) {
    for (int u : neighbors(v)) {
      if (u > v) out.emplace_back(v, u);
    }
  }
  return out;
}

}  // namespace bdvd
