#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "bdvd/graph.hpp"

namespace bdvd {

enum class GraphFormat { Auto, Dimacs, Plain };

std::string format_name(GraphFormat f);
GraphFormat parse_format_name(const std::string& name);

// DIMACS-like: comment lines `c ...`, one header `p edge <n> <m>`, then m
// lines `e <u> <v>` with 1-based ids. Plain: header `<n> <m>`, then m lines
// `<u> <v>` with 0-based ids; `c` comment lines are ignored in both.
// Auto picks Dimacs when the first significant line starts with 'p'.
Graph parse_graph(std::istream& in, GraphFormat format = GraphFormat::Auto,
                  GraphFormat* resolved = nullptr);
Graph parse_graph_file(const std::string& path,
                       GraphFormat format = GraphFormat::Auto,
                       GraphFormat* resolved = nullptr);

// When label_comments is set, emits `c label <file-id> <original-label>`
// lines so renumbered vertices stay traceable to the graph they came from.
void write_graph(std::ostream& out, const Graph& g, GraphFormat format,
                 bool label_comments = false);

// Two lines of original labels: `C: ...` and `I: ...`.
void write_sets(std::ostream& out, const VertexSet& c, const VertexSet& i);
std::pair<VertexSet, VertexSet> parse_sets(std::istream& in);
std::pair<VertexSet, VertexSet> parse_sets_file(const std::string& path);

// Uniform random simple graph with exactly m edges; deterministic per seed.
Graph random_gnm(int n, std::int64_t m, std::uint64_t seed);

}  // namespace bdvd
