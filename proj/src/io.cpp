#include "bdvd/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace bdvd {

namespace {

[[noreturn]] void parse_fail(std::size_t line_number, const std::string& what) {
  raise(ErrorCode::ParseError,
        "line " + std::to_string(line_number) + ": " + what);
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

bool significant(const std::string& line) {
  for (char ch : line) {
    if (!std::isspace(static_cast<unsigned char>(ch))) return true;
  }
  return false;
}

bool is_comment(const std::string& line) {
  std::istringstream ss(line);
  std::string tok;
  ss >> tok;
  return tok == "c";
}

long long to_number(const std::string& tok, std::size_t line_number) {
  try {
    std::size_t used = 0;
    long long value = std::stoll(tok, &used);
    if (used != tok.size()) parse_fail(line_number, "bad number '" + tok + "'");
    return value;
  } catch (const std::invalid_argument&) {
    parse_fail(line_number, "bad number '" + tok + "'");
  } catch (const std::out_of_range&) {
    parse_fail(line_number, "number out of range '" + tok + "'");
  }
}

Graph parse_dimacs(const std::vector<std::string>& lines) {
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<std::pair<int, int>> edges;

  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t line_no = idx + 1;
    const std::string& line = lines[idx];
    if (!significant(line) || is_comment(line)) continue;
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head == "p") {
      if (have_header) parse_fail(line_no, "repeated problem line");
      std::string kind, ns, ms, extra;
      if (!(ss >> kind >> ns >> ms) || (ss >> extra))
        parse_fail(line_no, "expected 'p edge <n> <m>'");
      if (kind != "edge") parse_fail(line_no, "unknown problem type '" + kind + "'");
      n = to_number(ns, line_no);
      m = to_number(ms, line_no);
      if (n < 0 || m < 0) parse_fail(line_no, "negative header value");
      have_header = true;
    } else if (head == "e") {
      if (!have_header) parse_fail(line_no, "edge before problem line");
      std::string us, vs, extra;
      if (!(ss >> us >> vs) || (ss >> extra))
        parse_fail(line_no, "expected 'e <u> <v>'");
      long long u = to_number(us, line_no);
      long long v = to_number(vs, line_no);
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      parse_fail(line_no, "unknown line type '" + head + "'");
    }
  }
  if (!have_header) parse_fail(lines.size() + 1, "missing problem line");
  if (static_cast<long long>(edges.size()) != m)
    raise(ErrorCode::HeaderMismatch,
          "header declares " + std::to_string(m) + " edges, file has " +
              std::to_string(edges.size()));
  return Graph(static_cast<int>(n), edges);
}

Graph parse_plain(const std::vector<std::string>& lines) {
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<std::pair<int, int>> edges;

  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t line_no = idx + 1;
    const std::string& line = lines[idx];
    if (!significant(line) || is_comment(line)) continue;
    std::istringstream ss(line);
    std::string a, b, extra;
    if (!(ss >> a >> b) || (ss >> extra))
      parse_fail(line_no, "expected two numbers");
    long long first = to_number(a, line_no);
    long long second = to_number(b, line_no);
    if (!have_header) {
      n = first;
      m = second;
      if (n < 0 || m < 0) parse_fail(line_no, "negative header value");
      have_header = true;
    } else {
      edges.emplace_back(static_cast<int>(first), static_cast<int>(second));
    }
  }
  if (!have_header) parse_fail(lines.size() + 1, "missing header line");
  if (static_cast<long long>(edges.size()) != m)
    raise(ErrorCode::HeaderMismatch,
          "header declares " + std::to_string(m) + " edges, file has " +
              std::to_string(edges.size()));
  return Graph(static_cast<int>(n), edges);
}

}  // namespace

std::string format_name(GraphFormat f) {
  switch (f) {
    case GraphFormat::Auto:
      return "auto";
    case GraphFormat::Dimacs:
      return "dimacs";
    case GraphFormat::Plain:
      return "plain";
  }
  return "unknown";
}

GraphFormat parse_format_name(const std::string& name) {
  if (name == "auto") return GraphFormat::Auto;
  if (name == "dimacs") return GraphFormat::Dimacs;
  if (name == "plain") return GraphFormat::Plain;
  raise(ErrorCode::ParseError, "unknown graph format '" + name + "'");
}

Graph parse_graph(std::istream& in, GraphFormat format, GraphFormat* resolved) {
  std::vector<std::string> lines = read_lines(in);
  if (format == GraphFormat::Auto) {
    format = GraphFormat::Plain;
    for (const auto& line : lines) {
      if (!significant(line) || is_comment(line)) continue;
      std::istringstream ss(line);
      std::string head;
      ss >> head;
      if (head == "p" || head == "e") format = GraphFormat::Dimacs;
      break;
    }
  }
  if (resolved) *resolved = format;
  return format == GraphFormat::Dimacs ? parse_dimacs(lines) : parse_plain(lines);
}

Graph parse_graph_file(const std::string& path, GraphFormat format,
                       GraphFormat* resolved) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::ParseError, "cannot open '" + path + "'");
  return parse_graph(in, format, resolved);
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format,
                 bool label_comments) {
  if (format == GraphFormat::Auto)
    throw std::invalid_argument("write_graph needs a concrete format");
  const bool dimacs = format == GraphFormat::Dimacs;
  const int id_base = dimacs ? 1 : 0;
  if (label_comments) {
    for (int v = 0; v < g.vertex_count(); ++v)
      out << "c label " << v + id_base << ' ' << g.label(v) << '\n';
  }
  if (dimacs)
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  else
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) {
    if (dimacs) out << "e ";
    out << u + id_base << ' ' << v + id_base << '\n';
  }
}

void write_sets(std::ostream& out, const VertexSet& c, const VertexSet& i) {
  out << "C:";
  for (int v : c) out << ' ' << v;
  out << '\n' << "I:";
  for (int v : i) out << ' ' << v;
  out << '\n';
}

std::pair<VertexSet, VertexSet> parse_sets(std::istream& in) {
  std::vector<std::string> lines = read_lines(in);
  bool have_c = false;
  bool have_i = false;
  std::vector<int> c, i;
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t line_no = idx + 1;
    const std::string& line = lines[idx];
    if (!significant(line) || is_comment(line)) continue;
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    std::vector<int>* target = nullptr;
    if (head == "C:") {
      if (have_c) parse_fail(line_no, "repeated C: line");
      have_c = true;
      target = &c;
    } else if (head == "I:") {
      if (have_i) parse_fail(line_no, "repeated I: line");
      have_i = true;
      target = &i;
    } else {
      parse_fail(line_no, "expected 'C:' or 'I:' line");
    }
    std::string tok;
    while (ss >> tok)
      target->push_back(static_cast<int>(to_number(tok, line_no)));
  }
  if (!have_c || !have_i)
    raise(ErrorCode::ParseError, "sets file needs both a C: and an I: line");
  return {make_set(std::move(c)), make_set(std::move(i))};
}

std::pair<VertexSet, VertexSet> parse_sets_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::ParseError, "cannot open '" + path + "'");
  return parse_sets(in);
}

Graph random_gnm(int n, std::int64_t m, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  const std::int64_t max_edges =
      static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m < 0 || m > max_edges)
    raise(ErrorCode::TooManyEdges,
          "cannot place " + std::to_string(m) + " edges on " +
              std::to_string(n) + " vertices");

  std::mt19937_64 rng(seed);
  auto pick_vertex = [&]() { return static_cast<int>(rng() % n); };
  auto key = [n](int u, int v) {
    return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + v;
  };

  // Sample whichever of the edge set / complement is smaller, by rejection.
  const bool sample_complement = 2 * m > max_edges;
  const std::int64_t want = sample_complement ? max_edges - m : m;
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(want) * 2 + 1);
  while (static_cast<std::int64_t>(chosen.size()) < want) {
    int u = pick_vertex();
    int v = pick_vertex();
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    chosen.insert(key(u, v));
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  if (sample_complement) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!chosen.count(key(u, v))) edges.emplace_back(u, v);
  } else {
    for (std::uint64_t k : chosen)
      edges.emplace_back(static_cast<int>(k / n), static_cast<int>(k % n));
    std::sort(edges.begin(), edges.end());
  }
  return Graph(n, edges);
}

}  // namespace bdvd
