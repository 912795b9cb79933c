#include "edgesamp/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "edgesamp/errors.hpp"

namespace edgesamp {

namespace {

// Splits a line into exactly two unsigned integers.
std::optional<std::pair<std::uint64_t, std::uint64_t>> parse_pair(std::string_view line) {
  std::uint64_t values[2];
  std::size_t count = 0;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    if (count == 2) return std::nullopt;
    auto [next, ec] = std::from_chars(p, end, values[count]);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t' && *next != '\r')) {
      return std::nullopt;
    }
    ++count;
    p = next;
  }
  if (count != 2) return std::nullopt;
  return std::make_pair(values[0], values[1]);
}

bool skippable(std::string_view line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto pair = parse_pair(line);
    if (!pair) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two non-negative integers, got '" +
                       line + "'");
    }
    if (!header) {
      header = pair;
      edges.reserve(pair->second);
      continue;
    }
    const auto [u, v] = *pair;
    if (u >= header->first || v >= header->first) {
      throw ValidationError("line " + std::to_string(line_no) + ": vertex id out of range (n = " +
                            std::to_string(header->first) + ")");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!header) throw ParseError("missing 'n m' header");
  if (edges.size() != header->second) {
    throw ParseError("header declares " + std::to_string(header->second) + " edges but " +
                     std::to_string(edges.size()) + " were listed");
  }
  return Graph(header->first, edges);
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_graph(out, g);
}

}  // namespace edgesamp
