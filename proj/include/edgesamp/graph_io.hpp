#pragma once

#include <filesystem>
#include <iosfwd>

#include "edgesamp/graph.hpp"

namespace edgesamp {

// Edge-list text format:
//
//   # optional comment lines
//   n m
//   u v
//   ...
//
// One edge per line, whitespace separated, 0 <= u < v < n. Exactly m edge
// lines must follow the header. Lines whose first non-blank character is '#'
// and blank lines are ignored.
//
// Throws ParseError for malformed text and ValidationError for graphs that are
// not simple.
Graph read_graph(std::istream& in);
Graph load_graph(const std::filesystem::path& path);

// Writes the header and edges in canonical id order.
void write_graph(std::ostream& out, const Graph& g);
void save_graph(const std::filesystem::path& path, const Graph& g);

}  // namespace edgesamp
