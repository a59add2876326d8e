#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "monochrome/graph.hpp"

namespace monochrome {

/// Edge-list interchange format:
///
///     # comment lines start with '#'
///     n m
///     u v        (m lines, 0-based, u < v, ascending)
///
/// The writer always emits the canonical form, so write(read(x)) is stable.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list_text(const Graph& g);

/// Throws ParseError on malformed input (wrong token count, edge count
/// mismatch, non-integer tokens) and the Graph errors for invalid pairs.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const Graph& g);

}  // namespace monochrome
