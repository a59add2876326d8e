#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "monochrome/generators.hpp"

namespace monochrome {

/// Parses the "name:arg:arg..." family grammar:
///
///   complete:n           bipartite:a:b        star:leaves
///   path:edges           cycle:g              hypercube:s
///   er:n:p[:seedS]       regular:n:d[:seedS]  gadget:a:b:g
///   gw:height:p0,p1,...[:seedS]
///   inhom:kernel.csv[:seedS]   (n x n probability grid, one row per line)
///
/// Random families take their seed from the spec ("seed7" or "7") or else
/// from `default_seed`. Errors: ParseError, InvalidArgument (missing seed).
FamilySpec parse_family_spec(const std::string& text, std::optional<std::uint64_t> default_seed = std::nullopt);

/// True when `text` starts with one of the family names followed by ':'.
bool looks_like_family_spec(const std::string& text);

/// Reads a square CSV grid of edge probabilities. Errors: ParseError.
std::vector<double> load_kernel_csv(const std::string& path, std::size_t* n);

}  // namespace monochrome
