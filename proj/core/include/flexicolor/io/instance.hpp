#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "flexicolor/lists.hpp"
#include "flexicolor/structure.hpp"
#include "flexicolor/treewidth.hpp"

namespace flexicolor::io {

/// Self-contained problem instance. `lists` always has one (possibly empty)
/// entry per vertex.
struct Instance {
  std::string name = "unnamed";
  std::uint64_t seed = 0;
  Graph graph;
  std::optional<KTreeOrder> ktree;
  std::optional<TreedepthForest> forest;
  int forest_height = 0;
  std::optional<treewidth::LambdaAssignment> lambda;
  ListAssignment lists;
  Request request;
};

/// Line-oriented text form:
///
///   flexicolor-instance 1
///   name <token>
///   seed <n>
///   vertices <n>
///   edge <u> <v>
///   ktree <width> <v1> ... <vn>
///   treedepth <height> <parent of 0> ... <parent of n-1>   (-1 for roots)
///   lambda <part> <colors...>                               (one per class)
///   list <v> <colors...>
///   request-kind unweighted|unique|weighted
///   request <v> <color> [<weight>]
///
/// Blank lines and lines starting with '#' are ignored. Errors are
/// ParseError with "line N" and the offending field.
Instance parse_instance(const std::string& text);

/// Canonical form; parse_instance(serialize_instance(x)) == x and
/// serializing a parsed canonical document reproduces it byte for byte.
std::string serialize_instance(const Instance& instance);

/// Graph-only DIMACS edge list ("p edge n m", "e u v" with 1-based ids,
/// "c" comments). Lists and request are left empty.
Instance parse_dimacs(const std::string& text);

/// Reads a file, choosing DIMACS when the first non-comment line starts with "p".
Instance load_instance(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace flexicolor::io
