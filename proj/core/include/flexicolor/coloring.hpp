#pragma once

#include <span>
#include <vector>

#include "flexicolor/graph.hpp"

namespace flexicolor {

/// Greedy colors in vertex-id order (at most maxdeg + 1 colors); Brooks
/// produces a coloring with at most maxdeg colors.
enum class ColoringMode { Greedy, Brooks };

const char* to_string(ColoringMode mode);

struct VertexColoring {
  std::vector<int> color;  // 0-based classes
  int colors_used = 0;
  ColoringMode mode = ColoringMode::Greedy;
  int power = 1;
};

/// Proper coloring of g^power. Brooks mode requires g^power to be connected,
/// not complete and not an odd cycle; violations raise PreconditionError
/// naming the obstruction.
VertexColoring proper_coloring(const Graph& g, int power, ColoringMode mode);

struct IndependentSubset {
  std::vector<Vertex> vertices;  // sorted
  int colors_used = 0;           // classes used by the coloring of g^distance
  ColoringMode mode = ColoringMode::Greedy;
  int distance = 1;
};

/// Largest (or heaviest, when `weights` is indexed by vertex) color class of
/// `requested` under proper_coloring(g, distance, mode). Members are pairwise
/// more than `distance` apart. Ties go to the smallest color class.
IndependentSubset independent_request_subset(const Graph& g, std::span<const Vertex> requested,
                                             int distance, ColoringMode mode,
                                             std::span<const Weight> weights = {});

}  // namespace flexicolor
