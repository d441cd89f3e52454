#pragma once

#include <string>
#include <vector>

#include "flexicolor/blocks.hpp"
#include "flexicolor/coloring.hpp"
#include "flexicolor/degree_choosable.hpp"
#include "flexicolor/lists.hpp"

namespace flexicolor::maxdeg {

/// Precolored vertices and their colors. Colors of precolored vertices are
/// struck from the lists of their neighbours.
struct PrecolorState {
  std::vector<bool> fixed;
  std::vector<Color> color;  // meaningful where fixed
};

struct BlockReport {
  std::vector<Vertex> vertices;  // sorted, global ids
  BlockKind kind = BlockKind::Other;
  bool terminal = false;
};

struct BadComponentReport {
  std::vector<Vertex> vertices;          // sorted, global ids
  std::vector<std::vector<Color>> lists; // pruned list per entry of `vertices`
  std::vector<BlockReport> blocks;
  bool bad = false;
  /// Edges between the component and precolored vertices.
  int edges_to_fixed = 0;
};

/// Components of g minus the precolored set with pruned lists; a component is
/// bad when every pruned list has exactly the component degree and every
/// block is a clique or an odd cycle.
std::vector<BadComponentReport> classify_components(const Graph& g, const ListAssignment& lists,
                                                    const PrecolorState& state);

/// Decrease in the number of bad components when r stops being precolored.
int b_value(const Graph& g, const ListAssignment& lists, const PrecolorState& state, Vertex r);

/// Throws PreconditionError unless g is connected, has maxdeg >= 3, is not
/// K_{maxdeg+1}, and every list has size >= deg + 1 below maxdeg and >= deg
/// at maxdeg.
void validate_instance(const Graph& g, const ListAssignment& lists);

struct Move {
  Vertex vertex = -1;
  int b = 0;
};

/// Bipartite graph between kept requests and bad components, measured the
/// first time no move removes two or more bad components.
struct DischargeCheck {
  bool recorded = false;
  int kept = 0;            // |R''|
  int bad_components = 0;  // |D|
  int max_kept_degree = 0;
  int min_component_degree = 0;
};

struct Trace {
  ColoringMode mode = ColoringMode::Brooks;
  int colors_used = 0;
  std::vector<Vertex> independent;  // R'
  std::vector<Move> moves;          // in order; together they form R+
  std::vector<Vertex> kept;         // R''
  int initial_bad_components = 0;
  DischargeCheck discharge;
};

struct SolverOutcome {
  Coloring coloring;
  Weight satisfied = 0;
  Weight total = 0;
  Rational certified_fraction{0};
  Rational certified_amount{0};  // certified_fraction * total
  std::string derivation;
  Trace trace;

  bool bound_met() const { return Rational(satisfied) >= certified_amount; }
};

struct SolverOptions {
  ColoringMode mode = ColoringMode::Brooks;
  DegreeChoosableOptions extension;
};

/// Unweighted requests. Certifies |R| / (6 * palette), palette = maxdeg in
/// Brooks mode and maxdeg + 1 in greedy mode.
SolverOutcome solve_unweighted(const Graph& g, const ListAssignment& lists, const Request& request,
                               const SolverOptions& options = {});

/// Weighted requests, reduced to one color per vertex. Certifies
/// total / (2 * maxdeg^3) for uniquely weighted input and
/// total / (2 * maxdeg^3 * max list size) otherwise.
SolverOutcome solve_weighted(const Graph& g, const ListAssignment& lists, const Request& request,
                             const SolverOptions& options = {.mode = ColoringMode::Greedy});

}  // namespace flexicolor::maxdeg
