#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "flexicolor/lists.hpp"
#include "flexicolor/structure.hpp"

namespace flexicolor::treewidth {

/// Ordered list of colorings in which every color of every list L(v) is used
/// at v by exactly `multiplicity` members.
struct ColoringFamily {
  std::vector<Coloring> members;
  int multiplicity = 0;

  std::size_t size() const { return members.size(); }
};

/// Throws InvalidColoring when a member is improper or off-list, or when some
/// (vertex, color) count differs from the multiplicity.
void verify_family(const Graph& g, const ListAssignment& lists, const ColoringFamily& family);

/// Two colorings of a tree with size-2 lists covering every list.
ColoringFamily tree_pair_family(const Graph& tree, const ListAssignment& lists);

using SixColors = std::array<Color, 6>;

/// The four conditions on the six colorings at edge uv: proper, pairwise
/// distinct color pairs, each list color used exactly twice at u and at v.
bool admissible_at(const SixColors& at_u, const SixColors& at_v, std::span<const Color> list_u,
                   std::span<const Color> list_v);

/// Lexicographically smallest sorted six-tuple of distinct pairs admissible
/// at an edge with these lists.
std::pair<SixColors, SixColors> seed_pair(std::span<const Color> list_u, std::span<const Color> list_v);

/// First arrangement of list_w (each color twice, multiset permutations in
/// lexicographic order) admissible at uw and vw. Throws InternalError when
/// none exists.
SixColors extend_phi(const SixColors& at_u, const SixColors& at_v, std::span<const Color> list_u,
                     std::span<const Color> list_v, std::span<const Color> list_w);

/// Six colorings of a 2-tree with size-3 lists, admissible at every edge.
ColoringFamily two_tree_family(const Graph& g, const KTreeOrder& order, const ListAssignment& lists);

/// Vertices of the width-k order starting from A (a subset of the first k
/// vertices of size k - top_part or k - top_part + 1): each later vertex joins
/// when exactly k - top_part of its back-neighbours have joined. Sorted.
std::vector<Vertex> build_SA(const Graph& g, const KTreeOrder& order, std::span<const Vertex> start,
                             int top_part);

/// Partition of k + 1 into parts of size at most 3, with one color class per part.
struct LambdaAssignment {
  std::vector<int> parts;
  std::vector<std::vector<Color>> classes;
};

/// Throws PreconditionError unless parts sum to width + 1 with each part in
/// 1..3, classes are disjoint and every list meets class i in exactly parts[i]
/// colors and nothing else.
void validate_lambda(const Graph& g, const KTreeOrder& order, const LambdaAssignment& lambda,
                     const ListAssignment& lists);

/// Family of (k + 1)! colorings in which every list color appears at its
/// vertex in exactly k! members.
ColoringFamily lambda_family(const Graph& g, const KTreeOrder& order, const LambdaAssignment& lambda,
                             const ListAssignment& lists, std::int64_t size_cap = 1'000'000);

struct BestMember {
  std::size_t index = 0;
  Weight satisfied = 0;
};

/// Member with the largest satisfied weight; ties go to the smallest index.
BestMember best_of_family(const Graph& g, const ListAssignment& lists, const ColoringFamily& family,
                          const Request& request);

}  // namespace flexicolor::treewidth
