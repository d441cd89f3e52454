#pragma once

#include <span>
#include <vector>

#include "flexicolor/graph.hpp"

namespace flexicolor {

/// Per-vertex color lists, each kept sorted and duplicate-free.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::vector<std::vector<Color>> lists);
  /// Every one of `n` vertices gets `colors`.
  static ListAssignment uniform(int n, std::vector<Color> colors);

  int size() const noexcept { return static_cast<int>(lists_.size()); }
  std::span<const Color> operator[](Vertex v) const { return lists_[v]; }
  int list_size(Vertex v) const { return static_cast<int>(lists_[v].size()); }
  bool contains(Vertex v, Color c) const;
  int max_list_size() const;

  void erase(Vertex v, Color c);
  void assign(Vertex v, std::vector<Color> colors);

  const std::vector<std::vector<Color>>& lists() const noexcept { return lists_; }

  /// Throws PreconditionError unless there is one non-empty list of
  /// non-negative colors per vertex of g.
  void validate(const Graph& g) const;

  /// Lists of the given vertices, in that order.
  ListAssignment restrict_to(std::span<const Vertex> vertices) const;

  bool operator==(const ListAssignment&) const = default;

 private:
  std::vector<std::vector<Color>> lists_;
};

enum class RequestKind { Unweighted, UniquelyWeighted, Weighted };

const char* to_string(RequestKind kind);

struct RequestEntry {
  Vertex vertex = -1;
  Color color = kNoColor;
  Weight weight = 1;

  auto operator<=>(const RequestEntry&) const = default;
};

/// Preferred colors, optionally weighted. Entries are sorted by (vertex, color).
/// Unweighted: one entry per vertex, weight 1. Uniquely weighted: one entry
/// per vertex, positive weight. Weighted: distinct (vertex, color) pairs with
/// non-negative weights.
class Request {
 public:
  Request() = default;
  Request(RequestKind kind, std::vector<RequestEntry> entries);

  static Request unweighted(std::span<const std::pair<Vertex, Color>> wishes);

  RequestKind kind() const noexcept { return kind_; }
  const std::vector<RequestEntry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  Weight total_weight() const;
  /// Vertices carrying positive weight, sorted.
  std::vector<Vertex> domain() const;
  bool widespread(int vertex_count) const;
  Weight weight(Vertex v, Color c) const;
  /// Preferred color of each vertex (kNoColor outside the domain); not
  /// meaningful for general weighted requests.
  std::vector<Color> preferred(int vertex_count) const;
  /// Weight per vertex, summed over its colors.
  std::vector<Weight> vertex_weights(int vertex_count) const;

  /// Throws PreconditionError when a vertex is out of range or a requested
  /// color is missing from its list.
  void validate(const ListAssignment& lists) const;

  bool operator==(const Request&) const = default;

 private:
  RequestKind kind_ = RequestKind::Unweighted;
  std::vector<RequestEntry> entries_;
};

/// Throws InvalidColoring naming the first off-list vertex or monochromatic edge.
void check_list_coloring(const Graph& g, const ListAssignment& lists, const Coloring& coloring);

/// Total weight of entries whose color the coloring uses. Validates first.
Weight satisfied_amount(const Graph& g, const ListAssignment& lists, const Coloring& coloring,
                        const Request& request);

/// Keeps one heaviest color per vertex (ties to the smallest color) and drops
/// vertices whose weights are all zero.
Request reduce_to_unique(const Request& request);

}  // namespace flexicolor
