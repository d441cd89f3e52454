#include "flexicolor/lists.hpp"

#include <algorithm>
#include <string>

namespace flexicolor {

namespace {

void normalize(std::vector<Color>& list) {
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
}

}  // namespace

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists)) {
  for (auto& list : lists_) normalize(list);
}

ListAssignment ListAssignment::uniform(int n, std::vector<Color> colors) {
  normalize(colors);
  ListAssignment out;
  out.lists_.assign(n, colors);
  return out;
}

bool ListAssignment::contains(Vertex v, Color c) const {
  return std::binary_search(lists_[v].begin(), lists_[v].end(), c);
}

int ListAssignment::max_list_size() const {
  int m = 0;
  for (const auto& list : lists_) m = std::max(m, static_cast<int>(list.size()));
  return m;
}

void ListAssignment::erase(Vertex v, Color c) {
  auto& list = lists_[v];
  auto it = std::lower_bound(list.begin(), list.end(), c);
  if (it != list.end() && *it == c) list.erase(it);
}

void ListAssignment::assign(Vertex v, std::vector<Color> colors) {
  normalize(colors);
  lists_[v] = std::move(colors);
}

void ListAssignment::validate(const Graph& g) const {
  if (size() != g.size()) {
    throw PreconditionError("list assignment covers " + std::to_string(size()) +
                            " vertices, graph has " + std::to_string(g.size()));
  }
  for (Vertex v = 0; v < size(); ++v) {
    if (lists_[v].empty()) throw PreconditionError("vertex " + std::to_string(v) + " has an empty list");
    if (lists_[v].front() < 0) {
      throw PreconditionError("vertex " + std::to_string(v) + " has a negative color");
    }
  }
}

ListAssignment ListAssignment::restrict_to(std::span<const Vertex> vertices) const {
  ListAssignment out;
  out.lists_.reserve(vertices.size());
  for (Vertex v : vertices) out.lists_.push_back(lists_[v]);
  return out;
}

const char* to_string(RequestKind kind) {
  switch (kind) {
    case RequestKind::Unweighted: return "unweighted";
    case RequestKind::UniquelyWeighted: return "unique";
    case RequestKind::Weighted: return "weighted";
  }
  return "?";
}

Request::Request(RequestKind kind, std::vector<RequestEntry> entries)
    : kind_(kind), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.vertex < 0) throw PreconditionError("request names a negative vertex");
    if (e.weight < 0) {
      throw PreconditionError("request weight at vertex " + std::to_string(e.vertex) + " is negative");
    }
    if (kind_ == RequestKind::Unweighted && e.weight != 1) {
      throw PreconditionError("unweighted request carries weight at vertex " + std::to_string(e.vertex));
    }
    if (kind_ == RequestKind::UniquelyWeighted && e.weight == 0) {
      throw PreconditionError("uniquely weighted request has zero weight at vertex " +
                              std::to_string(e.vertex));
    }
    if (i == 0) continue;
    const auto& prev = entries_[i - 1];
    if (prev.vertex == e.vertex) {
      if (kind_ != RequestKind::Weighted) {
        throw PreconditionError("vertex " + std::to_string(e.vertex) + " requested twice");
      }
      if (prev.color == e.color) {
        throw PreconditionError("pair (" + std::to_string(e.vertex) + ", " + std::to_string(e.color) +
                                ") weighted twice");
      }
    }
  }
}

Request Request::unweighted(std::span<const std::pair<Vertex, Color>> wishes) {
  std::vector<RequestEntry> entries;
  for (auto [v, c] : wishes) entries.push_back({v, c, 1});
  return Request(RequestKind::Unweighted, std::move(entries));
}

Weight Request::total_weight() const {
  Weight total = 0;
  for (const auto& e : entries_) total += e.weight;
  return total;
}

std::vector<Vertex> Request::domain() const {
  std::vector<Vertex> out;
  for (const auto& e : entries_) {
    if (e.weight > 0 && (out.empty() || out.back() != e.vertex)) out.push_back(e.vertex);
  }
  return out;
}

bool Request::widespread(int vertex_count) const {
  return static_cast<int>(domain().size()) == vertex_count;
}

Weight Request::weight(Vertex v, Color c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), RequestEntry{v, c, 0});
  return it != entries_.end() && it->vertex == v && it->color == c ? it->weight : 0;
}

std::vector<Color> Request::preferred(int vertex_count) const {
  std::vector<Color> out(vertex_count, kNoColor);
  for (const auto& e : entries_) {
    if (e.weight > 0 && e.vertex < vertex_count) out[e.vertex] = e.color;
  }
  return out;
}

std::vector<Weight> Request::vertex_weights(int vertex_count) const {
  std::vector<Weight> out(vertex_count, 0);
  for (const auto& e : entries_) {
    if (e.vertex < vertex_count) out[e.vertex] += e.weight;
  }
  return out;
}

void Request::validate(const ListAssignment& lists) const {
  for (const auto& e : entries_) {
    if (e.vertex >= lists.size()) {
      throw PreconditionError("requested vertex " + std::to_string(e.vertex) + " out of range");
    }
    if (!lists.contains(e.vertex, e.color)) {
      throw PreconditionError("requested color " + std::to_string(e.color) + " is not in the list of vertex " +
                              std::to_string(e.vertex));
    }
  }
}

void check_list_coloring(const Graph& g, const ListAssignment& lists, const Coloring& coloring) {
  if (static_cast<int>(coloring.size()) != g.size()) {
    throw InvalidColoring("coloring has " + std::to_string(coloring.size()) + " entries, graph has " +
                          std::to_string(g.size()) + " vertices");
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    if (v >= lists.size() || !lists.contains(v, coloring[v])) {
      throw InvalidColoring("vertex " + std::to_string(v) + " has off-list color " +
                            std::to_string(coloring[v]));
    }
  }
  for (auto [u, v] : g.edges()) {
    if (coloring[u] == coloring[v]) {
      throw InvalidColoring("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") is monochromatic with color " + std::to_string(coloring[u]));
    }
  }
}

Weight satisfied_amount(const Graph& g, const ListAssignment& lists, const Coloring& coloring,
                        const Request& request) {
  check_list_coloring(g, lists, coloring);
  Weight total = 0;
  for (const auto& e : request.entries()) {
    if (e.vertex < g.size() && coloring[e.vertex] == e.color) total += e.weight;
  }
  return total;
}

Request reduce_to_unique(const Request& request) {
  std::vector<RequestEntry> kept;
  for (const auto& e : request.entries()) {
    if (e.weight == 0) continue;
    // entries are sorted by (vertex, color): strict > keeps the smallest color on ties
    if (!kept.empty() && kept.back().vertex == e.vertex) {
      if (e.weight > kept.back().weight) kept.back() = e;
    } else {
      kept.push_back(e);
    }
  }
  return Request(RequestKind::UniquelyWeighted, std::move(kept));
}

}  // namespace flexicolor
