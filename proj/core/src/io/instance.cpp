#include "flexicolor/io/instance.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace flexicolor::io {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

class LineReader {
 public:
  LineReader(int number, std::vector<std::string> tokens) : number_(number), tokens_(std::move(tokens)) {}

  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    throw ParseError("line " + std::to_string(number_) + ": field '" + field + "': " + what);
  }

  std::size_t size() const { return tokens_.size(); }
  const std::string& key() const { return tokens_[0]; }

  void expect_count(std::size_t count) const {
    if (tokens_.size() != count) {
      fail(key(), "expected " + std::to_string(count - 1) + " values, got " + std::to_string(tokens_.size() - 1));
    }
  }

  template <typename Int>
  Int number(std::size_t i, const std::string& field) const {
    if (i >= tokens_.size()) fail(field, "missing");
    const auto& tok = tokens_[i];
    Int value{};
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || end != tok.data() + tok.size()) fail(field, "not an integer: '" + tok + "'");
    return value;
  }

  int vertex(std::size_t i, const std::string& field, int n) const {
    int v = number<int>(i, field);
    if (v < 0 || v >= n) fail(field, "vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n - 1));
    return v;
  }

  const std::string& token(std::size_t i) const { return tokens_[i]; }
  int line() const { return number_; }

 private:
  int number_;
  std::vector<std::string> tokens_;
};

RequestKind parse_kind(const LineReader& line) {
  line.expect_count(2);
  const auto& t = line.token(1);
  if (t == "unweighted") return RequestKind::Unweighted;
  if (t == "unique") return RequestKind::UniquelyWeighted;
  if (t == "weighted") return RequestKind::Weighted;
  line.fail("request-kind", "unknown kind '" + t + "'");
}

template <typename T>
void append(std::string& out, const T& values) {
  for (const auto& v : values) out += " " + std::to_string(v);
}

}  // namespace

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::vector<LineReader> lines;
  for (int number = 1; std::getline(in, raw); ++number) {
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto tokens = split(raw);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    lines.emplace_back(number, std::move(tokens));
  }
  if (lines.empty() || lines[0].key() != "flexicolor-instance") {
    throw ParseError("line 1: field 'header': expected 'flexicolor-instance 1'");
  }
  lines[0].expect_count(2);
  if (lines[0].token(1) != "1") lines[0].fail("header", "unsupported version " + lines[0].token(1));

  Instance inst;
  int n = -1;
  std::vector<Edge> edges;
  std::vector<std::vector<Color>> lists;
  std::vector<bool> has_list;
  std::optional<RequestKind> kind;
  std::vector<RequestEntry> entries;
  std::vector<int> entry_lines;
  std::map<std::string, int> seen;

  auto need_vertices = [&](const LineReader& line) {
    if (n < 0) line.fail(line.key(), "appears before 'vertices'");
  };
  auto once = [&](const LineReader& line) {
    if (seen[line.key()]++) line.fail(line.key(), "given more than once");
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& key = line.key();
    if (key == "name") {
      once(line);
      line.expect_count(2);
      inst.name = line.token(1);
    } else if (key == "seed") {
      once(line);
      line.expect_count(2);
      inst.seed = line.number<std::uint64_t>(1, "seed");
    } else if (key == "vertices") {
      once(line);
      line.expect_count(2);
      n = line.number<int>(1, "vertices");
      if (n < 0) line.fail("vertices", "negative count");
      lists.assign(n, {});
      has_list.assign(n, false);
    } else if (key == "edge") {
      need_vertices(line);
      line.expect_count(3);
      Vertex u = line.vertex(1, "edge", n), v = line.vertex(2, "edge", n);
      if (u == v) line.fail("edge", "loop at vertex " + std::to_string(u));
      edges.emplace_back(std::min(u, v), std::max(u, v));
    } else if (key == "ktree") {
      need_vertices(line);
      once(line);
      KTreeOrder order;
      order.width = line.number<int>(1, "ktree width");
      if (order.width < 0) line.fail("ktree width", "negative");
      if (line.size() != static_cast<std::size_t>(n) + 2) line.fail("ktree", "sequence must list all vertices");
      for (std::size_t j = 2; j < line.size(); ++j) order.sequence.push_back(line.vertex(j, "ktree", n));
      inst.ktree = std::move(order);
    } else if (key == "treedepth") {
      need_vertices(line);
      once(line);
      inst.forest_height = line.number<int>(1, "treedepth height");
      if (line.size() != static_cast<std::size_t>(n) + 2) line.fail("treedepth", "need one parent per vertex");
      TreedepthForest forest;
      for (std::size_t j = 2; j < line.size(); ++j) {
        int p = line.number<int>(j, "treedepth parent");
        if (p < -1 || p >= n) line.fail("treedepth parent", "parent " + std::to_string(p) + " out of range");
        forest.parent.push_back(p);
      }
      inst.forest = std::move(forest);
    } else if (key == "lambda") {
      if (line.size() < 3) line.fail("lambda", "need a part size and its colors");
      if (!inst.lambda) inst.lambda.emplace();
      inst.lambda->parts.push_back(line.number<int>(1, "lambda part"));
      std::vector<Color> colors;
      for (std::size_t j = 2; j < line.size(); ++j) colors.push_back(line.number<Color>(j, "lambda color"));
      inst.lambda->classes.push_back(std::move(colors));
    } else if (key == "list") {
      need_vertices(line);
      if (line.size() < 2) line.fail("list", "missing vertex");
      Vertex v = line.vertex(1, "list", n);
      if (has_list[v]) line.fail("list", "vertex " + std::to_string(v) + " listed twice");
      has_list[v] = true;
      for (std::size_t j = 2; j < line.size(); ++j) lists[v].push_back(line.number<Color>(j, "list color"));
      auto sorted = lists[v];
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) line.fail("list", "repeated color");
    } else if (key == "request-kind") {
      once(line);
      kind = parse_kind(line);
    } else if (key == "request") {
      need_vertices(line);
      if (line.size() != 3 && line.size() != 4) line.fail("request", "expected vertex, color and optional weight");
      RequestEntry e;
      e.vertex = line.vertex(1, "request vertex", n);
      e.color = line.number<Color>(2, "request color");
      if (line.size() == 4) {
        e.weight = line.number<Weight>(3, "request weight");
        if (e.weight < 0) line.fail("request weight", "negative");
      }
      entries.push_back(e);
      entry_lines.push_back(line.line());
    } else {
      line.fail(key, "unknown key");
    }
  }
  if (n < 0) throw ParseError("field 'vertices': missing");
  try {
    inst.graph = Graph(n, edges);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("field 'edge': ") + e.what());
  }
  inst.lists = ListAssignment(std::move(lists));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (!inst.lists.contains(e.vertex, e.color)) {
      throw ParseError("line " + std::to_string(entry_lines[i]) + ": field 'request color': color " +
                       std::to_string(e.color) + " is not in the list of vertex " + std::to_string(e.vertex));
    }
    if (!kind && e.weight != 1) kind = RequestKind::Weighted;
  }
  try {
    inst.request = Request(kind.value_or(RequestKind::Unweighted), std::move(entries));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("field 'request': ") + e.what());
  }
  if (inst.ktree) {
    if (auto bad = validate_ktree_order(inst.graph, *inst.ktree)) {
      throw ParseError("field 'ktree': position " + std::to_string(bad->index) + ", vertex " +
                       std::to_string(bad->vertex) + ": " + bad->reason);
    }
  }
  if (inst.forest) {
    if (auto bad = validate_treedepth(inst.graph, *inst.forest, inst.forest_height)) {
      throw ParseError("field 'treedepth': " + *bad);
    }
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  const Graph& g = inst.graph;
  std::string out = "flexicolor-instance 1\n";
  out += "name " + inst.name + "\n";
  out += "seed " + std::to_string(inst.seed) + "\n";
  out += "vertices " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += "edge " + std::to_string(u) + " " + std::to_string(v) + "\n";
  if (inst.ktree) {
    out += "ktree " + std::to_string(inst.ktree->width);
    append(out, inst.ktree->sequence);
    out += "\n";
  }
  if (inst.forest) {
    out += "treedepth " + std::to_string(inst.forest_height);
    append(out, inst.forest->parent);
    out += "\n";
  }
  if (inst.lambda) {
    for (std::size_t i = 0; i < inst.lambda->parts.size(); ++i) {
      out += "lambda " + std::to_string(inst.lambda->parts[i]);
      append(out, inst.lambda->classes[i]);
      out += "\n";
    }
  }
  for (Vertex v = 0; v < inst.lists.size(); ++v) {
    if (inst.lists.list_size(v) == 0) continue;
    out += "list " + std::to_string(v);
    append(out, inst.lists[v]);
    out += "\n";
  }
  out += std::string("request-kind ") + to_string(inst.request.kind()) + "\n";
  const bool weighted = inst.request.kind() != RequestKind::Unweighted;
  for (const auto& e : inst.request.entries()) {
    out += "request " + std::to_string(e.vertex) + " " + std::to_string(e.color);
    if (weighted) out += " " + std::to_string(e.weight);
    out += "\n";
  }
  return out;
}

Instance parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int n = -1;
  std::vector<Edge> edges;
  for (int number = 1; std::getline(in, raw); ++number) {
    auto tokens = split(raw);
    if (tokens.empty() || tokens[0] == "c") continue;
    LineReader line(number, tokens);
    if (tokens[0] == "p") {
      if (n >= 0) line.fail("p", "second problem line");
      line.expect_count(4);
      n = line.number<int>(2, "p vertices");
      if (n < 0) line.fail("p vertices", "negative");
    } else if (tokens[0] == "e") {
      if (n < 0) line.fail("e", "appears before the problem line");
      line.expect_count(3);
      int u = line.number<int>(1, "e"), v = line.number<int>(2, "e");
      if (u < 1 || u > n || v < 1 || v > n) line.fail("e", "vertex out of range 1.." + std::to_string(n));
      if (u == v) line.fail("e", "loop");
      Edge e{std::min(u, v) - 1, std::max(u, v) - 1};
      edges.push_back(e);
    } else {
      line.fail(tokens[0], "unknown line type");
    }
  }
  if (n < 0) throw ParseError("field 'p': missing problem line");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Instance inst;
  inst.name = "dimacs";
  inst.graph = Graph(n, edges);
  inst.lists = ListAssignment(std::vector<std::vector<Color>>(n));
  return inst;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

Instance load_instance(const std::string& path) {
  std::string text = read_file(path);
  std::istringstream in(text);
  for (std::string raw; std::getline(in, raw);) {
    auto tokens = split(raw);
    if (tokens.empty() || tokens[0][0] == '#' || tokens[0] == "c") continue;
    return tokens[0] == "p" ? parse_dimacs(text) : parse_instance(text);
  }
  throw ParseError("'" + path + "' is empty");
}

}  // namespace flexicolor::io
