#include "flexicolor/io/solve.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "flexicolor/degeneracy.hpp"
#include "flexicolor/maxdeg.hpp"
#include "flexicolor/treedepth.hpp"
#include "flexicolor/treewidth.hpp"

namespace flexicolor::io {

namespace {

template <typename T>
std::string join(const T& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += " ";
    out += std::to_string(v);
  }
  return out;
}

ColoringMode mode_or(const SolveOptions& options, ColoringMode fallback) { return options.mode.value_or(fallback); }

Rational parse_rational(const std::string& text, const std::string& field) {
  auto slash = text.find('/');
  auto number = [&](const std::string& s) {
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) throw ParseError("field '" + field + "': bad rational");
    return v;
  };
  if (slash == std::string::npos) return Rational(number(text));
  std::int64_t den = number(text.substr(slash + 1));
  if (den == 0) throw ParseError("field '" + field + "': zero denominator");
  return Rational(number(text.substr(0, slash)), den);
}

void fill_common(ResultDocument& doc, Weight satisfied, Weight total, Rational fraction) {
  doc.satisfied = satisfied;
  doc.total = total;
  doc.certified_fraction = fraction;
  doc.certified = fraction * Rational(total);
  doc.bound_met = Rational(satisfied) >= doc.certified;
}

int requested_colors_max(const Request& request) {
  std::map<Vertex, int> count;
  int best = 1;
  for (const auto& e : request.entries()) {
    if (e.weight > 0) best = std::max(best, ++count[e.vertex]);
  }
  return best;
}

void run_maxdeg(ResultDocument& doc, const Instance& inst, const SolveOptions& options, bool weighted) {
  maxdeg::SolverOptions opts;
  opts.mode = mode_or(options, weighted ? ColoringMode::Greedy : ColoringMode::Brooks);
  opts.extension.node_budget = options.budget;
  if (!weighted && inst.request.kind() != RequestKind::Unweighted) {
    throw PreconditionError("method maxdeg needs an unweighted request; use maxdeg-weighted");
  }
  auto out = weighted ? maxdeg::solve_weighted(inst.graph, inst.lists, inst.request, opts)
                      : maxdeg::solve_unweighted(inst.graph, inst.lists, inst.request, opts);
  doc.coloring = out.coloring;
  doc.satisfied = out.satisfied;
  doc.total = out.total;
  doc.certified_fraction = out.certified_fraction;
  doc.certified = out.certified_amount;
  doc.bound_met = out.bound_met();
  doc.note = out.derivation;
  doc.trace.emplace_back("mode", to_string(out.trace.mode));
  doc.trace.emplace_back("colors-used", std::to_string(out.trace.colors_used));
  doc.trace.emplace_back("independent", join(out.trace.independent));
  std::vector<Vertex> moved;
  for (const auto& m : out.trace.moves) moved.push_back(m.vertex);
  doc.trace.emplace_back("released", join(moved));
  doc.trace.emplace_back("kept", join(out.trace.kept));
  doc.trace.emplace_back("initial-bad-components", std::to_string(out.trace.initial_bad_components));
}

void run_family(ResultDocument& doc, const Instance& inst, bool lambda, const SolveOptions& options) {
  if (!inst.ktree) throw PreconditionError("method needs a ktree line");
  treewidth::ColoringFamily family;
  Rational fraction;
  if (lambda) {
    if (!inst.lambda) throw PreconditionError("method lambda needs lambda lines");
    family = treewidth::lambda_family(inst.graph, *inst.ktree, *inst.lambda, inst.lists, options.budget);
    fraction = Rational(1, inst.ktree->width + 1);
  } else {
    family = treewidth::two_tree_family(inst.graph, *inst.ktree, inst.lists);
    fraction = Rational(1, 3);
  }
  inst.request.validate(inst.lists);
  auto best = treewidth::best_of_family(inst.graph, inst.lists, family, inst.request);
  doc.coloring = family.members[best.index];
  fill_common(doc, best.satisfied, inst.request.total_weight(), fraction);
  doc.note = "each list color appears at its vertex in " + std::to_string(family.multiplicity) + " of " +
             std::to_string(family.size()) + " colorings; the best member reaches the average";
  doc.trace.emplace_back("family-size", std::to_string(family.size()));
  doc.trace.emplace_back("multiplicity", std::to_string(family.multiplicity));
  doc.trace.emplace_back("member", std::to_string(best.index));
  if (!doc.bound_met) throw InternalError("best family member is below the average");
}

void run_treedepth(ResultDocument& doc, const Instance& inst, const SolveOptions& options) {
  if (!inst.forest) throw PreconditionError("method treedepth needs a treedepth line");
  treedepth::TdInstance td{inst.graph, *inst.forest, inst.forest_height, inst.lists};
  const int k = inst.forest_height;
  Request request = inst.request;
  Rational fraction(1, k);
  doc.note = "every requested color is drawn with probability >= 1/" + std::to_string(k);
  if (request.kind() == RequestKind::Weighted) {
    const int spread = requested_colors_max(request);
    request = reduce_to_unique(request);
    fraction = Rational(1, k * spread);
    doc.note += "; keeping one heaviest color per vertex loses at most a factor " + std::to_string(spread);
  }
  Coloring coloring = treedepth::derandomized_coloring(td, request, options.budget);
  Weight satisfied = satisfied_amount(inst.graph, inst.lists, coloring, inst.request);
  doc.coloring = coloring;
  fill_common(doc, satisfied, inst.request.total_weight(), fraction);
  doc.trace.emplace_back("height", std::to_string(k));
  doc.trace.emplace_back("expected", to_string(treedepth::expected_satisfied_weight(td, request, options.budget)));
  if (!doc.bound_met) throw InternalError("derandomized coloring is below the certified amount");
}

void run_degeneracy(ResultDocument& doc, const Instance& inst, const SolveOptions& options) {
  degeneracy::PipelineOptions opts;
  opts.mode = mode_or(options, ColoringMode::Greedy);
  auto domain = inst.request.domain();
  auto out = degeneracy::flexible_degeneracy_order(inst.graph, domain, opts);
  doc.ordering = out.ordering.order;
  doc.ordering_bound = out.ordering.bound;
  doc.first = out.ordering.first;
  doc.satisfied = out.first_requested;
  doc.total = static_cast<Weight>(domain.size());
  doc.certified_fraction = out.certified_fraction;
  doc.certified = out.certified_amount;
  doc.bound_met = out.bound_met();
  doc.note = out.derivation;
  const auto& t = out.trace;
  doc.trace.emplace_back("low-vertex", std::to_string(t.low_vertex));
  doc.trace.emplace_back("independent", join(t.independent));
  doc.trace.emplace_back("spanning", join(t.spanning));
  doc.trace.emplace_back("leaves", join(t.leaves));
  doc.trace.emplace_back("hypergraph", std::to_string(t.hyper_vertices) + " " + std::to_string(t.hyper_edges));
}

Rational method_floor(const std::string& method, const Instance& inst) {
  const Graph& g = inst.graph;
  const std::int64_t d = g.max_degree();
  const std::int64_t max_list = std::max(1, inst.lists.max_list_size());
  if (method == "maxdeg") return Rational(1, 6 * (d + 1));
  if (method == "maxdeg-weighted") return Rational(1, 2 * d * d * d * max_list);
  if (method == "two-tree") return Rational(1, 3);
  if (method == "lambda") return Rational(1, inst.ktree ? inst.ktree->width + 1 : 1);
  if (method == "treedepth") {
    const std::int64_t k = std::max(1, inst.forest_height);
    return inst.request.kind() == RequestKind::Weighted ? Rational(1, k * max_list) : Rational(1, k);
  }
  if (method == "degeneracy") return degeneracy::epsilon(std::max<int>(2, d)) / Rational(2 * (d + 1) * (d + 1));
  throw PreconditionError("unknown method '" + method + "'");
}

}  // namespace

std::vector<std::string> method_names() {
  return {"maxdeg", "maxdeg-weighted", "two-tree", "lambda", "treedepth", "degeneracy"};
}

ResultDocument solve_instance(const std::string& method, const Instance& inst, const SolveOptions& options) {
  ResultDocument doc;
  doc.method = method;
  try {
    if (method == "maxdeg") {
      run_maxdeg(doc, inst, options, false);
    } else if (method == "maxdeg-weighted") {
      run_maxdeg(doc, inst, options, true);
    } else if (method == "two-tree") {
      run_family(doc, inst, false, options);
    } else if (method == "lambda") {
      run_family(doc, inst, true, options);
    } else if (method == "treedepth") {
      run_treedepth(doc, inst, options);
    } else if (method == "degeneracy") {
      run_degeneracy(doc, inst, options);
    } else {
      throw PreconditionError("unknown method '" + method + "'");
    }
  } catch (const Error& e) {
    ResultDocument failed;
    failed.method = method;
    failed.ok = false;
    failed.reason = e.reason();
    failed.message = e.what();
    return failed;
  }
  return doc;
}

std::string serialize_result(const ResultDocument& doc) {
  std::string out = "flexicolor-result 1\nmethod " + doc.method + "\n";
  if (!doc.ok) {
    out += "status error\nreason " + doc.reason + "\nmessage " + doc.message + "\n";
    return out;
  }
  out += "status ok\n";
  if (doc.coloring) out += "coloring " + join(*doc.coloring) + "\n";
  if (doc.ordering) {
    out += "ordering-bound " + std::to_string(doc.ordering_bound) + "\n";
    out += "ordering " + join(*doc.ordering) + "\n";
    out += "first " + join(doc.first) + "\n";
  }
  out += "satisfied " + std::to_string(doc.satisfied) + "\n";
  out += "total " + std::to_string(doc.total) + "\n";
  out += "certified-fraction " + to_string(doc.certified_fraction) + "\n";
  out += "certified " + to_string(doc.certified) + "\n";
  out += std::string("bound-met ") + (doc.bound_met ? "yes" : "no") + "\n";
  if (!doc.note.empty()) out += "note " + doc.note + "\n";
  for (const auto& [key, value] : doc.trace) out += "trace " + key + (value.empty() ? "" : " " + value) + "\n";
  return out;
}

ResultDocument parse_result(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  ResultDocument doc;
  int number = 0;
  bool header = false;
  auto rest_of = [](const std::string& line, const std::string& key) {
    return line.size() > key.size() ? line.substr(key.size() + 1) : std::string();
  };
  auto ints = [&](const std::string& values, const std::string& field) {
    std::vector<int> out;
    std::istringstream vs(values);
    for (std::string tok; vs >> tok;) {
      int v = 0;
      auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || end != tok.data() + tok.size()) {
        throw ParseError("line " + std::to_string(number) + ": field '" + field + "': not an integer: '" + tok + "'");
      }
      out.push_back(v);
    }
    return out;
  };
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw[0] == '#') continue;
    const std::string key = raw.substr(0, raw.find(' '));
    const std::string rest = rest_of(raw, key);
    if (!header) {
      if (raw != "flexicolor-result 1") throw ParseError("line " + std::to_string(number) + ": expected 'flexicolor-result 1'");
      header = true;
    } else if (key == "method") {
      doc.method = rest;
    } else if (key == "status") {
      if (rest != "ok" && rest != "error") throw ParseError("line " + std::to_string(number) + ": field 'status': " + rest);
      doc.ok = rest == "ok";
    } else if (key == "reason") {
      doc.reason = rest;
    } else if (key == "message") {
      doc.message = rest;
    } else if (key == "coloring") {
      doc.coloring = ints(rest, key);
    } else if (key == "ordering-bound") {
      doc.ordering_bound = ints(rest, key).at(0);
    } else if (key == "ordering") {
      doc.ordering = ints(rest, key);
    } else if (key == "first") {
      doc.first = ints(rest, key);
    } else if (key == "satisfied" || key == "total") {
      auto v = ints(rest, key);
      if (v.size() != 1) throw ParseError("line " + std::to_string(number) + ": field '" + key + "': one value");
      (key == "satisfied" ? doc.satisfied : doc.total) = v[0];
    } else if (key == "certified-fraction") {
      doc.certified_fraction = parse_rational(rest, key);
    } else if (key == "certified") {
      doc.certified = parse_rational(rest, key);
    } else if (key == "bound-met") {
      if (rest != "yes" && rest != "no") throw ParseError("line " + std::to_string(number) + ": field 'bound-met'");
      doc.bound_met = rest == "yes";
    } else if (key == "note") {
      doc.note = rest;
    } else if (key == "trace") {
      auto space = rest.find(' ');
      doc.trace.emplace_back(rest.substr(0, space), space == std::string::npos ? "" : rest.substr(space + 1));
    } else {
      throw ParseError("line " + std::to_string(number) + ": field '" + key + "': unknown key");
    }
  }
  if (!header) throw ParseError("line 1: expected 'flexicolor-result 1'");
  if (doc.method.empty()) throw ParseError("field 'method': missing");
  return doc;
}

std::vector<std::string> verify_result(const Instance& inst, const ResultDocument& doc) {
  std::vector<std::string> problems;
  if (!doc.ok) {
    problems.push_back("result reports " + doc.reason + ": " + doc.message);
    return problems;
  }
  const Graph& g = inst.graph;
  Weight satisfied = 0, total = 0;
  if (doc.method == "degeneracy") {
    if (!doc.ordering) return {"degeneracy result has no ordering"};
    degeneracy::DegeneracyOrdering ordering{*doc.ordering, g.max_degree() - 1, doc.first};
    if (doc.ordering_bound != ordering.bound) problems.push_back("ordering bound is not maxdeg - 1");
    if (auto bad = degeneracy::check_ordering(g, ordering)) problems.push_back(*bad);
    auto domain = inst.request.domain();
    for (Vertex v : doc.first) satisfied += std::binary_search(domain.begin(), domain.end(), v);
    total = static_cast<Weight>(domain.size());
  } else {
    if (!doc.coloring) return {"result has no coloring"};
    try {
      check_list_coloring(g, inst.lists, *doc.coloring);
      satisfied = satisfied_amount(g, inst.lists, *doc.coloring, inst.request);
    } catch (const Error& e) {
      problems.push_back(e.what());
      return problems;
    }
    total = inst.request.total_weight();
  }
  if (satisfied != doc.satisfied) {
    problems.push_back("satisfied is " + std::to_string(satisfied) + ", document says " + std::to_string(doc.satisfied));
  }
  if (total != doc.total) {
    problems.push_back("total is " + std::to_string(total) + ", document says " + std::to_string(doc.total));
  }
  if (doc.certified != doc.certified_fraction * Rational(total)) problems.push_back("certified != fraction * total");
  try {
    Rational floor = method_floor(doc.method, inst);
    if (doc.certified_fraction < floor) {
      problems.push_back("certified fraction " + to_string(doc.certified_fraction) + " is below the guaranteed " +
                         to_string(floor));
    }
  } catch (const Error& e) {
    problems.push_back(e.what());
  }
  const bool met = Rational(satisfied) >= doc.certified;
  if (met != doc.bound_met) problems.push_back("bound-met flag disagrees with the amounts");
  if (!met) problems.push_back("satisfied amount is below the certified amount");
  return problems;
}

int exit_code(const ResultDocument& doc) {
  if (doc.ok) return doc.bound_met ? 0 : 1;
  if (doc.reason == "parse") return 2;
  if (doc.reason == "precondition") return 3;
  if (doc.reason == "budget") return 5;
  return 4;
}

}  // namespace flexicolor::io
