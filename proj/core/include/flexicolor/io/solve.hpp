#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flexicolor/coloring.hpp"
#include "flexicolor/io/instance.hpp"

namespace flexicolor::io {

/// Outcome of one solver run, as written by the CLI.
struct ResultDocument {
  std::string method;
  bool ok = true;
  std::string reason;   // error token when !ok
  std::string message;  // error text when !ok
  std::optional<Coloring> coloring;
  std::optional<std::vector<Vertex>> ordering;
  int ordering_bound = 0;
  std::vector<Vertex> first;
  Weight satisfied = 0;
  Weight total = 0;
  Rational certified_fraction{0};
  Rational certified{0};
  bool bound_met = false;
  std::string note;
  std::vector<std::pair<std::string, std::string>> trace;
};

std::string serialize_result(const ResultDocument& doc);
ResultDocument parse_result(const std::string& text);

struct SolveOptions {
  /// Coloring used to pick independent requests; each method has a default.
  std::optional<ColoringMode> mode;
  std::int64_t budget = 10'000'000;
};

/// Methods accepted by solve_instance.
std::vector<std::string> method_names();

/// Runs one method. Library errors are captured into a document with
/// ok = false and the error's reason token.
ResultDocument solve_instance(const std::string& method, const Instance& instance, const SolveOptions& options);

/// Re-checks a result against its instance without calling any solver:
/// the coloring or ordering, the satisfied amount, the certified amount and
/// the method's guaranteed fraction. Empty when everything holds.
std::vector<std::string> verify_result(const Instance& instance, const ResultDocument& doc);

/// Process exit status for a document: 0 bound met, 1 bound missed,
/// 3 precondition, 4 internal or invalid coloring, 5 budget.
int exit_code(const ResultDocument& doc);

}  // namespace flexicolor::io
