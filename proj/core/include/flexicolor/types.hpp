#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace flexicolor {

using Vertex = int;
using Color = int;
using Weight = std::int64_t;
using Rational = boost::rational<std::int64_t>;
using Edge = std::pair<Vertex, Vertex>;

/// Total vertex -> color mapping, indexed by vertex id.
using Coloring = std::vector<Color>;

inline constexpr Color kNoColor = -1;

/// Base for every error the library raises. `reason()` is a short stable
/// token suitable for machine consumption (CLI exit documents).
class Error : public std::runtime_error {
 public:
  Error(std::string reason, const std::string& message)
      : std::runtime_error(message), reason_(std::move(reason)) {}
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

/// Input violates an operation's precondition.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message) : Error("precondition", message) {}
};

/// A coloring is improper or uses an off-list color.
class InvalidColoring : public Error {
 public:
  explicit InvalidColoring(const std::string& message) : Error("invalid-coloring", message) {}
};

/// An exhaustive routine would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& message) : Error("budget", message) {}
};

/// A guarantee that a theorem certifies failed to hold. Never expected.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message) : Error("internal", message) {}
};

/// Malformed instance or result document.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("parse", message) {}
};

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace flexicolor
