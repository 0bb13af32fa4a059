#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace a2i {

using Vertex = int;

/// Failure categories shared by every module. The CLI maps these onto exit codes.
enum class Errc {
  InvalidArgument,
  AlphaTooLarge,
  AlphaMismatch,
  NotCliquePartition,
  D1NotMaximum,
  InducedC4Present,
  HallViolation,
  TriangleInSource,
  GammaTargetNotFound,
  NotWindow,
  WitnessInconsistency,
  NotMinimal,
  Complete,
  Claim1Violation,
  SelectionInfeasible,
  MissingCrossEdge,
  EdgeCollision,
  NotSubset,
  InternalAssertion,
};

std::string_view to_string(Errc code);

/// Exception carrying a category and, where meaningful, a vertex witness
/// (Hall violator set, induced C4, offending vertex, ...).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::vector<Vertex> witness = {})
      : std::runtime_error(what), code_(code), witness_(std::move(witness)) {}

  Errc code() const noexcept { return code_; }
  const std::vector<Vertex>& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::vector<Vertex> witness_;
};

enum class ParseErrc { Malformed, OutOfRange, SelfLoop, DuplicateEdge };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrc kind, std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  ParseErrc kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrc kind_;
  std::size_t line_;
};

// Throws InternalAssertion; used where a proof step guarantees the condition.
inline void ensure(bool cond, const char* what, std::vector<Vertex> witness = {}) {
  if (!cond) throw Error(Errc::InternalAssertion, what, std::move(witness));
}

}  // namespace a2i
