#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rbh {

enum class Errc {
  invalid_edge,
  same_part_edge,
  invalid_parameter,
  enumeration_too_large,
  parse_error,
  convergence_failure,
  invalid_partition,
  same_part_violation,
  invalid_pair,
  family_size_mismatch,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_edge: return "InvalidEdge";
    case Errc::same_part_edge: return "SamePartEdge";
    case Errc::invalid_parameter: return "InvalidParameter";
    case Errc::enumeration_too_large: return "EnumerationTooLarge";
    case Errc::parse_error: return "ParseError";
    case Errc::convergence_failure: return "ConvergenceFailure";
    case Errc::invalid_partition: return "InvalidPartition";
    case Errc::same_part_violation: return "SamePartViolation";
    case Errc::invalid_pair: return "InvalidPair";
    case Errc::family_size_mismatch: return "FamilySizeMismatch";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// line is 1-based
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(double residual, std::size_t iterations)
      : Error(Errc::convergence_failure, "residual " + std::to_string(residual) + " after " +
                                             std::to_string(iterations) + " iterations"),
        residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace rbh
