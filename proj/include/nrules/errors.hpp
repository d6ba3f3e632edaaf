#pragma once

#include <stdexcept>
#include <string>

namespace nrules {

// Malformed input data: unknown symbols, missing fields, duplicate subsystems.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Value outside its mathematical domain (negative mass, zero total modulus).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// An operation that would break one of the four rules (e.g. spawning from a
// ready component).
class RuleViolationError : public std::runtime_error {
 public:
  explicit RuleViolationError(const std::string& what) : std::runtime_error(what) {}
};

// dt too coarse for the requested per-step hit probability.
class StepSizeError : public std::runtime_error {
 public:
  explicit StepSizeError(const std::string& what) : std::runtime_error(what) {}
};

// Scenario file problems, with a 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nrules
