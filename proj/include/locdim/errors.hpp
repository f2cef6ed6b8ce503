#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locdim {

// graph6 text that cannot be decoded; offset points at the offending byte.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// An operation was called on input outside its contract (disconnected graph,
// order too small, clique number too large, bad vertex index, ...).
class InputContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Graph order beyond what the graph6 short format (and this library) handles.
class UnsupportedSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The exact packing search ran past its node budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive search was asked for a graph above the configured order cap.
class OracleCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction step could not be carried out as prescribed. Carries the
// step trace accumulated so far, serialized as JSON.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(const std::string& what, std::string trace_json)
      : std::runtime_error(what), trace_json_(std::move(trace_json)) {}
  const std::string& trace_json() const { return trace_json_; }

 private:
  std::string trace_json_;
};

}  // namespace locdim
