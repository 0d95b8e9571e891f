#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alg {

// Malformed textual input (graph6, edge lists, signed edge lists).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// An exact search was asked to run past its configured size limit.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(std::string stage, std::size_t value, std::size_t limit)
      : std::runtime_error(stage + ": size " + std::to_string(value) +
                           " exceeds limit " + std::to_string(limit)),
        stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

// Floating point disagreement or failed convergence.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact search ran past its wall-clock deadline.
class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace alg
