#pragma once

#include <stdexcept>
#include <string>

namespace rigidlab {

// Malformed or out-of-contract input. The CLI maps this to a nonzero exit.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A truncation parameter is too small for the requested build.
class CapacityError : public std::runtime_error {
public:
  CapacityError(std::size_t level, const std::string& what)
      : std::runtime_error("level " + std::to_string(level) + ": " + what), level_(level) {}
  std::size_t level() const noexcept { return level_; }

private:
  std::size_t level_;
};

// The level-by-level tree extraction found no admissible child for a node.
class ExtractionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace rigidlab
