#pragma once

#include <stdexcept>
#include <string>

namespace unfolding {

// Thrown when a computation would exceed a configured materialization or
// enumeration limit (piece length, automaton configuration count, ...).
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace unfolding
