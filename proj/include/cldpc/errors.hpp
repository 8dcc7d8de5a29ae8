#pragma once

#include <stdexcept>
#include <string>

namespace cldpc {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Greedy/scan searches report exhaustion as a value, not an exception; this
// is only for genuinely broken call sequences.
struct SearchError : std::runtime_error {
  explicit SearchError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cldpc
