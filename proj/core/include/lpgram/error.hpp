#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpgram {

// Search gave up because the configured expansion budget ran out.  Distinct
// from a negative verdict: callers that hit this know nothing about the input.
class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace lpgram
