#pragma once

#include <stdexcept>
#include <string>

namespace redwords {

// Input text could not be parsed; position() is the 0-based offset of the
// offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position + 1)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// An enumeration would exceed the configured ceiling; count_text() reports
// the exact count that triggered the refusal.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, std::string count_text)
      : std::runtime_error(what + " (count " + count_text + ")"),
        count_text_(std::move(count_text)) {}

  const std::string& count_text() const { return count_text_; }

 private:
  std::string count_text_;
};

// A scan parameter exceeds the configured budget.
class BudgetError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation produced a state that a verified theorem rules out.  Either
// the theorem fails or the implementation is wrong; both must abort loudly.
class TheoremViolation : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace redwords
