#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rainbow {

// Precondition on a numeric or structural argument was violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed coloring file. `line()` is 1-based, 0 when not attributable.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An exhaustive routine would exceed its configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::string size)
      : std::runtime_error(what + " (size " + size + ")"), size_(std::move(size)) {}
  const std::string& size() const { return size_; }

 private:
  std::string size_;
};

}  // namespace rainbow
