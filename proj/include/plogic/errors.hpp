#pragma once

#include <stdexcept>
#include <string>

namespace plogic {

// A formula mentions a variable the assignment does not cover.
class MissingVariable : public std::runtime_error {
 public:
  explicit MissingVariable(char name)
      : std::runtime_error(std::string("no value assigned to variable '") + name + "'"),
        name_(name) {}

  char name() const noexcept { return name_; }

 private:
  char name_;
};

// Enumeration guard: a table or diff over too many free variables.
class TooManyVariables : public std::runtime_error {
 public:
  TooManyVariables(std::size_t count, std::size_t limit)
      : std::runtime_error("formula has " + std::to_string(count) +
                           " free variables, limit is " + std::to_string(limit)),
        count_(count),
        limit_(limit) {}

  std::size_t count() const noexcept { return count_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t count_;
  std::size_t limit_;
};

// An operator symbol with no semantics in the requested evaluation mode.
// The parser is generic over operator tables, the evaluators are not.
class UnknownConnective : public std::runtime_error {
 public:
  explicit UnknownConnective(char symbol)
      : std::runtime_error(std::string("no semantics defined for operator '") + symbol + "'"),
        symbol_(symbol) {}

  char symbol() const noexcept { return symbol_; }

 private:
  char symbol_;
};

}  // namespace plogic
