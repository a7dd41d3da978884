#pragma once

#include <stdexcept>
#include <string>

namespace zf {

// Graph family parameters outside the range a construction is defined for.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An operation required an input that is not a zero forcing set.
class NotForcingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The exact search refused to exceed its closure-evaluation budget.
// lower_bound() is the smallest size not yet ruled out, i.e. Z(G) >= lower_bound().
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(int lower_bound, unsigned long long spent, unsigned long long budget)
      : std::runtime_error("closure budget of " + std::to_string(budget) +
                           " evaluations would be exceeded; Z >= " +
                           std::to_string(lower_bound) + " after " + std::to_string(spent) +
                           " evaluations"),
        lower_bound_(lower_bound) {}
  int lower_bound() const { return lower_bound_; }

 private:
  int lower_bound_;
};

}  // namespace zf
