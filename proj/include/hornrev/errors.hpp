#ifndef HORNREV_ERRORS_HPP
#define HORNREV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hornrev {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax or well-formedness problem in an input text; line is 1-based,
// 0 when no position applies.
struct ParseError : Error {
  ParseError(const std::string& msg, int line_no)
      : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg
                          : msg),
        line(line_no) {}
  int line;
};

// An enumeration would exceed the configured budget.
struct BudgetError : Error {
  using Error::Error;
};

// An operation that requires an acyclic program met a cycle / cut-off branch.
struct CycleError : Error {
  using Error::Error;
};

}  // namespace hornrev

#endif
