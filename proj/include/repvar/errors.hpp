#pragma once

#include <stdexcept>
#include <string>

namespace repvar {

// An enumeration or search refused to continue past its configured cap.
// Pipelines surface this as "undecided" / "refused", never as a silent
// truncation of results.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Specialization of a generic presentation kept degenerating past the retry
// budget (prime too small or an unlucky explicit assignment).
struct SpecializeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Algebra or layering text that does not parse; carries the position.
struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) +
                           ", column " + std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

}  // namespace repvar
