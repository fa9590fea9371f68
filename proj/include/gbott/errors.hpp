#pragma once
// Error types shared across the library.

#include <stdexcept>
#include <string>

namespace gbott {

// Input whose block dependency pattern is cyclic, so no block permutation
// can bring it to upper-triangular form.
struct NotTriangulable : std::runtime_error {
  explicit NotTriangulable(const std::string& what) : std::runtime_error(what) {}
};

struct NotOrientable : std::runtime_error {
  explicit NotOrientable(const std::string& what) : std::runtime_error(what) {}
};

struct NotRealBott : std::runtime_error {
  explicit NotRealBott(const std::string& what) : std::runtime_error(what) {}
};

// Two independent routes to the same quantity disagreed.  Always a bug,
// never a property of the input.
struct OracleMismatch : std::logic_error {
  explicit OracleMismatch(const std::string& what) : std::logic_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gbott
