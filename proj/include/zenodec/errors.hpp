#pragma once

#include <stdexcept>
#include <string>

namespace zenodec {

// Bad or unphysical input: non-finite values, wrong signs, degenerate
// transitions, malformed files. The CLI maps these to exit status 3.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure during evaluation: overflow, NaN, violated stability
// bound. The CLI maps these to exit status 4.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zenodec
