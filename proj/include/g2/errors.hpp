#pragma once

#include <stdexcept>
#include <string>

namespace g2 {

// Expected failure on caller-supplied data: singular matrix, point outside the
// big cell, non-prime p, malformed selector. The CLI maps these to exit code 2.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Broken internal invariant: a certified zero pattern failing to hold, an
// exponent overflow, a table lookup that cannot miss. Never caused by input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace g2
