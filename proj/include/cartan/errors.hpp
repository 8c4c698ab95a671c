#ifndef CARTAN_ERRORS_HPP
#define CARTAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cartan {

/// Invalid argument to a library operation (bad rank, index out of range, ...).
struct parameter_error : std::invalid_argument {
  explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Operation not defined for the given input class (e.g. tableau counts
/// outside type A).
struct unsupported_error : std::invalid_argument {
  explicit unsupported_error(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal exactness check failed (non-integral quotient, broken
/// invariant).  Signals a bug, not bad user input.
struct consistency_error : std::logic_error {
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

/// Input is structurally degenerate (rank-deficient family, kernel of
/// unexpected dimension).
struct degenerate_input_error : std::runtime_error {
  explicit degenerate_input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A constructive search ran out of candidates.  For the witness searches in
/// this library exhaustion would contradict a proved statement, so callers
/// treat it as fatal.
struct search_exhausted_error : std::runtime_error {
  explicit search_exhausted_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cartan

#endif
