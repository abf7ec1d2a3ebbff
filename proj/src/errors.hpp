#pragma once

#include <stdexcept>
#include <string>

namespace mmagic {

/// (n, m) fails the admissibility arithmetic, or a generator precondition.
struct InadmissibleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A produced label fell outside (0,1] (or [-1,0) on the negative channel).
/// Signals a scale too coarse for the requested instance; never repaired.
struct LabelRangeError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Arithmetic or comparison attempted across different scale exponents.
struct ScaleMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed decimal string or labeling document.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Oracle search space exceeds the configured bounds.
struct SearchBoundError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace mmagic
