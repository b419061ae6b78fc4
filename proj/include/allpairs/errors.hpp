#pragma once

#include <stdexcept>
#include <string>

namespace allpairs {

struct NonConservingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SectorTooLargeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularChannelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyTableError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct VolumeMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace allpairs
