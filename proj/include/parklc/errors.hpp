#ifndef PARKLC_ERRORS_HPP
#define PARKLC_ERRORS_HPP

#include <stdexcept>

namespace parklc {

// An exhaustive computation was asked for an instance beyond its size cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace parklc

#endif  // PARKLC_ERRORS_HPP
