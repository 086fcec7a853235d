#pragma once

#include <stdexcept>
#include <string>

namespace thinbase {

// Precondition violations throw std::invalid_argument. A construction whose
// parameters are legal but which cannot be realized (no usable prime, blocks
// that collapse, too few survivors) throws InfeasibleError instead, so callers
// can tell "bad input" from "no object exists at this size".
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace thinbase
