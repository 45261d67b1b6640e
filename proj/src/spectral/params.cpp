#include "bsq/params.hpp"

#include <cmath>
#include <string>

#include "bsq/errors.hpp"

namespace bsq {

void PhysParams::validate() const {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw RangeError("alpha must be finite and >= 0, got " + std::to_string(alpha));
  }
  if (!std::isfinite(bruntN) || bruntN <= 0.0) {
    throw RangeError("bruntN must be finite and > 0, got " + std::to_string(bruntN));
  }
}

}  // namespace bsq
