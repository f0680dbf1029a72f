#pragma once

#include "pmg/scalar.hpp"

#include <string>
#include <vector>

namespace pmg {

/// The invariants of one pm-graph. `length` is the total edge length.
template <class S>
struct InvariantSet {
  S length{0};
  long g = 0;
  long gbar = 0;
  S tau{0};
  S theta{0};
  S epsilon{0};
  S phi{0};
  S lambda{0};
  S z{0};
};

template <class S>
bool operator==(const InvariantSet<S>& a, const InvariantSet<S>& b) {
  return a.length == b.length && a.g == b.g && a.gbar == b.gbar && a.tau == b.tau && a.theta == b.theta &&
         a.epsilon == b.epsilon && a.phi == b.phi && a.lambda == b.lambda && a.z == b.z;
}

}  // namespace pmg
