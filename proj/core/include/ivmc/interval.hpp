#pragma once

#include <algorithm>
#include <cstdint>

namespace ivmc {

// Closed interval with integer endpoints. Touching endpoints count as
// intersecting; all layout code keeps gaps >= 1 where disjointness is meant.
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool operator==(const Interval&) const = default;
  std::int64_t width() const { return hi - lo; }
};

inline bool intersects(const Interval& a, const Interval& b) {
  return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
}

}  // namespace ivmc
