#pragma once

#include <utility>
#include <vector>

#include "cpold/rational.hpp"
#include "cpold/unipoly.hpp"

namespace cpold {

struct SamplePoint {
  long abscissa;
  Rational value;
};

/// The unique polynomial of degree <= degree_bound through the first
/// degree_bound+1 points. Every further point is checked against it and a
/// mismatch raises ErrorKind::inconsistent_data.
UniPoly interpolate(const std::vector<SamplePoint>& points, int degree_bound);

}  // namespace cpold
