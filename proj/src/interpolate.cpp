#include "cpold/interpolate.hpp"

#include <set>
#include <string>

#include "cpold/error.hpp"

namespace cpold {

UniPoly interpolate(const std::vector<SamplePoint>& points, int degree_bound) {
  if (degree_bound < 0) throw Error(ErrorKind::invalid_input, "negative degree bound");
  const auto needed = static_cast<std::size_t>(degree_bound) + 1;
  if (points.size() < needed)
    throw Error(ErrorKind::invalid_input, "interpolation needs at least degree_bound+1 points");
  std::set<long> seen;
  for (const auto& p : points)
    if (!seen.insert(p.abscissa).second)
      throw Error(ErrorKind::invalid_input, "duplicate abscissa " + std::to_string(p.abscissa));

  // Newton divided differences on the first `needed` points.
  std::vector<Rational> dd(needed);
  for (std::size_t i = 0; i < needed; ++i) dd[i] = points[i].value;
  for (std::size_t level = 1; level < needed; ++level) {
    for (std::size_t i = needed - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i].abscissa - points[i - level].abscissa);
      if (i == level) break;
    }
  }
  UniPoly result;
  for (std::size_t i = needed; i-- > 0;) {
    result *= UniPoly::linear_root(Rational(points[i].abscissa));
    result += UniPoly(dd[i]);
  }

  for (std::size_t i = needed; i < points.size(); ++i) {
    if (result.evaluate(Rational(points[i].abscissa)) != points[i].value)
      throw Error(ErrorKind::inconsistent_data,
                  "sample at " + std::to_string(points[i].abscissa) + " is off the interpolating polynomial");
  }
  return result;
}

}  // namespace cpold
