#include "mpgeom/halfint.hpp"

#include <cmath>

namespace mpg {

HalfInt HalfInt::from_double(double value) {
  const double twice = 2.0 * value;
  const double rounded = std::round(twice);
  if (!std::isfinite(value) || std::abs(twice - rounded) > 1e-9 ||
      std::abs(rounded) > 1e6)
    throw std::invalid_argument("not a half-integer: " + std::to_string(value));
  return HalfInt(static_cast<int>(rounded));
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

int parity_sign(HalfInt x) {
  if (!x.is_integer())
    throw std::invalid_argument("(-1)^x needs integer x, got " + x.str());
  return (x.as_int() % 2 == 0) ? 1 : -1;
}

} // namespace mpg
