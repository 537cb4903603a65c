#include "hypermetric/disk.hpp"

#include <cmath>

namespace hypermetric {

std::vector<Complex> stolz_sample(Complex zeta, double delta, int count, double alpha) {
  constexpr double pi = 3.14159265358979323846;
  if (!(delta > 0.0 && delta < pi / 2))
    throw contract_error("stolz_sample: aperture delta must lie in (0, pi/2)");
  if (!(alpha >= pi / 2 + delta - 1e-12 && alpha <= 3 * pi / 2 - delta + 1e-12))
    throw contract_error("stolz_sample: ray angle outside the Stolz wedge");
  if (std::abs(std::abs(zeta) - 1.0) > 1e-14)
    throw contract_error("stolz_sample: zeta must lie on the unit circle");
  std::vector<Complex> out;
  out.reserve(count);
  const Complex dir = std::polar(1.0, alpha);
  for (int k = 1; k <= count; ++k) {
    const double r = std::ldexp(1.0, -k);  // 2^-k
    out.push_back(zeta * (1.0 + r * dir));
  }
  return out;
}

bool in_stolz_region(Complex zeta, double delta, Complex z) {
  constexpr double pi = 3.14159265358979323846;
  const Complex w = z / zeta - 1.0;
  if (std::abs(w) == 0.0) return false;
  const double a = std::arg(w) < 0 ? std::arg(w) + 2 * pi : std::arg(w);
  return std::norm(z) < 1.0 && a >= pi / 2 + delta - 1e-12 && a <= 3 * pi / 2 - delta + 1e-12;
}

}  // namespace hypermetric
