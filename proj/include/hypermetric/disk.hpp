#pragma once

#include <complex>
#include <vector>

#include "hypermetric/errors.hpp"

namespace hypermetric {

using Complex = std::complex<double>;

/// Point of the open unit disk (or a tagged boundary sample).
/// Plain complex numbers are used throughout; helpers below enforce the
/// domain contracts where an operation requires them.
using DiskPoint = Complex;

inline double abs_sq(Complex z) { return std::norm(z); }

/// 1 - |z|^2, the defining weight of the disk geometry.
inline double one_minus_sq(Complex z) { return 1.0 - std::norm(z); }

inline void require_interior(Complex z, const char* who) {
  if (!(std::norm(z) < 1.0))
    throw contract_error(std::string(who) + ": point not in the open unit disk");
}

inline void require_closed_disk(Complex z, const char* who) {
  if (std::norm(z) > 1.0 + 1e-12)
    throw contract_error(std::string(who) + ": point outside the closed unit disk");
}

/// Disk automorphism factor z |-> (a - z)/(1 - conj(a) z).
/// Maps the disk onto itself, circles |z|=1 to themselves, and swaps 0 <-> a.
inline Complex mobius_automorphism(Complex a, Complex z) {
  require_interior(a, "mobius_automorphism");
  require_closed_disk(z, "mobius_automorphism");
  const Complex den = 1.0 - std::conj(a) * z;
  if (std::abs(den) < 1e-300)
    throw numeric_error("mobius_automorphism: degenerate denominator");
  return (a - z) / den;
}

/// Derivative of the automorphism factor: (|a|^2 - 1)/(1 - conj(a) z)^2.
inline Complex mobius_automorphism_derivative(Complex a, Complex z) {
  const Complex den = 1.0 - std::conj(a) * z;
  if (std::abs(den) < 1e-300)
    throw numeric_error("mobius_automorphism_derivative: degenerate denominator");
  return (std::norm(a) - 1.0) / (den * den);
}

/// Density of the hyperbolic metric of curvature -4: 1/(1-|z|^2).
inline double poincare_density(Complex z) {
  if (!(std::norm(z) < 1.0))
    throw contract_error("poincare_density: |z| >= 1");
  return 1.0 / one_minus_sq(z);
}

/// Green's function of the unit disk: log|1 - conj(xi) z| - log|z - xi|.
inline double green_function_unit_disk(Complex z, Complex xi) {
  require_interior(z, "green_function_unit_disk");
  require_interior(xi, "green_function_unit_disk");
  const double sep = std::abs(z - xi);
  if (sep < 1e-14)
    throw numeric_error("green_function_unit_disk: evaluation at the diagonal singularity");
  return std::log(std::abs(1.0 - std::conj(xi) * z)) - std::log(sep);
}

/// Green's function of the disk |w - center| < radius, by conformal scaling
/// of the unit-disk kernel.
inline double green_function_disk(Complex center, double radius, Complex z, Complex xi) {
  if (!(radius > 0.0))
    throw contract_error("green_function_disk: radius must be positive");
  return green_function_unit_disk((z - center) / radius, (xi - center) / radius);
}

/// Points approaching the boundary point zeta inside the Stolz region
/// S_delta(zeta) = zeta * {1 + r e^{i alpha} : alpha in [pi/2+delta, 3pi/2-delta]}.
/// The ray angle alpha defaults to pi (radial approach); radii decrease
/// geometrically, r_k = 2^{-k} for k = 1..count.
std::vector<Complex> stolz_sample(Complex zeta, double delta, int count,
                                  double alpha = 3.14159265358979323846);

/// Membership test for the Stolz region: |zeta - z| <= (1-|z|)/sin(delta) up
/// to the curvature correction of the region wedge.
bool in_stolz_region(Complex zeta, double delta, Complex z);

}  // namespace hypermetric
