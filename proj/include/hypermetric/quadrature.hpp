#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hypermetric/disk.hpp"

namespace hypermetric {

/// Nodes-and-weights rule for integrating over a disk (area measure) or over
/// a circle (arclength in the angle, i.e. weights sum to 2*pi*r... in dt).
struct QuadratureRule {
  enum class Kind { area, circle };

  Kind kind = Kind::area;
  double radius = 1.0;  // disk radius for area rules, circle radius otherwise
  std::vector<Complex> nodes;
  std::vector<double> weights;

  /// Midpoint-in-r x trapezoid-in-theta area rule on |z| < radius.
  static QuadratureRule disk_area(double radius, int n_radial, int n_angular);

  /// Area rule whose radial nodes refine geometrically toward r = radius:
  /// a uniform base on [0, radius/2] followed by `annuli` dyadic annuli with
  /// `per_annulus` midpoint nodes each.  Intended for integrands whose only
  /// growth at the rim is tamed by a (1-|z|^2)-type weight.
  static QuadratureRule disk_area_graded(double radius, int base_nodes, int annuli,
                                         int per_annulus, int n_angular);

  /// Uniform angular samples of the circle |z| = r; weights are the trapezoid
  /// weights for dt, summing to 2*pi.
  static QuadratureRule circle(double r, int n);

  /// Checks the weight-sum invariant (pi R^2 for area, 2 pi for circle-in-dt).
  void validate(double tol = 1e-12) const;
};

/// Weighted sum of f over the rule nodes.  A non-finite sample aborts with a
/// message naming the offending node.
double area_integrate(const std::function<double(Complex)>& f, const QuadratureRule& rule);

/// Trapezoid sum of f(r e^{it}) dt over [0, 2pi); spectrally accurate for
/// integrands smooth on the circle.
double circle_integrate(const std::function<double(Complex)>& f, double r, int n);

/// Deterministic pairwise reduction in index order.
double pairwise_sum(const double* a, size_t n);

}  // namespace hypermetric
