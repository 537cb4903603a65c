#pragma once

#include <Eigen/Core>
#include <vector>

#include "hypermetric/disk.hpp"

namespace hypermetric {

/// Tensor polar grid on the disk |z| <= R_max with a single axis node at the
/// origin.  Radii are strictly increasing with radii.back() == R_max; that
/// outermost ring is the Dirichlet ring and is excluded from the interior
/// node set.  Angles are uniform on [0, 2pi).
///
/// Node layout for fields: index 0 is the axis node, then ring-major order
/// 1 + (i-1)*n_angles + j for ring i (1-based over radii) and angle j.
class PolarGrid {
public:
  PolarGrid(std::vector<double> radii, int n_angles);

  /// Uniform radial spacing R_max/n_radii.
  static PolarGrid uniform(double r_max, int n_radii, int n_angles);

  const std::vector<double>& radii() const { return radii_; }
  int n_radii() const { return static_cast<int>(radii_.size()); }
  int n_angles() const { return n_angles_; }
  double r_max() const { return radii_.back(); }
  double angle(int j) const { return dtheta_ * j; }
  double dtheta() const { return dtheta_; }

  /// Total number of stored nodes (axis + all rings including the Dirichlet ring).
  int node_count() const { return 1 + n_radii() * n_angles_; }
  /// Nodes excluding the Dirichlet ring.
  int interior_count() const { return 1 + (n_radii() - 1) * n_angles_; }

  int index(int ring, int j) const { return 1 + (ring - 1) * n_angles_ + j; }
  Complex point(int node) const;
  double radius_of(int node) const { return node == 0 ? 0.0 : radii_[(node - 1) / n_angles_]; }

  /// Ring number (1-based) of a node; 0 for the axis.
  int ring_of(int node) const { return node == 0 ? 0 : 1 + (node - 1) / n_angles_; }
  int angle_of(int node) const { return node == 0 ? 0 : (node - 1) % n_angles_; }

private:
  std::vector<double> radii_;
  int n_angles_;
  double dtheta_;
};

/// Real scalar field sampled on a PolarGrid.  Values must stay finite; the
/// check is enforced where fields cross module boundaries.
struct GridField {
  const PolarGrid* grid = nullptr;
  Eigen::ArrayXd values;

  GridField() = default;
  GridField(const PolarGrid& g, double fill = 0.0)
      : grid(&g), values(Eigen::ArrayXd::Constant(g.node_count(), fill)) {}

  double& operator[](int node) { return values[node]; }
  double operator[](int node) const { return values[node]; }

  void require_finite(const char* who) const;

  /// Bilinear interpolation in (r, theta) with periodic wrap in theta.
  /// Inside the first ring the radial interpolation uses the axis value.
  double interpolate(Complex z) const;
};

}  // namespace hypermetric
