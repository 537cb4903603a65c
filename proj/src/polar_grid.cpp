#include "hypermetric/polar_grid.hpp"

#include <cmath>

namespace hypermetric {

PolarGrid::PolarGrid(std::vector<double> radii, int n_angles)
    : radii_(std::move(radii)), n_angles_(n_angles) {
  if (radii_.empty() || n_angles_ < 4)
    throw contract_error("PolarGrid: need at least one ring and four angles");
  double prev = 0.0;
  for (double r : radii_) {
    if (!(r > prev)) throw contract_error("PolarGrid: radii must be strictly increasing from 0");
    prev = r;
  }
  dtheta_ = 2.0 * 3.14159265358979323846 / n_angles_;
}

PolarGrid PolarGrid::uniform(double r_max, int n_radii, int n_angles) {
  if (!(r_max > 0.0)) throw contract_error("PolarGrid: r_max must be positive");
  std::vector<double> radii(n_radii);
  for (int i = 1; i <= n_radii; ++i) radii[i - 1] = r_max * i / n_radii;
  radii.back() = r_max;
  return PolarGrid(std::move(radii), n_angles);
}

Complex PolarGrid::point(int node) const {
  if (node == 0) return Complex(0.0, 0.0);
  const int ring = (node - 1) / n_angles_;
  const int j = (node - 1) % n_angles_;
  return std::polar(radii_[ring], dtheta_ * j);
}

void GridField::require_finite(const char* who) const {
  for (int i = 0; i < values.size(); ++i)
    if (!std::isfinite(values[i]))
      throw contract_error(std::string(who) + ": non-finite field value at node " + std::to_string(i));
}

double GridField::interpolate(Complex z) const {
  const PolarGrid& g = *grid;
  const double r = std::abs(z);
  if (r > g.r_max() + 1e-12)
    throw contract_error("GridField::interpolate: point outside the grid");
  constexpr double two_pi = 2.0 * 3.14159265358979323846;
  double th = std::arg(z);
  if (th < 0) th += two_pi;
  const double tj = th / g.dtheta();
  int j0 = static_cast<int>(std::floor(tj));
  const double wt = tj - j0;
  j0 %= g.n_angles();
  const int j1 = (j0 + 1) % g.n_angles();

  const auto& radii = g.radii();
  // locate radial interval; ring 0 means between axis and first ring
  int i1 = static_cast<int>(std::lower_bound(radii.begin(), radii.end(), r) - radii.begin());
  if (i1 >= g.n_radii()) i1 = g.n_radii() - 1;
  const double r_hi = radii[i1];
  const double r_lo = i1 == 0 ? 0.0 : radii[i1 - 1];
  const double wr = (r_hi == r_lo) ? 1.0 : (r - r_lo) / (r_hi - r_lo);

  const double v_hi = (1.0 - wt) * values[g.index(i1 + 1, j0)] + wt * values[g.index(i1 + 1, j1)];
  const double v_lo = (i1 == 0)
                          ? values[0]
                          : (1.0 - wt) * values[g.index(i1, j0)] + wt * values[g.index(i1, j1)];
  return (1.0 - wr) * v_lo + wr * v_hi;
}

}  // namespace hypermetric
