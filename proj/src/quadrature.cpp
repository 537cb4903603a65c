#include "hypermetric/quadrature.hpp"

#include <cmath>

namespace hypermetric {

namespace {
constexpr double kPi = 3.14159265358979323846;

void push_ring(QuadratureRule& rule, double r, double radial_weight, int n_angular) {
  const double dth = 2.0 * kPi / n_angular;
  for (int j = 0; j < n_angular; ++j) {
    rule.nodes.push_back(std::polar(r, dth * j));
    rule.weights.push_back(radial_weight * r * dth);
  }
}
}  // namespace

// Deterministic pairwise reduction in node-index order.
double pairwise_sum(const double* a, size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) s += a[i];
    return s;
  }
  const size_t half = n / 2;
  return pairwise_sum(a, half) + pairwise_sum(a + half, n - half);
}

QuadratureRule QuadratureRule::disk_area(double radius, int n_radial, int n_angular) {
  if (!(radius > 0.0) || n_radial < 1 || n_angular < 4)
    throw contract_error("disk_area: bad rule parameters");
  QuadratureRule rule;
  rule.kind = Kind::area;
  rule.radius = radius;
  rule.nodes.reserve(static_cast<size_t>(n_radial) * n_angular);
  rule.weights.reserve(static_cast<size_t>(n_radial) * n_angular);
  const double h = radius / n_radial;
  for (int i = 0; i < n_radial; ++i) push_ring(rule, (i + 0.5) * h, h, n_angular);
  return rule;
}

QuadratureRule QuadratureRule::disk_area_graded(double radius, int base_nodes, int annuli,
                                                int per_annulus, int n_angular) {
  if (!(radius > 0.0) || base_nodes < 1 || annuli < 1 || per_annulus < 1 || n_angular < 4)
    throw contract_error("disk_area_graded: bad rule parameters");
  QuadratureRule rule;
  rule.kind = Kind::area;
  rule.radius = radius;
  const double half = radius / 2;
  const double hb = half / base_nodes;
  for (int i = 0; i < base_nodes; ++i) push_ring(rule, (i + 0.5) * hb, hb, n_angular);
  // dyadic annuli [radius(1-2^-j), radius(1-2^-j-1)]
  for (int j = 1; j <= annuli; ++j) {
    const double a = radius * (1.0 - std::ldexp(1.0, -j));
    const double w = radius * std::ldexp(1.0, -j - 1);
    const double h = w / per_annulus;
    for (int i = 0; i < per_annulus; ++i) push_ring(rule, a + (i + 0.5) * h, h, n_angular);
  }
  return rule;
}

QuadratureRule QuadratureRule::circle(double r, int n) {
  if (!(r > 0.0) || n < 4) throw contract_error("circle rule: bad parameters");
  QuadratureRule rule;
  rule.kind = Kind::circle;
  rule.radius = r;
  const double dth = 2.0 * kPi / n;
  for (int j = 0; j < n; ++j) {
    rule.nodes.push_back(std::polar(r, dth * j));
    rule.weights.push_back(dth);
  }
  return rule;
}

void QuadratureRule::validate(double tol) const {
  for (double w : weights)
    if (!(w > 0.0)) throw contract_error("QuadratureRule: nonpositive weight");
  const double sum = pairwise_sum(weights.data(), weights.size());
  const double expect = kind == Kind::area ? kPi * radius * radius : 2.0 * kPi;
  // the graded area rules drop an exponentially small rim sliver, allow for it
  const double slack = kind == Kind::area ? expect - sum : std::abs(expect - sum);
  if (!(slack >= -tol && slack <= std::max(tol, 1e-6 * expect)))
    throw contract_error("QuadratureRule: weights do not sum to the region measure");
}

double area_integrate(const std::function<double(Complex)>& f, const QuadratureRule& rule) {
  std::vector<double> terms(rule.nodes.size());
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double v = f(rule.nodes[i]);
    if (!std::isfinite(v))
      throw numeric_error("area_integrate: non-finite sample at node (" +
                          std::to_string(rule.nodes[i].real()) + ", " +
                          std::to_string(rule.nodes[i].imag()) + ")");
    terms[i] = rule.weights[i] * v;
  }
  return pairwise_sum(terms.data(), terms.size());
}

double circle_integrate(const std::function<double(Complex)>& f, double r, int n) {
  if (!(r > 0.0 && r < 1.0)) throw contract_error("circle_integrate: need 0 < r < 1");
  const double dth = 2.0 * kPi / n;
  std::vector<double> terms(n);
  for (int j = 0; j < n; ++j) {
    const Complex z = std::polar(r, dth * j);
    const double v = f(z);
    if (!std::isfinite(v))
      throw numeric_error("circle_integrate: non-finite sample at angle " + std::to_string(dth * j));
    terms[j] = v;
  }
  return pairwise_sum(terms.data(), terms.size()) * dth;
}

}  // namespace hypermetric
