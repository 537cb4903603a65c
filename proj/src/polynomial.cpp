#include "hypermetric/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace hypermetric::poly {

std::vector<Complex> multiply(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Complex> out(a.size() + b.size() - 1, Complex(0, 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Complex> derivative(const std::vector<Complex>& a) {
  if (a.size() <= 1) return {Complex(0, 0)};
  std::vector<Complex> out(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * static_cast<double>(i);
  return out;
}

Complex evaluate(const std::vector<Complex>& a, Complex z) {
  Complex acc(0, 0);
  for (size_t i = a.size(); i-- > 0;) acc = acc * z + a[i];
  return acc;
}

void trim(std::vector<Complex>& a, double rel_tol) {
  double maxc = 0.0;
  for (const Complex& c : a) maxc = std::max(maxc, std::abs(c));
  while (a.size() > 1 && std::abs(a.back()) <= rel_tol * maxc) a.pop_back();
}

std::vector<Complex> roots(std::vector<Complex> coeffs) {
  trim(coeffs);
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg <= 0) return {};
  if (deg == 1) return {-coeffs[0] / coeffs[1]};

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[i] / coeffs[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw numeric_error("polynomial roots: eigensolver failed");

  const auto dcoeffs = derivative(coeffs);
  std::vector<Complex> out(deg);
  for (int i = 0; i < deg; ++i) {
    Complex r = solver.eigenvalues()[i];
    double best = std::abs(evaluate(coeffs, r));
    for (int step = 0; step < 3; ++step) {
      const Complex dp = evaluate(dcoeffs, r);
      if (std::abs(dp) < 1e-300) break;
      const Complex cand = r - evaluate(coeffs, r) / dp;
      const double v = std::abs(evaluate(coeffs, cand));
      if (v >= best) break;
      r = cand;
      best = v;
    }
    out[i] = r;
  }
  return out;
}

}  // namespace hypermetric::poly
