#pragma once

#include <vector>

#include "hypermetric/disk.hpp"

namespace hypermetric::poly {

/// Dense complex polynomials as ascending coefficient vectors.

std::vector<Complex> multiply(const std::vector<Complex>& a, const std::vector<Complex>& b);
std::vector<Complex> derivative(const std::vector<Complex>& a);
Complex evaluate(const std::vector<Complex>& a, Complex z);

/// Drops trailing coefficients below `rel_tol` times the largest magnitude.
void trim(std::vector<Complex>& a, double rel_tol = 1e-13);

/// All roots via the companion-matrix eigenvalues, each polished by a few
/// guarded Newton steps.
std::vector<Complex> roots(std::vector<Complex> coeffs);

}  // namespace hypermetric::poly
