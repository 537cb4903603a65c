#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hypermetric/disk.hpp"

namespace hypermetric {

/// Finite list of (point, multiplicity) pairs with pairwise distinct points
/// strictly inside the disk.  Serves both as zero sets and critical sets.
struct MultiplicitySequence {
  struct Entry {
    Complex point;
    int multiplicity = 1;
  };
  std::vector<Entry> entries;

  MultiplicitySequence() = default;
  MultiplicitySequence(std::initializer_list<Entry> e) : entries(e) { validate(); }

  /// Total count n = sum of multiplicities.
  int total() const;
  bool empty() const { return entries.empty(); }
  void validate() const;

  /// Flattened list with each point repeated per its multiplicity.
  std::vector<Complex> flatten() const;

  /// Clusters a flat root list into (point, multiplicity) pairs, merging
  /// points within the given pseudohyperbolic radius.
  static MultiplicitySequence cluster(const std::vector<Complex>& roots,
                                      double pseudohyperbolic_radius = 1e-6);
};

/// Pseudohyperbolic distance |z - w| / |1 - conj(w) z|.
double pseudohyperbolic(Complex z, Complex w);

/// Finite Blaschke product: unimodular rotation times automorphism factors
///   B(z) = eta * prod_j [ (conj(a_j)/|a_j|) (a_j - z)/(1 - conj(a_j) z) ]^{m_j},
/// with the factor z (not -z) for a zero at the origin.
class FiniteBlaschke {
public:
  FiniteBlaschke() = default;

  /// Product of automorphism factors over the zero sequence, times rotation.
  /// An empty sequence yields the constant `rotation`; such a product is
  /// degenerate (not a self-map with zeros) and is flagged by degree() == 0.
  static FiniteBlaschke from_zeros(const MultiplicitySequence& zeros, Complex rotation = 1.0);

  /// Value and derivative by running (P, P') product accumulation; exact at
  /// zeros and on the boundary circle.
  std::pair<Complex, Complex> evaluate(Complex z) const;
  Complex value(Complex z) const { return evaluate(z).first; }
  Complex derivative(Complex z) const { return evaluate(z).second; }

  int degree() const;
  bool degenerate() const { return zeros_.empty(); }
  const MultiplicitySequence& zeros() const { return zeros_; }
  Complex rotation() const { return rotation_; }

  /// Zeros of B' inside the disk, with multiplicity; a product of degree m
  /// has exactly m-1 of them.  Roots come from the numerator polynomial of
  /// B' via its companion matrix, polished by Newton steps.
  MultiplicitySequence critical_points() const;

  /// Coefficients (ascending) of numerator N and denominator D with B = eta N/D.
  void rational_form(std::vector<Complex>& num, std::vector<Complex>& den) const;

  /// Solutions of B(z) = w inside the disk (|w| < 1 gives degree() of them).
  std::vector<Complex> disk_preimages(Complex w) const;

private:
  Complex rotation_{1.0, 0.0};
  MultiplicitySequence zeros_;
};

/// Partial sums of sum_j (1 - |z_j|) up to the horizon, with an advisory
/// trend verdict from the ratio of the last two dyadic tail blocks.
struct BlaschkeSumReport {
  double partial = 0.0;
  enum class Verdict { convergent_so_far, divergent_trend } verdict = Verdict::convergent_so_far;
  int horizon = 0;
};
BlaschkeSumReport blaschke_sum(const std::function<Complex(int)>& points, int horizon);

/// Winding number of t -> map(r e^{it}) about 0, i.e. the number of zeros in
/// |z| < r.  For a finite Blaschke product and r close to 1 this is the degree.
int degree_by_winding(const std::function<Complex(Complex)>& map, double r, int samples = 4096);
int degree_by_winding(const FiniteBlaschke& b, double r);

/// Newton/homotopy solution of the inverse problem: the unique (after the
/// normalization below) finite Blaschke product F of degree n+1 whose
/// critical set equals C, where n is the total multiplicity of C.
/// Normalization: F(0) = 0 and the first nonzero Taylor coefficient at 0 is
/// positive real.
struct InversionOptions {
  double tol = 1e-12;            // Newton residual tolerance on matched critical points
  int max_iterations = 60;
  int homotopy_steps = 16;
  double fd_step = 1e-6;         // Jacobian finite-difference step
  double conditioning_radius = 0.995;  // |z_j| beyond this draws a warning
};
struct InversionReport {
  double residual = 0.0;         // max pseudohyperbolic mismatch of critical points
  int newton_iterations = 0;
  bool used_homotopy = false;
  bool conditioning_warning = false;
};
FiniteBlaschke from_critical_points(const MultiplicitySequence& critical,
                                    const InversionOptions& opts = {},
                                    InversionReport* report = nullptr);

}  // namespace hypermetric
