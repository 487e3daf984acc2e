#pragma once

#include <array>
#include <vector>

#include "polyadp/poly.hpp"

namespace polyadp {

/// E[w^k] for a scalar Gaussian, via the moment recursion
/// M_k = mean*M_{k-1} + (k-1)*stddev^2*M_{k-2}, M_0 = 1.
double gaussian_moment(int k, double mean, double stddev);

/// Componentwise-independent Gaussian noise.
struct NoiseSpec {
  int dim = 0;
  std::vector<double> mean;
  std::vector<double> stddev;

  static NoiseSpec unit_gaussian(int dim);
  static NoiseSpec none() { return NoiseSpec{}; }

  double moment(int component, int k) const;
  void validate() const;
};

/// Applies E_w termwise: every noise exponent pattern is replaced by the
/// product of per-component moments. The result carries an empty noise block.
Polynomial expect_noise(const Polynomial& p, const NoiseSpec& noise);

/// State-relevance weight: a box plus an optional polynomial density
/// (uniform when the density is unset). The density is normalized internally
/// so the weight integrates to 1 over the box.
struct WeightSpec {
  std::vector<std::array<double, 2>> box;  // per state dimension [lo, hi]
  Polynomial density;                      // over the state block; zero => uniform

  static WeightSpec uniform(std::vector<std::array<double, 2>> box);
  bool is_uniform() const { return density.is_zero(); }
  int dim() const { return static_cast<int>(box.size()); }
  void validate() const;
};

/// Integral of a monomial x^e over the box (no weight, no normalization).
double box_monomial_integral(const Exponents& state_exps,
                             const std::vector<std::array<double, 2>>& box);

/// Exact normalized integral  (1/Z) * Int_box c(x) p(x) dx  with
/// Z = Int_box c(x) dx, via the per-dimension antiderivative formula.
double box_integral(const Polynomial& p, const WeightSpec& weight);

}  // namespace polyadp
