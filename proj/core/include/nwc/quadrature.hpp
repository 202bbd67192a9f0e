#pragma once

// Quadrature rules for momentum-space integrals: a tensor Gauss-Hermite rule
// scaled to a packet (the workhorse) and a reduced (r_a, r_b, cos theta) rule
// for rotationally invariant two-point kernels against radial profiles.

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "nwc/lorentz.hpp"

namespace nwc {

/// One-dimensional rule for integrals over the real line / an interval.
struct Rule1D {
  std::vector<double> x;
  std::vector<double> w;
};

/// Gauss-Hermite nodes/weights for weight exp(-x^2) (Golub-Welsch).
Rule1D gauss_hermite(int n);
/// Gauss-Legendre nodes/weights on [-1, 1].
Rule1D gauss_legendre(int n);

/// Nodes p_k and weights W_k approximating integral d^3p f(p) for integrands
/// concentrated around `center` with per-axis scale `sigma`. The Hermite
/// weight is folded back into W_k, so plain sums of W_k f(p_k) are integrals.
struct QuadratureRule {
  std::vector<Eigen::Vector3d> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  static QuadratureRule gauss_hermite3(const Eigen::Vector3d& center,
                                       const Eigen::Vector3d& sigma,
                                       int nodes_per_axis);
};

/// Reduced rule for integrals
///   integral d^3p_a d^3p_b f(|p_a|) K(r_a, r_b, cos) f(|p_b|)
/// with K rotationally invariant and f a real radial profile:
///   8 pi^2 int r_a^2 dr_a int r_b^2 dr_b int_{-1}^{1} dcos f K f.
/// Radial integrals over [0, inf) by the rational map r = scale (1+t)/(1-t).
struct ReducedTwoPointRule {
  Rule1D radial;   // mapped nodes r, weights including r^2 dr jacobian
  Rule1D angular;  // cos theta on [-1, 1]

  static ReducedTwoPointRule make(int n_radial, int n_angular, double scale);

  double integrate(const std::function<double(double, double, double)>& kernel,
                   const std::function<double(double)>& radial_profile) const;
};

}  // namespace nwc
