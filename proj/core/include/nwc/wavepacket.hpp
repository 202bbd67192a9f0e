#pragma once

// Momentum-spin amplitudes Psi_m(p), their Poincare / inversion transforms,
// scalar products, expectations and Newton-Wigner position amplitudes.
//
// Amplitudes are closed-form callables: a boost evaluates the transformed
// amplitude exactly at any requested momentum, grids appear only inside
// quadrature rules.

#include <memory>
#include <string>

#include "nwc/quadrature.hpp"
#include "nwc/spin.hpp"

namespace nwc {

class MomentumAmplitude {
 public:
  virtual ~MomentumAmplitude() = default;

  Spin spin() const { return s_; }
  int dim() const { return s_.dim(); }

  /// All 2s+1 components at spatial momentum p, ordered m = s ... -s.
  virtual Eigen::VectorXcd eval(const Eigen::Vector3d& p) const = 0;

  virtual bool has_gradient() const { return false; }
  /// d Psi / d p_axis; only valid when has_gradient().
  virtual Eigen::VectorXcd gradient(const Eigen::Vector3d& p, int axis) const;

  virtual std::string family() const { return "generic"; }

 protected:
  explicit MomentumAmplitude(Spin s) : s_(s) {}

 private:
  Spin s_;
};

using AmplitudePtr = std::shared_ptr<const MomentumAmplitude>;

/// Analytic gradient when available, otherwise central differences with one
/// Richardson extrapolation, step h = max(1e-5, 1e-5 |p|).
Eigen::VectorXcd gradient_or_fd(const MomentumAmplitude& psi,
                                const Eigen::Vector3d& p, int axis);

/// Normalized Gaussian packet
///   Psi_m(p) = c_m prod_i (2 pi sigma_i^2)^{-1/4}
///              exp(-(p_i - p0_i)^2 / (4 sigma_i^2)) exp(-i p . x0),
/// with exact closed-form normalization and analytic gradient.
class GaussianPacket final : public MomentumAmplitude {
 public:
  GaussianPacket(Spin s, const Eigen::Vector3d& p0, const Eigen::Vector3d& sigma,
                 Eigen::VectorXcd spin_weights,
                 const Eigen::Vector3d& x0 = Eigen::Vector3d::Zero());

  Eigen::VectorXcd eval(const Eigen::Vector3d& p) const override;
  bool has_gradient() const override { return true; }
  Eigen::VectorXcd gradient(const Eigen::Vector3d& p, int axis) const override;
  std::string family() const override { return "gaussian"; }

  const Eigen::Vector3d& center() const { return p0_; }
  const Eigen::Vector3d& width() const { return sigma_; }
  const Eigen::VectorXcd& spin_weights() const { return c_; }
  bool is_radial() const;

 private:
  Eigen::Vector3d p0_, sigma_, x0_;
  Eigen::VectorXcd c_;  // normalized so sum |c_m|^2 = 1
  double norm_const_;
};

// --- Poincare and inversion transforms (Eq.-level contracts in the tests) --

AmplitudePtr translate(AmplitudePtr psi, const FourVector& a);
AmplitudePtr rotate(AmplitudePtr psi, const SpinorMap& R);
/// Pure boost with velocity beta0, |beta0| < 1.
AmplitudePtr boost(AmplitudePtr psi, const Eigen::Vector3d& beta0);
AmplitudePtr parity(AmplitudePtr psi, double eta = 1.0);
/// Antiunitary; phase (-1)^{s+m} with an m -> -m flip and conjugation.
AmplitudePtr time_reversal(AmplitudePtr psi);

// --- Quadrature-backed functionals --------------------------------------

/// integral d^3p sum_m phi_m^*(p) psi_m(p). Throws on mismatched spin.
complexd inner_product(const MomentumAmplitude& phi, const MomentumAmplitude& psi,
                       const QuadratureRule& q);

double norm_squared(const MomentumAmplitude& psi, const QuadratureRule& q);

FourVector expectation_four_momentum(const MomentumAmplitude& psi,
                                     const QuadratureRule& q);
double expectation_sz(const MomentumAmplitude& psi, const QuadratureRule& q);

/// Newton-Wigner position amplitude at fixed time t:
///   psi_m(t, x) = (2 pi)^{-3/2} integral d^3p Psi_m(p) e^{-i(omega t - p.x)},
/// realized as the quadrature sum over the rule's nodes.
class PositionAmplitude {
 public:
  PositionAmplitude(const MomentumAmplitude& psi, double t,
                    const QuadratureRule& q);

  Eigen::VectorXcd eval(const Eigen::Vector3d& x) const;
  complexd eval(const Eigen::Vector3d& x, int m_index) const {
    return eval(x)[m_index];
  }
  double density(const Eigen::Vector3d& x) const {
    return eval(x).squaredNorm();
  }
  int dim() const { return dim_; }

 private:
  double t_;
  int dim_;
  std::vector<Eigen::Vector3d> nodes_;
  std::vector<double> omega_;
  std::vector<Eigen::VectorXcd> wpsi_;  // weight * Psi(p_k)
};

/// Convergence gate: the packet norm on two refinement levels must agree
/// within tol and sit near 1. Returns |n1 - n2|.
double quadrature_gate_defect(const MomentumAmplitude& psi,
                              const QuadratureRule& coarse,
                              const QuadratureRule& fine);

}  // namespace nwc
