#pragma once

// The boost generator as a differential-matrix operator, kernel-valued
// currents (candidate and Dirac), kernel application by quadrature and
// commutator expectations.
//
// Expectation convention: <psi|O|psi> = integral d^3p_a d^3p_b
//   sum_{ma mb} Psi*_{ma}(p_a) K(p_a,ma; p_b,mb) Psi_{mb}(p_b),
// with every measure factor (including the 1/(2pi)^3) folded into K.

#include <array>
#include <functional>

#include "nwc/wavepacket.hpp"

namespace nwc {

/// Two-point operator kernel K(p_a, m_a; p_b, m_b).
struct KernelOperator {
  using PointFn =
      std::function<complexd(const Eigen::Vector3d&, int, const Eigen::Vector3d&, int)>;
  /// Fills out(ma, mb) for one momentum pair; hoists work shared across the
  /// (2s+1)^2 spin entries out of the pointwise path.
  using BlockFn = std::function<void(const Eigen::Vector3d&, const Eigen::Vector3d&,
                                     Eigen::MatrixXcd&)>;

  Spin s;
  bool hermitian = false;
  PointFn k;
  BlockFn block;  // optional fast path; k remains authoritative

  complexd operator()(const Eigen::Vector3d& pa, int ma, const Eigen::Vector3d& pb,
                      int mb) const {
    return k(pa, ma, pb, mb);
  }
};

/// Candidate probability density at the origin: K = delta_{ma mb}/(2pi)^3.
KernelOperator candidate_j0_kernel(Spin s);

/// Candidate spatial current, component `axis`:
///   (1/(2pi)^3) { (beta_a + beta_b)_i/2 delta + i [S_i(p_a) - S_i(p_b)] },
/// with S_i(p) = (J x p)_i / (omega + m).
KernelOperator candidate_j_spatial_kernel(Spin s, int axis);

/// Dirac current kernel (s = 1/2 only):
///   (1/(2pi)^3) (omega_a omega_b)^{-1/2} e^{i(p_a-p_b).x}
///   ubar(p_a,m_a) gamma^mu u(p_b,m_b),
/// in units m = q = 1.
KernelOperator dirac_current_kernel(const FourVector& x, int mu);

/// Closed-form kernel of i sum_i [K_i, J_i(0)]: the bracket
///   3 - |beta_a - beta_b|^2/4            (s = 0)
///   ... - |p_a/(omega_a+m) - p_b/(omega_b+m)|^2/2   (s = 1/2)
/// times delta_{ma mb}/(2pi)^3. Throws std::domain_error for other s
/// (numeric path only).
KernelOperator deficit_kernel(Spin s);

/// Boost generator component K_i acting on an amplitude:
///   (K_i Psi)(p) = -(i/2)(2 omega d_i + beta_i) Psi + S_i(p) Psi.
/// Uses the analytic gradient when the amplitude has one, otherwise the
/// Richardson central-difference fallback.
AmplitudePtr boost_generator_apply(AmplitudePtr psi, int axis);
std::array<AmplitudePtr, 3> boost_generator_apply_all(AmplitudePtr psi);

/// Result of applying a kernel operator to an amplitude: values are held on
/// the quadrature nodes; evaluation at other momenta contracts on demand.
class KernelApplied final : public MomentumAmplitude {
 public:
  KernelApplied(KernelOperator op, AmplitudePtr psi, const QuadratureRule& q);

  Eigen::VectorXcd eval(const Eigen::Vector3d& p) const override;
  const Eigen::VectorXcd& value_at_node(std::size_t k) const { return values_[k]; }
  const QuadratureRule& rule() const { return rule_; }
  std::string family() const override { return "kernel-applied"; }

 private:
  Eigen::VectorXcd contract(const Eigen::Vector3d& pa) const;

  KernelOperator op_;
  QuadratureRule rule_;
  std::vector<Eigen::VectorXcd> src_;  // weight * Psi at nodes
  std::vector<Eigen::VectorXcd> values_;
};

/// (O psi) on the rule's nodes; O(N^2 (2s+1)^2) contraction, parallel over
/// output nodes with a serial inner sum (bit-stable for any thread count).
std::shared_ptr<const KernelApplied> apply_kernel(const KernelOperator& op,
                                                  AmplitudePtr psi,
                                                  const QuadratureRule& q);

/// <psi|O|psi> on the rule.
complexd kernel_expectation(const KernelOperator& op, const AmplitudePtr& psi,
                            const QuadratureRule& q);

/// <psi| i[K_axis, O] |psi> = -2 Im <K_axis psi | O psi>; real because both
/// operators are Hermitian.
double commutator_expectation(int axis, const KernelOperator& op,
                              const AmplitudePtr& psi, const QuadratureRule& q);

}  // namespace nwc
