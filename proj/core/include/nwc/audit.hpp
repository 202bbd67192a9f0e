#pragma once

// Executable experiments: the no-go deficit for s = 0, 1/2, 1, ..., the Dirac
// positive control, and the manifest-covariance witness. Every numeric claim
// carries an error bar taken from the spread between quadrature refinement
// levels; an inequality claim requires 100x separation from that bar.

#include <optional>
#include <random>
#include <vector>

#include "nwc/operators.hpp"

namespace nwc {

struct AuditOptions {
  std::vector<int> levels = {16, 24};  // nodes per axis, coarse to fine
  double gate_tol = 1e-8;              // norm agreement between levels
  double separation_required = 100.0;
};

/// Quadrature rule adapted to a Gaussian packet, optionally to its boosted
/// image (center mapped through the boost, widths inflated by the Doppler
/// factor along the boost direction).
QuadratureRule rule_for_packet(const GaussianPacket& packet, int nodes_per_axis);
QuadratureRule rule_for_boosted_packet(const GaussianPacket& packet,
                                       const Eigen::Vector3d& beta0,
                                       int nodes_per_axis);

struct AuditReport {
  double spin = 0.0;
  std::string packet_desc;
  std::string quadrature_desc;
  double lhs = 0.0;      // sum_i <i[K_i, J_i(0)]>, finest level
  double rhs = 0.0;      // 3 <J^0(0)>
  double deficit = 0.0;  // lhs - rhs
  std::vector<double> deficit_by_level;
  double errbar = 0.0;      // |deficit(fine) - deficit(coarse)|, floored
  double separation = 0.0;  // |deficit| / errbar
  bool has_analytic = false;
  double analytic_deficit = 0.0;
  double analytic_rel_err = 0.0;
  double gate_defect = 0.0;
  bool conclusive = false;
  double wall_seconds = 0.0;
};

/// Commutator-engine deficit for one amplitude on a fixed set of rules.
/// `analytic` is an independently computed expectation of the closed-form
/// deficit kernel minus 3 J^0, when one exists.
AuditReport nogo_engine(Spin s, const AmplitudePtr& psi,
                        const std::vector<QuadratureRule>& rules,
                        std::optional<double> analytic, const AuditOptions& opt);

/// Full no-go run for a Gaussian packet. For radial packets with s in
/// {0, 1/2} the analytic side is computed with the reduced (r_a, r_b, cos)
/// rule, an independent oracle for the commutator engine.
AuditReport run_nogo(Spin s, const std::shared_ptr<const GaussianPacket>& packet,
                     const AuditOptions& opt = {});

/// Reduced-rule expectation of the closed-form deficit-minus-3J0 kernel for a
/// radial Gaussian packet (exposed for tests).
double analytic_deficit_reduced(Spin s, const GaussianPacket& packet,
                                int n_radial = 80, int n_angular = 40);

struct DiracControlReport {
  Eigen::Matrix3d second_set;      // <i[K_i, J_D^j(0)]>
  double j0 = 0.0;                 // <J^0_D(0)>
  Eigen::Vector3d first_set_comm;  // <i[K_i, J^0_D(0)]>
  Eigen::Vector3d ji;              // <J_D^i(0)>
  double max_rel_second = 0.0;     // vs delta_ij j0, in units of j0
  double max_rel_first = 0.0;      // vs <J_D^i>, in units of j0
  double gate_defect = 0.0;
  double wall_seconds = 0.0;

  bool pass(double tol) const {
    return max_rel_second <= tol && max_rel_first <= tol;
  }
};

/// Positive control: both commutator sets for the Dirac current, on the
/// packet itself or on its boosted image when beta0 is nonzero.
DiracControlReport run_dirac_control(
    const std::shared_ptr<const GaussianPacket>& packet,
    const Eigen::Vector3d& beta0 = Eigen::Vector3d::Zero(),
    int nodes_per_axis = 16);

/// Numeric deficits across spins for a fixed radial width (highest-weight
/// spin state, packet at rest).
std::vector<AuditReport> run_general_spin_sweep(const std::vector<Spin>& spins,
                                                double sigma,
                                                const AuditOptions& opt = {});

struct WitnessReport {
  double max_rel_violation = 0.0;   // off-diagonal momentum pairs
  double diag_rel_violation = 0.0;  // p_a = p_b control, ~0
  int samples = 0;
};

/// Evaluates the manifestly non-covariant bracket
///   (1/2){ sqrt(w_b/w_a) p_a^mu + sqrt(w_a/w_b) p_b^mu }
/// on random momentum pairs and their boosted images; diagnostic only.
WitnessReport manifest_covariance_witness(const Eigen::Vector3d& beta0,
                                          int samples, std::mt19937_64& rng);

struct ScalingReport {
  std::vector<double> sigmas;
  std::vector<double> relative_deficits;  // |deficit| / |rhs|
  double slope_lsq = 0.0;   // plain log-log least-squares fit
  double slope = 0.0;       // pairwise slopes extrapolated to sigma -> 0
  std::vector<AuditReport> reports;
};

/// Narrow-packet scaling of the relative deficit (expected slope 2).
ScalingReport fit_deficit_scaling(Spin s, const std::vector<double>& sigmas,
                                  const AuditOptions& opt = {});

}  // namespace nwc
