#pragma once

// Four-vector algebra, proper orthochronous Lorentz transformations and the
// SL(2,C) spinor machinery used to evaluate Wigner rotations continuously,
// without lifting signs back from SO(3).
//
// Conventions: metric (+,-,-,-), natural units with the particle mass = 1.

#include <Eigen/Dense>
#include <complex>

namespace nwc {

using complexd = std::complex<double>;

inline constexpr double kMass = 1.0;  // all momenta in units of the mass

/// A spacetime or energy-momentum vector, components (t, x, y, z).
struct FourVector {
  double t = 0.0;
  Eigen::Vector3d r = Eigen::Vector3d::Zero();

  FourVector() = default;
  FourVector(double t_, const Eigen::Vector3d& r_) : t(t_), r(r_) {}
  FourVector(double t_, double x, double y, double z) : t(t_), r(x, y, z) {}

  Eigen::Vector4d vec() const { return {t, r.x(), r.y(), r.z()}; }
  static FourVector from_vec(const Eigen::Vector4d& v) {
    return {v[0], Eigen::Vector3d(v[1], v[2], v[3])};
  }

  /// On-shell momentum: energy computed from the spatial part, never stored.
  static FourVector on_shell(const Eigen::Vector3d& p) {
    return {std::sqrt(p.squaredNorm() + kMass * kMass), p};
  }
  static FourVector rest() { return {kMass, Eigen::Vector3d::Zero()}; }
};

inline double energy_of(const Eigen::Vector3d& p) {
  return std::sqrt(p.squaredNorm() + kMass * kMass);
}

/// Minkowski product a.b = a0 b0 - a.r dot b.r
inline double minkowski_dot(const FourVector& a, const FourVector& b) {
  return a.t * b.t - a.r.dot(b.r);
}
inline double minkowski_sq(const FourVector& a) { return minkowski_dot(a, a); }

/// Boost parameterized by rapidity vector; velocity = tanh(|zeta|) zeta_hat.
struct Rapidity {
  Eigen::Vector3d zeta = Eigen::Vector3d::Zero();

  Eigen::Vector3d velocity() const {
    const double z = zeta.norm();
    if (z == 0.0) return Eigen::Vector3d::Zero();
    return std::tanh(z) * zeta / z;
  }
};

/// Proper orthochronous Lorentz transformation as a 4x4 matrix acting on
/// (t, x, y, z) column vectors.
struct LorentzTransform {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();

  static LorentzTransform identity() { return {}; }
  LorentzTransform inverse() const;
  friend LorentzTransform operator*(const LorentzTransform& a,
                                    const LorentzTransform& b) {
    return {a.m * b.m};
  }
};

/// Element of SL(2,C); covers the proper orthochronous Lorentz group 2:1.
struct SpinorMap {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();

  static SpinorMap identity() { return {}; }
  /// Inverse via the adjugate; exact for det = 1.
  SpinorMap inverse() const;
  friend SpinorMap operator*(const SpinorMap& a, const SpinorMap& b) {
    return {a.m * b.m};
  }
};

// Pauli matrices (sigma_x, sigma_y, sigma_z).
const Eigen::Matrix2cd& pauli(int i);

/// Pure boost with velocity beta, |beta| < 1. Throws std::domain_error
/// otherwise.
LorentzTransform boost_from_velocity(const Eigen::Vector3d& beta);

/// Spatial rotation about axis (normalized internally) by angle.
LorentzTransform rotation_about(const Eigen::Vector3d& axis, double angle);

/// The standard boost Lambda[p]: pure boost with velocity p/omega, taking the
/// rest momentum to p.
LorentzTransform standard_boost(const FourVector& p);

LorentzTransform boost_from_rapidity(const Rapidity& z);

/// SL(2,C) elements for pure boosts and rotations.
SpinorMap boost_spinor(const Eigen::Vector3d& beta);
SpinorMap boost_spinor_from_rapidity(const Rapidity& z);
SpinorMap rotation_spinor(const Eigen::Vector3d& axis, double angle);
/// Spinor form of the standard boost Lambda[p]:
///   ((omega + m) I + p.sigma) / sqrt(2 m (omega + m)).
SpinorMap standard_boost_spinor(const FourVector& p);

FourVector apply(const LorentzTransform& L, const FourVector& p);

/// The covering map SL(2,C) -> SO+(3,1):
///   Lambda^mu_nu = (1/2) Re tr(sigma_mu A sigma_nu A^dagger).
/// Requires det A = 1 within 1e-9; throws std::invalid_argument otherwise.
LorentzTransform covering_to_lorentz(const SpinorMap& A);

/// Lift a proper orthochronous Lorentz matrix into SL(2,C) via polar
/// decomposition (boost times rotation). The sign is fixed by choosing the
/// rotation lift with nonnegative scalar part; prefer carrying SpinorMap
/// values end to end when half-integer continuity matters.
SpinorMap lift_to_spinor(const LorentzTransform& L);

/// Wigner rotation W(Lambda p <- p) = Lambda^-1[Lambda p] Lambda Lambda[p],
/// evaluated entirely inside SL(2,C). The result is in SU(2) for on-shell p.
SpinorMap wigner_rotation(const SpinorMap& A, const FourVector& p);
SpinorMap wigner_rotation(const LorentzTransform& L, const FourVector& p);

/// Axis-angle data of an SU(2) element A = cos(theta/2) I - i sin(theta/2)
/// n.sigma, theta in [0, 2pi].
struct AxisAngle {
  Eigen::Vector3d axis;
  double angle;
};
AxisAngle su2_axis_angle(const SpinorMap& R);

}  // namespace nwc
