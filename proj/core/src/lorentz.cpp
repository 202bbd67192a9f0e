#include "nwc/lorentz.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace nwc {

namespace {
const complexd kI{0.0, 1.0};
}

const Eigen::Matrix2cd& pauli(int i) {
  static const std::array<Eigen::Matrix2cd, 3> s = [] {
    std::array<Eigen::Matrix2cd, 3> a;
    a[0] << 0, 1, 1, 0;
    a[1] << 0, -kI, kI, 0;
    a[2] << 1, 0, 0, -1;
    return a;
  }();
  return s[i];
}

namespace {

Eigen::Matrix2cd dot_sigma(const Eigen::Vector3d& v) {
  return v.x() * pauli(0) + v.y() * pauli(1) + v.z() * pauli(2);
}

}  // namespace

LorentzTransform LorentzTransform::inverse() const {
  // Lambda^-1 = g Lambda^T g, cheaper and better conditioned than a solve.
  Eigen::Matrix4d g = Eigen::Vector4d(1, -1, -1, -1).asDiagonal();
  return {g * m.transpose() * g};
}

SpinorMap SpinorMap::inverse() const {
  Eigen::Matrix2cd adj;
  adj << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return {adj};
}

LorentzTransform boost_from_velocity(const Eigen::Vector3d& beta) {
  const double b2 = beta.squaredNorm();
  if (b2 >= 1.0) throw std::domain_error("boost velocity must satisfy |beta| < 1");
  LorentzTransform L;
  if (b2 == 0.0) return L;
  const double gamma = 1.0 / std::sqrt(1.0 - b2);
  L.m(0, 0) = gamma;
  for (int i = 0; i < 3; ++i) {
    L.m(0, i + 1) = L.m(i + 1, 0) = gamma * beta[i];
    for (int j = 0; j < 3; ++j)
      L.m(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + (gamma - 1.0) * beta[i] * beta[j] / b2;
  }
  return L;
}

LorentzTransform rotation_about(const Eigen::Vector3d& axis, double angle) {
  LorentzTransform L;
  L.m.block<3, 3>(1, 1) = Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
  return L;
}

LorentzTransform standard_boost(const FourVector& p) {
  return boost_from_velocity(p.r / p.t);
}

LorentzTransform boost_from_rapidity(const Rapidity& z) {
  return boost_from_velocity(z.velocity());
}

SpinorMap boost_spinor(const Eigen::Vector3d& beta) {
  const double b = beta.norm();
  if (b >= 1.0) throw std::domain_error("boost velocity must satisfy |beta| < 1");
  if (b == 0.0) return SpinorMap::identity();
  const double zeta = std::atanh(b);
  return {std::cosh(zeta / 2) * Eigen::Matrix2cd::Identity() +
          std::sinh(zeta / 2) * dot_sigma(beta / b)};
}

SpinorMap boost_spinor_from_rapidity(const Rapidity& z) {
  const double zn = z.zeta.norm();
  if (zn == 0.0) return SpinorMap::identity();
  return {std::cosh(zn / 2) * Eigen::Matrix2cd::Identity() +
          std::sinh(zn / 2) * dot_sigma(z.zeta / zn)};
}

SpinorMap rotation_spinor(const Eigen::Vector3d& axis, double angle) {
  return {std::cos(angle / 2) * Eigen::Matrix2cd::Identity() -
          kI * std::sin(angle / 2) * dot_sigma(axis.normalized())};
}

SpinorMap standard_boost_spinor(const FourVector& p) {
  const double w = p.t;
  return {((w + kMass) * Eigen::Matrix2cd::Identity() + dot_sigma(p.r)) /
          std::sqrt(2.0 * kMass * (w + kMass))};
}

FourVector apply(const LorentzTransform& L, const FourVector& p) {
  return FourVector::from_vec(L.m * p.vec());
}

LorentzTransform covering_to_lorentz(const SpinorMap& A) {
  if (std::abs(A.m.determinant() - 1.0) > 1e-9)
    throw std::invalid_argument("covering_to_lorentz: det A != 1");
  auto sig = [](int mu) -> Eigen::Matrix2cd {
    return mu == 0 ? Eigen::Matrix2cd::Identity() : pauli(mu - 1);
  };
  LorentzTransform L;
  const Eigen::Matrix2cd Ad = A.m.adjoint();
  for (int nu = 0; nu < 4; ++nu) {
    const Eigen::Matrix2cd X = A.m * sig(nu) * Ad;
    for (int mu = 0; mu < 4; ++mu)
      L.m(mu, nu) = 0.5 * (sig(mu) * X).trace().real();
  }
  return L;
}

SpinorMap lift_to_spinor(const LorentzTransform& L) {
  // Polar split L = B R with B the standard boost for the image of rest.
  const FourVector q = apply(L, FourVector::rest());
  const SpinorMap B = boost_spinor(q.r / q.t);
  const Eigen::Matrix3d R =
      (boost_from_velocity(q.r / q.t).inverse() * L).m.block<3, 3>(1, 1);
  Eigen::AngleAxisd aa(R);
  return B * rotation_spinor(aa.angle() == 0.0 ? Eigen::Vector3d::UnitZ() : aa.axis(),
                             aa.angle());
}

SpinorMap wigner_rotation(const SpinorMap& A, const FourVector& p) {
  const FourVector Lp = apply(covering_to_lorentz(A), p);
  return standard_boost_spinor(Lp).inverse() * A * standard_boost_spinor(p);
}

SpinorMap wigner_rotation(const LorentzTransform& L, const FourVector& p) {
  return wigner_rotation(lift_to_spinor(L), p);
}

AxisAngle su2_axis_angle(const SpinorMap& R) {
  const double c = 0.5 * R.m.trace().real();
  Eigen::Vector3d v;
  v.x() = -R.m(0, 1).imag();
  v.y() = -R.m(0, 1).real();
  v.z() = -R.m(0, 0).imag();
  const double s = v.norm();
  if (s < 1e-300) return {Eigen::Vector3d::UnitZ(), c >= 0.0 ? 0.0 : 2.0 * M_PI};
  return {v / s, 2.0 * std::atan2(s, c)};
}

}  // namespace nwc
