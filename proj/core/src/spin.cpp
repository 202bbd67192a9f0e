#include "nwc/spin.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace nwc {

namespace {
const complexd kI{0.0, 1.0};
}

Spin Spin::of(double s) {
  const double twice = 2.0 * s;
  const int t = static_cast<int>(std::llround(twice));
  if (t < 0 || std::abs(twice - t) > 1e-12)
    throw std::domain_error("spin must be a nonnegative half-integer");
  return Spin(t);
}

const SpinRep& spin_matrices(Spin s) {
  static std::map<int, SpinRep> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(s.twice_s);
  if (it != cache.end()) return it->second;

  const int n = s.dim();
  const double sv = s.value();
  Eigen::MatrixXcd jp = Eigen::MatrixXcd::Zero(n, n);  // J+
  Eigen::MatrixXcd jz = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double m = s.m_of(k);
    jz(k, k) = m;
    if (k > 0)  // J+ |s,m> = sqrt(s(s+1) - m(m+1)) |s,m+1>
      jp(k - 1, k) = std::sqrt(sv * (sv + 1.0) - m * (m + 1.0));
  }
  SpinRep rep;
  rep.s = s;
  rep.J[0] = 0.5 * (jp + jp.adjoint());
  rep.J[1] = -0.5 * kI * (jp - jp.adjoint());
  rep.J[2] = jz;
  return cache.emplace(s.twice_s, std::move(rep)).first->second;
}

Eigen::MatrixXcd wigner_D(Spin s, const SpinorMap& R) {
  if ((R.m * R.m.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() >
          1e-9 ||
      std::abs(R.m.determinant() - 1.0) > 1e-9)
    throw std::domain_error("wigner_D: R must be in SU(2)");
  const AxisAngle aa = su2_axis_angle(R);
  const SpinRep& rep = spin_matrices(s);
  const Eigen::MatrixXcd H =
      aa.axis.x() * rep.Jx() + aa.axis.y() * rep.Jy() + aa.axis.z() * rep.Jz();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  const auto& U = es.eigenvectors();
  Eigen::VectorXcd ph(s.dim());
  for (int k = 0; k < s.dim(); ++k)
    ph[k] = std::exp(-kI * aa.angle * es.eigenvalues()[k]);
  return U * ph.asDiagonal() * U.adjoint();
}

std::array<Eigen::MatrixXcd, 3> boost_spin_term(Spin s, const FourVector& p) {
  const SpinRep& rep = spin_matrices(s);
  const double denom = p.t + kMass;
  std::array<Eigen::MatrixXcd, 3> out;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    out[i] = (rep.J[j] * p.r[k] - rep.J[k] * p.r[j]) / denom;
  }
  return out;
}

const GammaAlgebra& gamma_algebra() {
  static const GammaAlgebra g = [] {
    GammaAlgebra a;
    a.gamma[0] = Matrix4cd::Zero();
    a.gamma[0].block<2, 2>(0, 0) = Eigen::Matrix2cd::Identity();
    a.gamma[0].block<2, 2>(2, 2) = -Eigen::Matrix2cd::Identity();
    for (int i = 0; i < 3; ++i) {
      a.gamma[i + 1] = Matrix4cd::Zero();
      a.gamma[i + 1].block<2, 2>(0, 2) = pauli(i);
      a.gamma[i + 1].block<2, 2>(2, 0) = -pauli(i);
    }
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        a.sigma_munu[mu][nu] =
            0.5 * kI * (a.gamma[mu] * a.gamma[nu] - a.gamma[nu] * a.gamma[mu]);
    return a;
  }();
  return g;
}

namespace {

Eigen::Vector2cd chi(int m_index) {
  return m_index == 0 ? Eigen::Vector2cd(1, 0) : Eigen::Vector2cd(0, 1);
}

}  // namespace

Vector4cd dirac_u(const FourVector& p, int m_index) {
  const double w = p.t;
  const double norm = std::sqrt((w + kMass) / (2.0 * kMass));
  const Eigen::Matrix2cd ps =
      p.r.x() * pauli(0) + p.r.y() * pauli(1) + p.r.z() * pauli(2);
  Vector4cd u;
  u.head<2>() = norm * chi(m_index);
  u.tail<2>() = norm / (w + kMass) * (ps * chi(m_index));
  return u;
}

Vector4cd dirac_v(const FourVector& p, int m_index) {
  const double w = p.t;
  const double norm = std::sqrt((w + kMass) / (2.0 * kMass));
  // eta_m = -i sigma_y chi_m^*
  const Eigen::Vector2cd eta = -kI * (pauli(1) * chi(m_index).conjugate());
  const Eigen::Matrix2cd ps =
      p.r.x() * pauli(0) + p.r.y() * pauli(1) + p.r.z() * pauli(2);
  Vector4cd v;
  v.head<2>() = norm / (w + kMass) * (ps * eta);
  v.tail<2>() = norm * eta;
  return v;
}

Eigen::RowVector4cd dirac_bar(const Vector4cd& u) {
  return u.adjoint() * gamma_algebra().gamma[0];
}

Matrix4cd slash(const FourVector& p) {
  const auto& g = gamma_algebra();
  return p.t * g.gamma[0] - p.r.x() * g.gamma[1] - p.r.y() * g.gamma[2] -
         p.r.z() * g.gamma[3];
}

complexd gordon_check(const FourVector& pa, int ma, const FourVector& pb, int mb,
                      int mu) {
  const auto& g = gamma_algebra();
  const Vector4cd ua = dirac_u(pa, ma), ub = dirac_u(pb, mb);
  const Eigen::RowVector4cd uab = dirac_bar(ua);

  const complexd lhs = uab * g.gamma[mu] * ub;
  const Eigen::Vector4d sum = pa.vec() + pb.vec();
  const Eigen::Vector4d dif = pa.vec() - pb.vec();
  const complexd convection = sum[mu] / (2.0 * kMass) * (uab * ub)(0);
  complexd spin_part = 0.0;
  for (int nu = 0; nu < 4; ++nu) {
    const double d_lower = (nu == 0 ? dif[nu] : -dif[nu]);
    spin_part += kI / (2.0 * kMass) * (uab * g.sigma_munu[mu][nu] * ub)(0) * d_lower;
  }
  return lhs - convection - spin_part;
}

}  // namespace nwc
