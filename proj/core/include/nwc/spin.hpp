#pragma once

// Spin-s representation matrices, Wigner D-matrices, Dirac spinors in the
// Dirac basis and the gamma-matrix algebra.
//
// Basis order for spin labels is m = s, s-1, ..., -s (descending) everywhere.

#include <array>
#include <vector>

#include "nwc/lorentz.hpp"

namespace nwc {

/// Spin quantum number, stored as 2s to keep half-integers exact.
struct Spin {
  int twice_s = 0;

  Spin() = default;
  explicit Spin(int twice) : twice_s(twice) {}
  static Spin of(double s);

  double value() const { return 0.5 * twice_s; }
  int dim() const { return twice_s + 1; }
  /// m value of basis index k (0 = highest weight).
  double m_of(int k) const { return 0.5 * twice_s - k; }
};

/// Angular momentum matrices (Jx, Jy, Jz) in the (2s+1)-dim irrep.
struct SpinRep {
  Spin s;
  std::array<Eigen::MatrixXcd, 3> J;

  const Eigen::MatrixXcd& Jx() const { return J[0]; }
  const Eigen::MatrixXcd& Jy() const { return J[1]; }
  const Eigen::MatrixXcd& Jz() const { return J[2]; }
};

/// Ladder-operator construction of the spin-s matrices. 2s must be a
/// nonnegative integer; Spin::of throws otherwise. Results are cached per s.
const SpinRep& spin_matrices(Spin s);

/// D^(s)(R) for R in SU(2), built by exponentiating the spin matrices along
/// the axis-angle data of the SU(2) element itself (angle in [0, 2pi], so the
/// half-integer double cover comes out right).
/// Throws std::domain_error if R is not unitary within 1e-9.
Eigen::MatrixXcd wigner_D(Spin s, const SpinorMap& R);

/// The spin term of the boost generator: components of
///   (J x p) / (omega + m),
/// three (2s+1)x(2s+1) Hermitian matrices. Zero for s = 0 or p = 0.
std::array<Eigen::MatrixXcd, 3> boost_spin_term(Spin s, const FourVector& p);

// --- Dirac machinery (s = 1/2), Dirac representation -----------------------

using Vector4cd = Eigen::Vector4cd;
using Matrix4cd = Eigen::Matrix4cd;

/// gamma^0..gamma^3 plus sigma^{mu nu} = (i/2)[gamma^mu, gamma^nu].
struct GammaAlgebra {
  std::array<Matrix4cd, 4> gamma;
  Matrix4cd sigma_munu[4][4];
};
const GammaAlgebra& gamma_algebra();

/// Metric g^{mu nu} = diag(+,-,-,-).
inline double metric(int mu, int nu) {
  return mu != nu ? 0.0 : (mu == 0 ? 1.0 : -1.0);
}

/// Positive-energy Dirac spinor u(p, m), m index 0 -> +1/2, 1 -> -1/2.
/// Normalization: ubar(p,m) u(p,m') = delta_{mm'}.
Vector4cd dirac_u(const FourVector& p, int m_index);
/// Negative-energy spinor v(p, m) with the charge-conjugate two-spinor
/// eta_m = -i sigma_y chi_m^*.
Vector4cd dirac_v(const FourVector& p, int m_index);

/// ubar = u^dagger gamma^0.
Eigen::RowVector4cd dirac_bar(const Vector4cd& u);

/// Feynman slash p_mu gamma^mu.
Matrix4cd slash(const FourVector& p);

/// Residual of the Gordon decomposition for the bilinear
/// ubar(p_a,m_a) gamma^mu u(p_b,m_b):
///   ubar gamma^mu u - (p_a+p_b)^mu/(2m) ubar u
///                   - i/(2m) ubar sigma^{mu nu} u (p_a-p_b)_nu.
complexd gordon_check(const FourVector& pa, int ma, const FourVector& pb, int mb,
                      int mu);

}  // namespace nwc
