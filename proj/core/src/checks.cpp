#include "nwc/checks.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <random>

#include "nwc/audit.hpp"

namespace nwc {

namespace {

const complexd kI{0.0, 1.0};

struct Ctx {
  CheckConfig cfg;
  std::mt19937_64 rng;

  explicit Ctx(const CheckConfig& c) : cfg(c), rng(c.seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  Eigen::Vector3d vec3(double scale) {
    std::normal_distribution<double> d(0.0, scale);
    return {d(rng), d(rng), d(rng)};
  }
  Eigen::Vector3d unit() {
    Eigen::Vector3d v;
    do v = vec3(1.0); while (v.norm() < 1e-6);
    return v.normalized();
  }
  FourVector momentum(double scale = 0.7) {
    return FourVector::on_shell(vec3(scale));
  }
  SpinorMap su2() { return rotation_spinor(unit(), uniform(-M_PI, M_PI)); }
  SpinorMap sl2c() {
    Rapidity z{uniform(0.0, 1.2) * unit()};
    return boost_spinor_from_rapidity(z) * su2();
  }
  std::shared_ptr<const GaussianPacket> packet(Spin s,
                                               Eigen::Vector3d p0 = {0, 0, 0},
                                               double x0z = 0.0) {
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(s.dim());
    w[0] = 1.0;
    return std::make_shared<GaussianPacket>(s, p0,
                                            Eigen::Vector3d::Constant(cfg.sigma),
                                            w, Eigen::Vector3d(0, 0, x0z));
  }
};

template <typename A, typename B>
double matrix_defect(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// SU(2) distance modulo nothing: the group-law checks compose in SU(2).
double su2_defect(const SpinorMap& a, const SpinorMap& b) {
  return matrix_defect(a.m, b.m);
}

using Suite = std::function<double(Ctx&)>;

struct Entry {
  const char* name;
  double tol;
  Suite fn;
};

// --- lorentz suites --------------------------------------------------------

double suite_minkowski_invariance(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < c.cfg.samples; ++k) {
    const LorentzTransform L = covering_to_lorentz(c.sl2c());
    const FourVector p = c.momentum();
    const double before = minkowski_sq(p);
    const double after = minkowski_sq(apply(L, p));
    worst = std::max(worst, std::abs(after - before) / std::abs(before));
  }
  return worst;
}

double suite_metric_preservation(Ctx& c) {
  const Eigen::Matrix4d g = Eigen::Vector4d(1, -1, -1, -1).asDiagonal();
  double worst = 0.0;
  for (int k = 0; k < c.cfg.samples; ++k) {
    const LorentzTransform L = covering_to_lorentz(c.sl2c());
    worst = std::max(worst, matrix_defect(L.m.transpose() * g * L.m, g));
  }
  return worst;
}

double suite_proper_orthochronous(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < c.cfg.samples; ++k) {
    const LorentzTransform L = covering_to_lorentz(c.sl2c());
    worst = std::max(worst, std::abs(L.m.determinant() - 1.0));
    if (L.m(0, 0) < 1.0) worst = std::max(worst, 1.0 - L.m(0, 0));
  }
  return worst;
}

double suite_covering_homomorphism(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < c.cfg.samples; ++k) {
    const SpinorMap a = c.sl2c(), b = c.sl2c();
    worst = std::max(worst, matrix_defect(covering_to_lorentz(a * b).m,
                                          (covering_to_lorentz(a) *
                                           covering_to_lorentz(b)).m));
  }
  return worst;
}

double suite_wigner_group_law(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < c.cfg.samples; ++k) {
    const SpinorMap a1 = c.sl2c(), a2 = c.sl2c();
    const FourVector p = c.momentum();
    const FourVector p1 = apply(covering_to_lorentz(a1), p);
    const SpinorMap lhs = wigner_rotation(a2, p1) * wigner_rotation(a1, p);
    const SpinorMap rhs = wigner_rotation(a2 * a1, p);
    worst = std::max(worst, su2_defect(lhs, rhs));
  }
  return worst;
}

double suite_wigner_su2_membership(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < c.cfg.samples; ++k) {
    const SpinorMap w = wigner_rotation(c.sl2c(), c.momentum());
    worst = std::max(worst, matrix_defect(w.m * w.m.adjoint(),
                                          Eigen::Matrix2cd::Identity()));
    worst = std::max(worst, std::abs(w.m.determinant() - 1.0));
  }
  return worst;
}

double suite_wigner_collinear(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < c.cfg.samples; ++k) {
    const Eigen::Vector3d n = c.unit();
    const FourVector p = FourVector::on_shell(c.uniform(0.1, 1.5) * n);
    const SpinorMap b = boost_spinor(c.uniform(0.05, 0.8) * n);
    worst = std::max(worst, su2_defect(wigner_rotation(b, p),
                                       SpinorMap::identity()));
  }
  return worst;
}

double suite_wigner_pure_rotation(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < c.cfg.samples; ++k) {
    const SpinorMap r = c.su2();
    worst = std::max(worst, su2_defect(wigner_rotation(r, c.momentum()), r));
  }
  return worst;
}

double thomas_ratio(double zeta) {
  const SpinorMap a = boost_spinor_from_rapidity({zeta * Eigen::Vector3d::UnitY()}) *
                      boost_spinor_from_rapidity({zeta * Eigen::Vector3d::UnitX()});
  const AxisAngle aa = su2_axis_angle(wigner_rotation(a, FourVector::rest()));
  return aa.angle / (0.5 * zeta * zeta);
}

double suite_thomas_angle(Ctx&) {
  // angle = zeta1 zeta2 / 2 + O(zeta^4); Richardson in zeta^2.
  const double r1 = thomas_ratio(0.02), r2 = thomas_ratio(0.01);
  const double extrapolated = (4.0 * r2 - r1) / 3.0;
  return std::abs(extrapolated - 1.0);
}

// --- spin suites -----------------------------------------------------------

double suite_spin_commutators(Ctx&) {
  double worst = 0.0;
  for (int twice = 0; twice <= 4; ++twice) {
    const SpinRep& rep = spin_matrices(Spin(twice));
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      worst = std::max(worst, matrix_defect(rep.J[i] * rep.J[j] - rep.J[j] * rep.J[i],
                                            kI * rep.J[k]));
    }
  }
  return worst;
}

double suite_spin_casimir(Ctx&) {
  double worst = 0.0;
  for (int twice = 0; twice <= 4; ++twice) {
    const Spin s(twice);
    const SpinRep& rep = spin_matrices(s);
    const Eigen::MatrixXcd j2 =
        rep.Jx() * rep.Jx() + rep.Jy() * rep.Jy() + rep.Jz() * rep.Jz();
    worst = std::max(
        worst, matrix_defect(j2, s.value() * (s.value() + 1.0) *
                                     Eigen::MatrixXcd::Identity(s.dim(), s.dim())));
  }
  return worst;
}

double suite_wigner_d_representation(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 40; ++k) {
    const SpinorMap r1 = c.su2(), r2 = c.su2();
    for (int twice : {1, 2, 3}) {
      const Spin s(twice);
      worst = std::max(worst, matrix_defect(wigner_D(s, r1 * r2),
                                            wigner_D(s, r1) * wigner_D(s, r2)));
    }
    worst = std::max(worst, matrix_defect(wigner_D(Spin(1), r1), r1.m));
  }
  return worst;
}

double suite_wigner_d_generators(Ctx& c) {
  double worst = 0.0;
  const double h = 1e-4;
  for (int k = 0; k < 20; ++k) {
    const Eigen::Vector3d n = c.unit();
    for (int twice : {1, 2}) {
      const Spin s(twice);
      const SpinRep& rep = spin_matrices(s);
      const Eigen::MatrixXcd d1 = wigner_D(s, rotation_spinor(n, h));
      const Eigen::MatrixXcd d2 = wigner_D(s, rotation_spinor(n, -h));
      const Eigen::MatrixXcd deriv = (d1 - d2) / (2.0 * h);
      const Eigen::MatrixXcd expected =
          -kI * (n.x() * rep.Jx() + n.y() * rep.Jy() + n.z() * rep.Jz());
      worst = std::max(worst, matrix_defect(deriv, expected));
    }
  }
  return worst;
}

double suite_gamma_algebra(Ctx&) {
  const auto& g = gamma_algebra();
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu)
      worst = std::max(
          worst, matrix_defect(g.gamma[mu] * g.gamma[nu] + g.gamma[nu] * g.gamma[mu],
                               2.0 * metric(mu, nu) * Matrix4cd::Identity()));
    worst = std::max(worst,
                     matrix_defect(g.gamma[0] * g.gamma[mu].adjoint() * g.gamma[0],
                                   g.gamma[mu]));
  }
  return worst;
}

double suite_dirac_equation(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < c.cfg.samples; ++k) {
    const FourVector p = c.momentum();
    for (int m = 0; m < 2; ++m) {
      worst = std::max(worst,
                       ((slash(p) - Matrix4cd::Identity()) * dirac_u(p, m)).norm());
      worst = std::max(worst,
                       ((slash(p) + Matrix4cd::Identity()) * dirac_v(p, m)).norm());
    }
  }
  return worst;
}

double suite_spinor_normalization(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < c.cfg.samples; ++k) {
    const FourVector p = c.momentum();
    for (int ma = 0; ma < 2; ++ma)
      for (int mb = 0; mb < 2; ++mb) {
        const complexd ubar_u = dirac_bar(dirac_u(p, ma)) * dirac_u(p, mb);
        const complexd udag_u = dirac_u(p, ma).dot(dirac_u(p, mb));
        const double kron = ma == mb ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(ubar_u - kron));
        worst = std::max(worst, std::abs(udag_u - p.t * kron));
      }
  }
  return worst;
}

double suite_spinor_completeness(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < c.cfg.samples; ++k) {
    const FourVector p = c.momentum();
    Matrix4cd sum = Matrix4cd::Zero();
    for (int m = 0; m < 2; ++m)
      sum += dirac_u(p, m) * dirac_bar(dirac_u(p, m));
    worst = std::max(worst,
                     matrix_defect(sum, (slash(p) + Matrix4cd::Identity()) / 2.0));
  }
  return worst;
}

double suite_gordon(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < c.cfg.samples; ++k) {
    const FourVector pa = c.momentum(), pb = c.momentum();
    for (int mu = 0; mu < 4; ++mu)
      for (int ma = 0; ma < 2; ++ma)
        for (int mb = 0; mb < 2; ++mb)
          worst = std::max(worst, std::abs(gordon_check(pa, ma, pb, mb, mu)));
  }
  return worst;
}

double suite_kernel_conservation(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < c.cfg.samples; ++k) {
    const FourVector pa = c.momentum(), pb = c.momentum();
    const Eigen::Vector4d dif = pa.vec() - pb.vec();
    for (int ma = 0; ma < 2; ++ma)
      for (int mb = 0; mb < 2; ++mb) {
        complexd div = 0.0;
        for (int mu = 0; mu < 4; ++mu) {
          const complexd bil =
              dirac_bar(dirac_u(pa, ma)) * gamma_algebra().gamma[mu] *
              dirac_u(pb, mb);
          div += (mu == 0 ? dif[mu] : -dif[mu]) * bil;
        }
        worst = std::max(worst, std::abs(div));
      }
  }
  return worst;
}

double suite_v_spinor_identity(Ctx& c) {
  // With eta_m = -i sigma_y chi_m^*, v(p, m) is the charge conjugate of
  // u(p, m) with the label unchanged, and the vector bilinears satisfy
  //   vbar(pa, ma) gamma^mu v(pb, mb) = [ubar(pa, ma) gamma^mu u(pb, mb)]^*,
  // i.e. ubar(pb, mb) gamma^mu u(pa, ma) by Hermiticity of the current.
  double worst = 0.0;
  for (int k = 0; k < c.cfg.samples; ++k) {
    const FourVector pa = c.momentum(), pb = c.momentum();
    for (int mu = 0; mu < 4; ++mu)
      for (int ma = 0; ma < 2; ++ma)
        for (int mb = 0; mb < 2; ++mb) {
          const complexd v_side =
              dirac_bar(dirac_v(pa, ma)) * gamma_algebra().gamma[mu] *
              dirac_v(pb, mb);
          const complexd u_side =
              dirac_bar(dirac_u(pa, ma)) * gamma_algebra().gamma[mu] *
              dirac_u(pb, mb);
          worst = std::max(worst, std::abs(v_side - std::conj(u_side)));
        }
  }
  return worst;
}

// --- wavepacket suites -----------------------------------------------------

double suite_quadrature_gate(Ctx& c) {
  const auto psi = c.packet(Spin(1));
  return quadrature_gate_defect(*psi, rule_for_packet(*psi, c.cfg.nodes),
                                rule_for_packet(*psi, c.cfg.nodes_fine));
}

// Rule adapted to the overlap of two Gaussian packets: centered between them,
// width matching the decay of the product Gaussian.
QuadratureRule pair_rule(const GaussianPacket& phi, const GaussianPacket& psi,
                         int nodes) {
  const Eigen::Vector3d center = 0.5 * (phi.center() + psi.center());
  Eigen::Vector3d sigma;
  for (int i = 0; i < 3; ++i) {
    const double s1 = phi.width()[i], s2 = psi.width()[i];
    sigma[i] = std::sqrt(2.0 * s1 * s1 * s2 * s2 / (s1 * s1 + s2 * s2));
  }
  return QuadratureRule::gauss_hermite3(center, sigma, nodes);
}

// Image of a rule under a point map on momentum space carrying the invariant
// measure: nodes are mapped, weights pick up the on-shell Jacobian w'/w.
QuadratureRule map_rule(const QuadratureRule& q, const LorentzTransform& L) {
  QuadratureRule out = q;
  for (std::size_t k = 0; k < out.size(); ++k) {
    const FourVector p = FourVector::on_shell(out.nodes[k]);
    const FourVector lp = apply(L, p);
    out.nodes[k] = lp.r;
    out.weights[k] *= lp.t / p.t;
  }
  return out;
}

double pair_overlap_defect(Ctx& c,
                           const std::function<AmplitudePtr(AmplitudePtr)>& map,
                           bool conjugated,
                           const std::optional<LorentzTransform>& image = {}) {
  // Two distinct random packets; the transform must preserve (or conjugate)
  // their inner product. The transformed overlap is evaluated on the image of
  // the adapted rule so both quadratures resolve their integrand equally well.
  const Spin s(1);
  Eigen::VectorXcd w1(2), w2(2);
  w1 << 1.0, 0.4 * kI;
  w2 << 0.3, 1.0;
  const auto phi = std::make_shared<GaussianPacket>(
      s, c.vec3(0.2), Eigen::Vector3d::Constant(c.uniform(0.4, 0.6)), w1);
  const auto psi = std::make_shared<GaussianPacket>(
      s, c.vec3(0.2), Eigen::Vector3d::Constant(c.uniform(0.4, 0.6)), w2);
  const QuadratureRule q = pair_rule(*phi, *psi, c.cfg.nodes_fine);
  const QuadratureRule q_after = image ? map_rule(q, *image) : q;
  const complexd before = inner_product(*phi, *psi, q);
  const complexd after = inner_product(*map(phi), *map(psi), q_after);
  return std::abs(after - (conjugated ? std::conj(before) : before));
}

double suite_unitarity_translation(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 6; ++k) {
    const FourVector a{c.uniform(-1, 1), c.vec3(0.8)};
    worst = std::max(worst, pair_overlap_defect(
                                c, [&](AmplitudePtr p) { return translate(p, a); },
                                false));
  }
  return worst;
}

double suite_unitarity_rotation(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 6; ++k) {
    const SpinorMap r = c.su2();
    worst = std::max(worst, pair_overlap_defect(
                                c, [&](AmplitudePtr p) { return rotate(p, r); },
                                false, covering_to_lorentz(r)));
  }
  return worst;
}

double suite_unitarity_boost(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    const Eigen::Vector3d b = c.uniform(0.1, 0.4) * c.unit();
    worst = std::max(worst, pair_overlap_defect(
                                c, [&](AmplitudePtr p) { return boost(p, b); },
                                false, boost_from_velocity(b)));
  }
  return worst;
}

double suite_time_reversal(Ctx& c) {
  double worst = 0.0;
  LorentzTransform flip;
  flip.m = Eigen::Vector4d(1, -1, -1, -1).asDiagonal();
  for (int k = 0; k < 4; ++k)
    worst = std::max(worst,
                     pair_overlap_defect(
                         c, [](AmplitudePtr p) { return time_reversal(p); }, true,
                         flip));
  // T^2 = (-1)^{2s} pointwise.
  for (int twice : {0, 1, 2}) {
    const auto psi = c.packet(Spin(twice), c.vec3(0.3));
    const auto twice_reversed = time_reversal(time_reversal(psi));
    const double sign = (twice % 2 == 0) ? 1.0 : -1.0;
    for (int k = 0; k < 10; ++k) {
      const Eigen::Vector3d p = c.vec3(0.8);
      worst = std::max(worst,
                       (twice_reversed->eval(p) - sign * psi->eval(p)).norm());
    }
  }
  return worst;
}

double suite_parity(Ctx& c) {
  const auto psi = c.packet(Spin(1), Eigen::Vector3d(0.4, 0, 0));
  const auto twice_flipped = parity(parity(psi));
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Eigen::Vector3d p = c.vec3(0.8);
    worst = std::max(worst, (twice_flipped->eval(p) - psi->eval(p)).norm());
  }
  const QuadratureRule q = QuadratureRule::gauss_hermite3(
      Eigen::Vector3d::Zero(), Eigen::Vector3d::Constant(0.8), c.cfg.nodes);
  const Eigen::Vector3d before = expectation_four_momentum(*psi, q).r;
  const Eigen::Vector3d after = expectation_four_momentum(*parity(psi), q).r;
  worst = std::max(worst, (after + before).norm());
  worst = std::max(worst, std::abs(expectation_sz(*parity(psi), q) -
                                   expectation_sz(*psi, q)));
  return worst;
}

double suite_parseval(Ctx& c) {
  const auto psi = c.packet(Spin(1), Eigen::Vector3d::Zero(), 0.2);
  const QuadratureRule q = rule_for_packet(*psi, c.cfg.nodes_fine);
  const PositionAmplitude pos(*psi, 0.0, q);
  // Position-space norm on a rule matched to the conjugate widths.
  const QuadratureRule xq = QuadratureRule::gauss_hermite3(
      Eigen::Vector3d(0, 0, 0.2), Eigen::Vector3d::Constant(0.5 / c.cfg.sigma),
      c.cfg.nodes_fine);
  double xnorm = 0.0;
  for (std::size_t k = 0; k < xq.size(); ++k)
    xnorm += xq.weights[k] * pos.eval(xq.nodes[k]).squaredNorm();
  return std::abs(xnorm - norm_squared(*psi, q));
}

// --- operator suites -------------------------------------------------------

double suite_generator_finite_boost(Ctx& c) {
  // lim (boost(psi, zeta e_i) - psi)/zeta = -i K_i psi, Richardson in zeta.
  const auto psi = c.packet(Spin(1), Eigen::Vector3d(0.1, -0.2, 0.3));
  double worst = 0.0;
  for (int axis = 0; axis < 3; ++axis) {
    const auto kpsi = boost_generator_apply(psi, axis);
    auto boosted = [&](double zeta) {
      Eigen::Vector3d b = Eigen::Vector3d::Zero();
      b[axis] = std::tanh(zeta);
      return boost(psi, b);
    };
    for (int k = 0; k < 7; ++k) {
      const Eigen::Vector3d p = c.vec3(0.6);
      auto deriv = [&](double h) {
        return ((boosted(h)->eval(p) - boosted(-h)->eval(p)) / (2.0 * h)).eval();
      };
      const Eigen::VectorXcd d =
          (4.0 * deriv(5e-3) - deriv(1e-2)) / 3.0;
      const Eigen::VectorXcd expected = -kI * kpsi->eval(p);
      worst = std::max(worst, (d - expected).norm() /
                                  std::max(1e-12, expected.norm()));
    }
  }
  return worst;
}

double suite_generator_hermiticity(Ctx& c) {
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    Eigen::VectorXcd w1(2), w2(2);
    w1 << 1.0, 0.5;
    w2 << 0.2 * kI, 1.0;
    const auto phi = std::make_shared<GaussianPacket>(
        Spin(1), c.vec3(0.15), Eigen::Vector3d::Constant(0.5), w1);
    const auto psi = std::make_shared<GaussianPacket>(
        Spin(1), c.vec3(0.15), Eigen::Vector3d::Constant(0.55), w2);
    const QuadratureRule q = pair_rule(*phi, *psi, c.cfg.nodes_fine);
    for (int axis = 0; axis < 3; ++axis) {
      const complexd a =
          inner_product(*boost_generator_apply(phi, axis), *psi, q);
      const complexd b =
          inner_product(*phi, *boost_generator_apply(psi, axis), q);
      worst = std::max(worst, std::abs(a - b));
    }
  }
  return worst;
}

double suite_kernel_hermiticity(Ctx& c) {
  std::vector<KernelOperator> ops;
  ops.push_back(candidate_j0_kernel(Spin(1)));
  for (int i = 0; i < 3; ++i) ops.push_back(candidate_j_spatial_kernel(Spin(1), i));
  for (int mu = 0; mu < 4; ++mu)
    ops.push_back(dirac_current_kernel(FourVector{0.3, {0.1, -0.2, 0.4}}, mu));
  ops.push_back(deficit_kernel(Spin(0)));
  ops.push_back(deficit_kernel(Spin(1)));
  double worst = 0.0;
  for (const auto& op : ops) {
    const int d = op.s.dim();
    for (int k = 0; k < 50; ++k) {
      const Eigen::Vector3d pa = c.vec3(0.8), pb = c.vec3(0.8);
      for (int ma = 0; ma < d; ++ma)
        for (int mb = 0; mb < d; ++mb)
          worst = std::max(worst, std::abs(op(pa, ma, pb, mb) -
                                           std::conj(op(pb, mb, pa, ma))));
    }
  }
  return worst;
}

double suite_candidate_first_set(Ctx& c) {
  // <i[K_i, J^0(0)]> = <J_i(0)> for the candidate pair; this is the defining
  // relation of the spatial kernel.
  const auto psi = c.packet(Spin(1), Eigen::Vector3d(0.2, 0.1, -0.15));
  const QuadratureRule q = rule_for_packet(*psi, c.cfg.nodes);
  const KernelOperator j0 = candidate_j0_kernel(Spin(1));
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double lhs = commutator_expectation(i, j0, psi, q);
    const double rhs =
        kernel_expectation(candidate_j_spatial_kernel(Spin(1), i), psi, q).real();
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double suite_charge_oracle(Ctx& c) {
  // integral d^3x of the J^0_D expectation, reduced in momentum space:
  //   integral d^3p (1/omega) sum_{ma mb} Psi*_ma u^dag(p,ma) u(p,mb) Psi_mb.
  Eigen::VectorXcd w(2);
  w << 1.0, 0.6 * kI;
  const auto psi = std::make_shared<GaussianPacket>(
      Spin(1), Eigen::Vector3d(0.2, 0, 0.1), Eigen::Vector3d::Constant(c.cfg.sigma),
      w);
  const QuadratureRule q = rule_for_packet(*psi, c.cfg.nodes_fine);
  double total = 0.0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    const FourVector p = FourVector::on_shell(q.nodes[k]);
    const Eigen::VectorXcd v = psi->eval(q.nodes[k]);
    complexd val = 0.0;
    for (int ma = 0; ma < 2; ++ma)
      for (int mb = 0; mb < 2; ++mb)
        val += std::conj(v[ma]) * dirac_u(p, ma).dot(dirac_u(p, mb)) * v[mb];
    total += q.weights[k] * (val / p.t).real();
  }
  return std::abs(total - 1.0);
}

double suite_commutator_cross_validation(Ctx& c) {
  // -2 Im <K psi|O psi> against d/dzeta of the boosted expectation.
  const auto psi = c.packet(Spin(1), Eigen::Vector3d(0.1, 0.0, 0.2));
  const QuadratureRule q = rule_for_packet(*psi, std::min(c.cfg.nodes, 14));
  std::vector<KernelOperator> ops = {dirac_current_kernel(FourVector{}, 0),
                                     candidate_j_spatial_kernel(Spin(1), 2)};
  double worst = 0.0;
  for (const auto& op : ops) {
    const int axis = 2;
    const double direct = commutator_expectation(axis, op, psi, q);
    auto expectation_boosted = [&](double zeta) {
      Eigen::Vector3d b = Eigen::Vector3d::Zero();
      b[axis] = std::tanh(zeta);
      return kernel_expectation(op, boost(psi, b), q).real();
    };
    auto central = [&](double h) {
      return (expectation_boosted(h) - expectation_boosted(-h)) / (2 * h);
    };
    const double fd = (4.0 * central(2e-3) - central(4e-3)) / 3.0;
    worst = std::max(worst, std::abs(fd - direct) /
                                std::max(1e-12, std::abs(direct)));
  }
  return worst;
}

double suite_rotational_invariance(Ctx& c) {
  // sum_i <i[K_i, J_i]> is a rotational scalar: identical for the rotated
  // packet.
  const auto psi = c.packet(Spin(1), Eigen::Vector3d(0.25, 0, 0));
  const SpinorMap r = c.su2();
  const Eigen::Matrix3d rot =
      covering_to_lorentz(r).m.block<3, 3>(1, 1);
  const auto rotated = rotate(psi, r);
  const QuadratureRule q = rule_for_packet(*psi, c.cfg.nodes);
  const QuadratureRule qr = QuadratureRule::gauss_hermite3(
      rot * psi->center(), Eigen::Vector3d::Constant(c.cfg.sigma), c.cfg.nodes);
  double a = 0.0, b = 0.0;
  for (int i = 0; i < 3; ++i) {
    a += commutator_expectation(i, candidate_j_spatial_kernel(Spin(1), i), psi, q);
    b += commutator_expectation(i, candidate_j_spatial_kernel(Spin(1), i), rotated,
                                qr);
  }
  return std::abs(a - b) / std::abs(a);
}

}  // namespace

std::vector<CheckResult> run_all_checks(const CheckConfig& cfg) {
  const Entry entries[] = {
      {"minkowski-invariance", 1e-12, suite_minkowski_invariance},
      {"metric-preservation", 1e-12, suite_metric_preservation},
      {"proper-orthochronous", 1e-12, suite_proper_orthochronous},
      {"su2-covering-homomorphism", 1e-10, suite_covering_homomorphism},
      {"wigner-group-law", 1e-10, suite_wigner_group_law},
      {"wigner-su2-membership", 1e-10, suite_wigner_su2_membership},
      {"wigner-collinear-trivial", 1e-10, suite_wigner_collinear},
      {"wigner-pure-rotation", 1e-10, suite_wigner_pure_rotation},
      {"thomas-angle", 1e-3, suite_thomas_angle},
      {"spin-commutators", 1e-12, suite_spin_commutators},
      {"spin-casimir", 1e-12, suite_spin_casimir},
      {"wigner-d-representation", 1e-10, suite_wigner_d_representation},
      {"wigner-d-generators", 1e-8, suite_wigner_d_generators},
      {"gamma-anticommutation", 1e-12, suite_gamma_algebra},
      {"dirac-equation", 1e-12, suite_dirac_equation},
      {"spinor-normalization", 1e-12, suite_spinor_normalization},
      {"spinor-completeness", 1e-12, suite_spinor_completeness},
      {"gordon-decomposition", 1e-10, suite_gordon},
      {"kernel-conservation", 1e-12, suite_kernel_conservation},
      {"v-spinor-identity", 1e-10, suite_v_spinor_identity},
      {"quadrature-gate", 1e-8, suite_quadrature_gate},
      {"unitarity-translation", 1e-6, suite_unitarity_translation},
      {"unitarity-rotation", 1e-6, suite_unitarity_rotation},
      {"unitarity-boost", 1e-6, suite_unitarity_boost},
      {"time-reversal", 1e-6, suite_time_reversal},
      {"parity", 1e-6, suite_parity},
      {"parseval", 1e-6, suite_parseval},
      {"generator-finite-boost", 1e-6, suite_generator_finite_boost},
      {"generator-hermiticity", 1e-7, suite_generator_hermiticity},
      {"kernel-hermiticity", 1e-12, suite_kernel_hermiticity},
      {"candidate-first-set", 1e-6, suite_candidate_first_set},
      {"dirac-charge-oracle", 1e-6, suite_charge_oracle},
      {"commutator-cross-validation", 1e-5, suite_commutator_cross_validation},
      {"rotational-invariance", 1e-6, suite_rotational_invariance},
  };
  Ctx ctx(cfg);
  std::vector<CheckResult> out;
  for (const auto& e : entries) {
    CheckResult r;
    r.name = e.name;
    r.tolerance = e.tol;
    r.defect = e.fn(ctx);
    r.pass = r.defect <= r.tolerance;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace nwc
