// Acceptance gate: ten numbered criteria, one pass/fail line each, exit 0
// only if every criterion holds at its stated tolerance.

#include <cstdarg>
#include <cstdio>
#include <random>
#include <vector>

#include "nwc/audit.hpp"
#include "nwc/operators.hpp"

using namespace nwc;

namespace {

int g_failures = 0;

void report(int number, bool pass, const char* what, const std::string& detail) {
  std::printf("criterion %2d: %s  %s (%s)\n", number, pass ? "PASS" : "FAIL",
              what, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

std::mt19937_64 rng(424242);

Eigen::Vector3d normal_vec(double scale) {
  std::normal_distribution<double> d(0.0, scale);
  return {d(rng), d(rng), d(rng)};
}

FourVector momentum_capped(double cap) {
  Eigen::Vector3d p;
  do p = normal_vec(0.8); while (p.norm() > cap);
  return FourVector::on_shell(p);
}

Eigen::Vector3d unit_vec() {
  Eigen::Vector3d v;
  do v = normal_vec(1.0); while (v.norm() < 1e-6);
  return v.normalized();
}

SpinorMap random_su2() {
  return rotation_spinor(unit_vec(),
                         std::uniform_real_distribution<double>(-M_PI, M_PI)(rng));
}

SpinorMap random_sl2c() {
  const Rapidity z{std::uniform_real_distribution<double>(0.0, 1.2)(rng) *
                   unit_vec()};
  return boost_spinor_from_rapidity(z) * random_su2();
}

std::shared_ptr<const GaussianPacket> standard_packet(Spin s,
                                                      double sigma = 0.5) {
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(s.dim());
  w[0] = 1.0;
  return std::make_shared<GaussianPacket>(s, Eigen::Vector3d::Zero(),
                                          Eigen::Vector3d::Constant(sigma), w);
}

QuadratureRule pair_rule(const GaussianPacket& a, const GaussianPacket& b,
                         int nodes) {
  Eigen::Vector3d sigma;
  for (int i = 0; i < 3; ++i) {
    const double s1 = a.width()[i], s2 = b.width()[i];
    sigma[i] = std::sqrt(2.0 * s1 * s1 * s2 * s2 / (s1 * s1 + s2 * s2));
  }
  return QuadratureRule::gauss_hermite3(0.5 * (a.center() + b.center()), sigma,
                                        nodes);
}

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

// --- criteria --------------------------------------------------------------

double criterion_1_2() {  // returns the s=0 deficit for criterion 2's contrast
  const AuditOptions opt;

  const AuditReport r0 = run_nogo(Spin(0), standard_packet(Spin(0)), opt);
  const bool ok0 = r0.deficit < 0.0 && r0.has_analytic &&
                   r0.analytic_rel_err <= 1e-6 && r0.separation >= 100.0 &&
                   r0.gate_defect <= opt.gate_tol;
  report(1, ok0, "spinless deficit matches the closed-form kernel",
         fmt("deficit %.6g, rel err %.2g, separation %.3g", r0.deficit,
             r0.analytic_rel_err, r0.separation));

  const AuditReport rh = run_nogo(Spin(1), standard_packet(Spin(1)), opt);
  const bool okh = rh.deficit < 0.0 && rh.has_analytic &&
                   rh.analytic_rel_err <= 1e-6 && rh.separation >= 100.0 &&
                   rh.gate_defect <= opt.gate_tol && rh.deficit < r0.deficit;
  report(2, okh, "spin-1/2 deficit matches and is more negative",
         fmt("deficit %.6g vs %.6g, rel err %.2g", rh.deficit, r0.deficit,
             rh.analytic_rel_err));
  return r0.deficit;
}

void criterion_3() {
  const auto packet = standard_packet(Spin(1));
  const DiracControlReport a =
      run_dirac_control(packet, Eigen::Vector3d::Zero(), 16);
  const DiracControlReport b =
      run_dirac_control(packet, Eigen::Vector3d(0, 0, 0.5), 16);
  const bool ok = a.pass(1e-5) && b.pass(1e-5);
  report(3, ok, "Dirac positive control, standard and boosted packet",
         fmt("rel residuals %.2g / %.2g (standard), %.2g / %.2g (boosted)",
             a.max_rel_second, a.max_rel_first, b.max_rel_second,
             b.max_rel_first));
}

void criterion_4() {
  const GammaAlgebra& g = gamma_algebra();
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const FourVector pa = momentum_capped(2.0), pb = momentum_capped(2.0);
    const Eigen::Vector4d dif = pa.vec() - pb.vec();
    for (int m = 0; m < 2; ++m) {
      worst = std::max(worst,
                       ((slash(pa) - Matrix4cd::Identity()) * dirac_u(pa, m))
                           .cwiseAbs()
                           .maxCoeff());
    }
    Matrix4cd complete = Matrix4cd::Zero();
    for (int m = 0; m < 2; ++m)
      complete += dirac_u(pa, m) * dirac_bar(dirac_u(pa, m));
    worst = std::max(worst, (complete - 0.5 * (slash(pa) + Matrix4cd::Identity()))
                                .cwiseAbs()
                                .maxCoeff());
    for (int ma = 0; ma < 2; ++ma)
      for (int mb = 0; mb < 2; ++mb) {
        const double kron = ma == mb ? 1.0 : 0.0;
        worst = std::max(
            worst,
            std::abs(complexd(dirac_bar(dirac_u(pa, ma)) * dirac_u(pa, mb)) -
                     kron));
        worst = std::max(worst, std::abs(dirac_u(pa, ma).dot(dirac_u(pa, mb)) -
                                         pa.t * kron));
        complexd div = 0.0;
        for (int mu = 0; mu < 4; ++mu) {
          worst = std::max(worst, std::abs(gordon_check(pa, ma, pb, mb, mu)));
          const complexd bil =
              dirac_bar(dirac_u(pa, ma)) * g.gamma[mu] * dirac_u(pb, mb);
          div += (mu == 0 ? dif[mu] : -dif[mu]) * bil;
        }
        worst = std::max(worst, std::abs(div));
      }
  }
  report(4, worst <= 1e-10, "spinor identity suite over 1000 momentum pairs",
         fmt("worst defect %.2g", worst));
}

void criterion_5() {
  // Momentum-space reduction of the integrated Dirac charge:
  //   <Q> = integral d^3p (1/omega) sum_{ma mb} Psi*_ma u^dag(ma) u(mb) Psi_mb.
  const auto psi = standard_packet(Spin(1));
  const QuadratureRule q =
      QuadratureRule::gauss_hermite3(psi->center(), psi->width(), 24);
  double charge = 0.0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    const FourVector p = FourVector::on_shell(q.nodes[k]);
    const Eigen::VectorXcd amp = psi->eval(p.r);
    const Vector4cd u[2] = {dirac_u(p, 0), dirac_u(p, 1)};
    complexd cell = 0.0;
    for (int ma = 0; ma < 2; ++ma)
      for (int mb = 0; mb < 2; ++mb)
        cell += std::conj(amp[ma]) * (u[ma].dot(u[mb])) * amp[mb];
    charge += q.weights[k] * std::real(cell) / p.t;
  }
  report(5, std::abs(charge - 1.0) <= 1e-6, "integrated Dirac charge equals 1",
         fmt("charge %.12g", charge));
}

void criterion_6() {
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    const SpinorMap a1 = random_sl2c(), a2 = random_sl2c();
    const FourVector p = momentum_capped(2.0);

    const SpinorMap w1 = wigner_rotation(a1, p);
    worst = std::max(worst, (w1.m * w1.m.adjoint() - Eigen::Matrix2cd::Identity())
                                .cwiseAbs()
                                .maxCoeff());
    worst = std::max(worst, std::abs(w1.m.determinant() - 1.0));

    const FourVector p1 = apply(covering_to_lorentz(a1), p);
    const SpinorMap lhs = wigner_rotation(a2, p1) * w1;
    const SpinorMap rhs = wigner_rotation(a2 * a1, p);
    worst = std::max(worst, (lhs.m - rhs.m).cwiseAbs().maxCoeff());

    if (p.r.norm() > 1e-3) {
      const SpinorMap col = boost_spinor(0.45 * p.r.normalized());
      worst = std::max(worst, (wigner_rotation(col, p).m -
                               Eigen::Matrix2cd::Identity())
                                  .cwiseAbs()
                                  .maxCoeff());
    }
  }
  auto thomas_ratio = [](double z) {
    const SpinorMap comp = boost_spinor_from_rapidity(Rapidity{{0, z, 0}}) *
                           boost_spinor_from_rapidity(Rapidity{{z, 0, 0}});
    return su2_axis_angle(wigner_rotation(comp, FourVector::rest())).angle /
           (z * z / 2.0);
  };
  const double thomas =
      std::abs((4.0 * thomas_ratio(0.01) - thomas_ratio(0.02)) / 3.0 - 1.0);
  const bool ok = worst <= 1e-10 && thomas <= 1e-3;
  report(6, ok, "Wigner group-law suite over 500 samples",
         fmt("worst defect %.2g, Thomas rel err %.2g", worst, thomas));
}

void criterion_7() {
  Eigen::VectorXcd w1(2), w2(2);
  w1 << 1.0, complexd(0.0, 0.4);
  w1.normalize();
  w2 << 0.3, 1.0;
  w2.normalize();
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    const auto phi = std::make_shared<GaussianPacket>(
        Spin(1), normal_vec(0.2),
        Eigen::Vector3d::Constant(
            std::uniform_real_distribution<double>(0.4, 0.6)(rng)),
        w1);
    const auto psi = std::make_shared<GaussianPacket>(
        Spin(1), normal_vec(0.2),
        Eigen::Vector3d::Constant(
            std::uniform_real_distribution<double>(0.4, 0.6)(rng)),
        w2);
    const QuadratureRule q = pair_rule(*phi, *psi, 24);
    const complexd before = inner_product(*phi, *psi, q);

    const FourVector a{std::uniform_real_distribution<double>(-1, 1)(rng),
                       normal_vec(0.8)};
    worst = std::max(worst, std::abs(inner_product(*translate(phi, a),
                                                   *translate(psi, a), q) -
                                     before));

    const SpinorMap r = random_su2();
    worst = std::max(
        worst, std::abs(inner_product(*rotate(phi, r), *rotate(psi, r),
                                      map_rule(q, covering_to_lorentz(r))) -
                        before));

    const Eigen::Vector3d b =
        std::uniform_real_distribution<double>(0.1, 0.4)(rng) * unit_vec();
    worst = std::max(worst,
                     std::abs(inner_product(*boost(phi, b), *boost(psi, b),
                                            map_rule(q, boost_from_velocity(b))) -
                              before));

    LorentzTransform flip;
    flip.m = Eigen::Vector4d(1, -1, -1, -1).asDiagonal();
    worst = std::max(
        worst, std::abs(inner_product(*time_reversal(phi), *time_reversal(psi),
                                      map_rule(q, flip)) -
                        std::conj(before)));
  }
  // T^2 = (-1)^{2s} pointwise.
  for (int twice : {0, 1, 2}) {
    const auto base = standard_packet(Spin(twice));
    const auto tt = time_reversal(time_reversal(
        std::static_pointer_cast<const MomentumAmplitude>(base)));
    const double sign = (twice % 2 == 0) ? 1.0 : -1.0;
    for (int k = 0; k < 10; ++k) {
      const Eigen::Vector3d p = normal_vec(0.8);
      worst = std::max(worst,
                       (tt->eval(p) - sign * base->eval(p)).cwiseAbs().maxCoeff());
    }
  }
  report(7, worst <= 1e-6, "unitarity / antiunitarity of the transforms",
         fmt("worst defect %.2g", worst));
}

void criterion_8() {
  Eigen::VectorXcd w(2);
  w << 1.0, 0.5;
  w.normalize();
  const auto psi = std::make_shared<GaussianPacket>(
      Spin(1), Eigen::Vector3d(0.1, -0.2, 0.3), Eigen::Vector3d::Constant(0.5),
      w);
  const complexd I{0, 1};
  double worst_fd = 0.0;
  for (int n = 0; n < 20; ++n) {
    const Eigen::Vector3d p = normal_vec(0.6);
    for (int axis = 0; axis < 3; ++axis) {
      const auto kpsi = boost_generator_apply(psi, axis);
      auto boosted = [&](double zeta) {
        Eigen::Vector3d b = Eigen::Vector3d::Zero();
        b[axis] = std::tanh(zeta);
        return boost(std::static_pointer_cast<const MomentumAmplitude>(psi), b);
      };
      auto deriv = [&](double h) {
        return ((boosted(h)->eval(p) - boosted(-h)->eval(p)) / (2.0 * h)).eval();
      };
      const Eigen::VectorXcd d = (4.0 * deriv(5e-3) - deriv(1e-2)) / 3.0;
      const Eigen::VectorXcd expected = -I * kpsi->eval(p);
      worst_fd = std::max(worst_fd, (d - expected).norm() / expected.norm());
    }
  }

  double worst_herm = 0.0;
  Eigen::VectorXcd w2(2);
  w2 << complexd(0.0, 0.2), 1.0;
  w2.normalize();
  for (int k = 0; k < 3; ++k) {
    const auto phi = std::make_shared<GaussianPacket>(
        Spin(1), normal_vec(0.15), Eigen::Vector3d::Constant(0.5), w);
    const auto chi = std::make_shared<GaussianPacket>(
        Spin(1), normal_vec(0.15), Eigen::Vector3d::Constant(0.55), w2);
    const QuadratureRule q = pair_rule(*phi, *chi, 24);
    for (int axis = 0; axis < 3; ++axis) {
      const complexd a =
          inner_product(*boost_generator_apply(phi, axis), *chi, q);
      const complexd b =
          inner_product(*phi, *boost_generator_apply(chi, axis), q);
      worst_herm = std::max(worst_herm, std::abs(a - b));
    }
  }
  const bool ok = worst_fd <= 1e-6 && worst_herm <= 1e-7;
  report(8, ok, "boost generator: finite-boost limit and Hermiticity",
         fmt("derivative rel err %.2g, Hermiticity defect %.2g", worst_fd,
             worst_herm));
}

void criterion_9() {
  const AuditOptions opt;
  const auto sweep = run_general_spin_sweep({Spin(2), Spin(3)}, 0.5, opt);
  bool ok = true;
  std::string detail;
  for (const AuditReport& r : sweep) {
    ok = ok && r.deficit < 0.0 && r.separation >= 100.0 &&
         r.gate_defect <= opt.gate_tol;
    detail += fmt("s=%g: %.6g (sep %.3g)  ", r.spin, r.deficit, r.separation);
  }
  report(9, ok, "general-spin deficits stay negative", detail);
}

void criterion_10() {
  const AuditOptions opt;
  const ScalingReport rep =
      fit_deficit_scaling(Spin(0), {0.05, 0.1, 0.2}, opt);
  const bool ok = std::abs(rep.slope - 2.0) <= 0.1;
  report(10, ok, "narrow-packet deficit scaling (relative deficit ~ sigma^2)",
         fmt("log-log slope %.4f extrapolated to sigma -> 0 (raw fit %.4f)",
             rep.slope, rep.slope_lsq));
}

}  // namespace

int main() {
  std::printf("acceptance: standard packet sigma = 0.5, p0 = 0, highest-weight "
              "spin state\n");
  const double s0_deficit [[maybe_unused]] = criterion_1_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
