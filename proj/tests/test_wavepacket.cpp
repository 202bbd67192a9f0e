#include <random>

#include "doctest.h"
#include "nwc/audit.hpp"
#include "nwc/wavepacket.hpp"

using namespace nwc;

namespace {

std::mt19937_64 rng(20240819);

Eigen::Vector3d random_vec(double scale) {
  std::normal_distribution<double> d(0.0, scale);
  return {d(rng), d(rng), d(rng)};
}

std::shared_ptr<const GaussianPacket> standard_packet(Spin s) {
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(s.dim());
  w[0] = 1.0;
  return std::make_shared<GaussianPacket>(s, Eigen::Vector3d::Zero(),
                                          Eigen::Vector3d::Constant(0.5), w);
}

QuadratureRule default_rule(const GaussianPacket& p, int n = 20) {
  return QuadratureRule::gauss_hermite3(p.center(), p.width(), n);
}

}  // namespace

TEST_CASE("1D quadrature rules") {
  // Gauss-Hermite: integral e^{-x^2} x^2 = sqrt(pi)/2.
  const Rule1D gh = gauss_hermite(12);
  double acc = 0.0;
  for (std::size_t k = 0; k < gh.x.size(); ++k)
    acc += gh.w[k] * gh.x[k] * gh.x[k];
  CHECK(acc == doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-13));

  // Gauss-Legendre on [-1, 1]: integral x^2 = 2/3, integral 1 = 2.
  const Rule1D gl = gauss_legendre(10);
  double m0 = 0.0, m2 = 0.0;
  for (std::size_t k = 0; k < gl.x.size(); ++k) {
    m0 += gl.w[k];
    m2 += gl.w[k] * gl.x[k] * gl.x[k];
  }
  CHECK(m0 == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(m2 == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("reduced two-point rule integrates a factorized kernel") {
  // With K = 1 the six-dimensional integral factorizes into
  // (integral d^3p f(|p|))^2, known in closed form for a Gaussian profile.
  const double sigma = 0.5;
  const double c3 = std::pow(2.0 * M_PI * sigma * sigma, -0.75);
  const auto profile = [&](double r) {
    return c3 * std::exp(-r * r / (4.0 * sigma * sigma));
  };
  const double line = c3 * std::pow(4.0 * M_PI * sigma * sigma, 1.5);
  const auto rule = ReducedTwoPointRule::make(60, 20, sigma);
  const double got =
      rule.integrate([](double, double, double) { return 1.0; }, profile);
  CHECK(got == doctest::Approx(line * line).epsilon(1e-10));

  // ... and a cos-odd kernel integrates to zero.
  const double odd =
      rule.integrate([](double, double, double c) { return c; }, profile);
  CHECK(std::abs(odd) < 1e-12);
}

TEST_CASE("Gaussian packet normalization and overlap oracle") {
  const auto psi = standard_packet(Spin(1));
  const QuadratureRule q = default_rule(*psi);
  CHECK(norm_squared(*psi, q) == doctest::Approx(1.0).epsilon(1e-10));

  // Orthogonal spin weights: zero overlap.
  Eigen::VectorXcd up(2), dn(2);
  up << 1, 0;
  dn << 0, 1;
  const auto a = std::make_shared<GaussianPacket>(
      Spin(1), Eigen::Vector3d::Zero(), Eigen::Vector3d::Constant(0.5), up);
  const auto b = std::make_shared<GaussianPacket>(
      Spin(1), Eigen::Vector3d::Zero(), Eigen::Vector3d::Constant(0.5), dn);
  CHECK(std::abs(inner_product(*a, *b, q)) < 1e-14);

  // Two unit-weight Gaussians sigma = 1/2 centered at 0 and (1,0,0): overlap
  // exp(-|d|^2 / (8 sigma^2)) = e^{-1/2}.
  const auto c = std::make_shared<GaussianPacket>(
      Spin(1), Eigen::Vector3d(1, 0, 0), Eigen::Vector3d::Constant(0.5), up);
  const QuadratureRule qmid = QuadratureRule::gauss_hermite3(
      Eigen::Vector3d(0.5, 0, 0), Eigen::Vector3d::Constant(0.5), 24);
  CHECK(std::abs(inner_product(*a, *c, qmid)) ==
        doctest::Approx(std::exp(-0.5)).epsilon(1e-8));

  // Spin mismatch throws.
  const auto s0 = standard_packet(Spin(0));
  CHECK_THROWS_AS(inner_product(*a, *s0, q), std::domain_error);
}

TEST_CASE("translations") {
  const auto psi = standard_packet(Spin(1));
  const FourVector a{0.3, Eigen::Vector3d(0.1, -0.4, 0.2)};
  const auto moved = translate(psi, a);
  const auto back = translate(translate(psi, FourVector{0.7, {}}),
                              FourVector{-0.7, {}});
  for (int k = 0; k < 20; ++k) {
    const Eigen::Vector3d p = random_vec(0.8);
    CHECK((translate(psi, FourVector{})->eval(p) - psi->eval(p)).norm() <
          1e-14);
    CHECK((back->eval(p) - psi->eval(p)).norm() < 1e-12);
    CHECK(moved->eval(p).cwiseAbs().isApprox(psi->eval(p).cwiseAbs(), 1e-12));
  }
}

TEST_CASE("rotations") {
  const auto psi = standard_packet(Spin(1));
  for (int k = 0; k < 10; ++k) {
    const Eigen::Vector3d p = random_vec(0.8);
    CHECK((rotate(psi, SpinorMap::identity())->eval(p) - psi->eval(p)).norm() <
          1e-14);
  }

  // 2 pi rotation: (-1)^{2s}.
  const SpinorMap full = rotation_spinor({0, 0, 1}, 2.0 * M_PI - 1e-13);
  const auto s0 = standard_packet(Spin(0));
  const auto s1 = standard_packet(Spin(2));
  for (int k = 0; k < 10; ++k) {
    const Eigen::Vector3d p = random_vec(0.8);
    CHECK((rotate(psi, full)->eval(p) + psi->eval(p)).norm() < 1e-8);
    CHECK((rotate(s0, full)->eval(p) - s0->eval(p)).norm() < 1e-8);
    CHECK((rotate(s1, full)->eval(p) - s1->eval(p)).norm() < 1e-8);
  }

  // pi/2 about z moves a packet centered at (1,0,0) to (0,1,0), spin weights
  // mixed by D: compare against the closed-form transformed Gaussian.
  Eigen::VectorXcd w(2);
  w << 0.6, 0.8;
  const auto tilted = std::make_shared<GaussianPacket>(
      Spin(1), Eigen::Vector3d(1, 0, 0), Eigen::Vector3d::Constant(0.5), w);
  const SpinorMap r = rotation_spinor({0, 0, 1}, M_PI / 2);
  const auto rotated = rotate(tilted, r);
  const Eigen::MatrixXcd d = wigner_D(Spin(1), r);
  const auto moved = std::make_shared<GaussianPacket>(
      Spin(1), Eigen::Vector3d(0, 1, 0), Eigen::Vector3d::Constant(0.5),
      (d * w).eval());
  for (int k = 0; k < 20; ++k) {
    const Eigen::Vector3d p = Eigen::Vector3d(0, 1, 0) + random_vec(0.5);
    CHECK((rotated->eval(p) - moved->eval(p)).norm() < 1e-12);
  }

  // Group compatibility: rotate twice = rotate by the product.
  const SpinorMap r2 = rotation_spinor({1, 1, 0}, 0.8);
  const auto two_step = rotate(rotate(psi, r), r2);
  const auto one_step = rotate(psi, r2 * r);
  for (int k = 0; k < 20; ++k) {
    const Eigen::Vector3d p = random_vec(0.8);
    CHECK((two_step->eval(p) - one_step->eval(p)).norm() < 1e-10);
  }
}

TEST_CASE("boosts preserve norm and transform four-momentum covariantly") {
  const auto psi = standard_packet(Spin(1));
  for (int k = 0; k < 5; ++k) {
    const Eigen::Vector3d p = random_vec(0.8);
    CHECK((boost(psi, Eigen::Vector3d::Zero())->eval(p) - psi->eval(p)).norm() <
          1e-14);
  }

  const Eigen::Vector3d beta(0, 0, 0.5);
  const auto boosted = boost(psi, beta);
  const QuadratureRule qb = rule_for_boosted_packet(*psi, beta, 20);
  CHECK(norm_squared(*boosted, qb) == doctest::Approx(1.0).epsilon(1e-8));

  const FourVector before = expectation_four_momentum(*psi, default_rule(*psi));
  const FourVector after = expectation_four_momentum(*boosted, qb);
  const Eigen::Vector4d mapped = boost_from_velocity(beta).m * before.vec();
  CHECK((after.vec() - mapped).norm() < 1e-6);

  // Spinless boost: prefactor and argument substitution only (no spin mixing,
  // amplitude stays a positive multiple of the substituted value).
  const auto s0 = standard_packet(Spin(0));
  const auto b0 = boost(s0, beta);
  const LorentzTransform inv = boost_from_velocity(beta).inverse();
  for (int k = 0; k < 10; ++k) {
    const Eigen::Vector3d p = random_vec(0.8);
    const Eigen::Vector3d pin = apply(inv, FourVector::on_shell(p)).r;
    const complexd ratio = b0->eval(p)[0] / s0->eval(pin)[0];
    CHECK(std::abs(std::imag(ratio)) < 1e-12);
    CHECK(std::real(ratio) > 0.0);
  }
}

TEST_CASE("parity and time reversal") {
  Eigen::VectorXcd w(2);
  w << 1.0, complexd(0.0, 0.6);
  w.normalize();
  const auto psi = std::make_shared<GaussianPacket>(
      Spin(1), Eigen::Vector3d(0.4, 0, 0), Eigen::Vector3d::Constant(0.5), w);

  const auto pp = parity(parity(psi));
  for (int k = 0; k < 20; ++k) {
    const Eigen::Vector3d p = random_vec(0.8);
    CHECK((pp->eval(p) - psi->eval(p)).norm() < 1e-14);
  }

  // T^2 = (-1)^{2s}.
  for (int twice : {0, 1, 2}) {
    const auto base = standard_packet(Spin(twice));
    const auto tt = time_reversal(time_reversal(base));
    const double sign = (twice % 2 == 0) ? 1.0 : -1.0;
    for (int k = 0; k < 10; ++k) {
      const Eigen::Vector3d p = random_vec(0.8);
      CHECK((tt->eval(p) - sign * base->eval(p)).norm() < 1e-14);
    }
  }

  // Parity flips <p>, preserves <s_z>.
  const QuadratureRule q = QuadratureRule::gauss_hermite3(
      Eigen::Vector3d::Zero(), Eigen::Vector3d::Constant(0.7), 24);
  const auto flipped = parity(psi);
  const FourVector mom = expectation_four_momentum(*psi, q);
  const FourVector mom_flipped = expectation_four_momentum(*flipped, q);
  CHECK((mom_flipped.r + mom.r).norm() < 1e-8);
  CHECK(expectation_sz(*flipped, q) ==
        doctest::Approx(expectation_sz(*psi, q)).epsilon(1e-10));
}

TEST_CASE("expectations") {
  const auto psi = standard_packet(Spin(1));
  const QuadratureRule q = default_rule(*psi);
  const FourVector mom = expectation_four_momentum(*psi, q);
  CHECK(mom.r.norm() < 1e-12);
  CHECK(expectation_sz(*psi, q) == doctest::Approx(0.5).epsilon(1e-12));

  Eigen::VectorXcd mixed(2);
  mixed << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const auto psi2 = std::make_shared<GaussianPacket>(
      Spin(1), Eigen::Vector3d::Zero(), Eigen::Vector3d::Constant(0.5), mixed);
  CHECK(std::abs(expectation_sz(*psi2, q)) < 1e-12);

  // <omega> against a 1D radial oracle: 4 pi int r^2 sqrt(r^2+1) f(r)^2 dr
  // with the rational map r = s (1+t)/(1-t).
  const double sigma = 0.5;
  const double c3 = std::pow(2.0 * M_PI * sigma * sigma, -0.75);
  const Rule1D gl = gauss_legendre(120);
  double oracle = 0.0;
  for (std::size_t k = 0; k < gl.x.size(); ++k) {
    const double t = gl.x[k];
    const double r = sigma * (1.0 + t) / (1.0 - t);
    const double jac = 2.0 * sigma / ((1.0 - t) * (1.0 - t));
    const double f = c3 * std::exp(-r * r / (4.0 * sigma * sigma));
    oracle += gl.w[k] * jac * 4.0 * M_PI * r * r * std::sqrt(r * r + 1.0) * f * f;
  }
  CHECK(mom.t == doctest::Approx(oracle).epsilon(1e-7));
}

TEST_CASE("position amplitude: closed form, Parseval, nonlocality witness") {
  const auto psi = standard_packet(Spin(0));
  const QuadratureRule q = default_rule(*psi, 24);
  const PositionAmplitude pos(*psi, 0.0, q);

  // At t = 0 the Fourier transform of the real symmetric Gaussian is the
  // Gaussian with sigma_x = 1/(2 sigma_p), up to 1e-10 phase.
  const double sx = 1.0 / (2.0 * 0.5);
  const double cx = std::pow(2.0 * M_PI * sx * sx, -0.75);
  for (const double z : {0.0, 0.5, 1.3, -2.0}) {
    const complexd val = pos.eval({0, 0, z}, 0);
    CHECK(std::abs(std::imag(val)) < 1e-10);
    const double expected = cx * std::exp(-z * z / (4.0 * sx * sx));
    CHECK(std::real(val) == doctest::Approx(expected).epsilon(1e-9));
  }

  // Parseval on a modest grid (trapezoid, 25^3 over [-6,6]^3).
  const int n = 25;
  const double lo = -6.0, h = 12.0 / (n - 1);
  double mass = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        mass += pos.density({lo + h * i, lo + h * j, lo + h * k});
  mass *= h * h * h;
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-4));

  // Nonlocality witness: the boosted density is not the point-wise Lorentz
  // image of the original density on the t = 0 slice.
  const Eigen::Vector3d beta(0, 0, 0.5);
  const double gamma = 1.0 / std::sqrt(1.0 - beta.squaredNorm());
  const auto boosted = boost(std::static_pointer_cast<const MomentumAmplitude>(psi),
                             beta);
  const QuadratureRule qb = rule_for_boosted_packet(*psi, beta, 24);
  const PositionAmplitude posb(*boosted, 0.0, qb);
  double l2 = 0.0;
  const int ng = 17;
  const double glo = -4.0, gh = 8.0 / (ng - 1);
  for (int i = 0; i < ng; ++i)
    for (int j = 0; j < ng; ++j)
      for (int k = 0; k < ng; ++k) {
        const Eigen::Vector3d x(glo + gh * i, glo + gh * j, glo + gh * k);
        const double rho_b = posb.density(x);
        const double rho_map = pos.density({x.x(), x.y(), gamma * x.z()});
        l2 += (rho_b - rho_map) * (rho_b - rho_map);
      }
  l2 = std::sqrt(l2 * gh * gh * gh);
  CHECK(l2 > 0.01);
}

TEST_CASE("quadrature convergence gate") {
  const auto psi = standard_packet(Spin(1));
  CHECK(quadrature_gate_defect(*psi, default_rule(*psi, 16),
                               default_rule(*psi, 24)) < 1e-8);
}
