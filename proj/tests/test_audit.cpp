#include <random>

#include "doctest.h"
#include "nwc/audit.hpp"
#include "nwc/checks.hpp"

using namespace nwc;

namespace {

std::shared_ptr<const GaussianPacket> standard_packet(Spin s, double sigma = 0.5) {
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(s.dim());
  w[0] = 1.0;
  return std::make_shared<GaussianPacket>(s, Eigen::Vector3d::Zero(),
                                          Eigen::Vector3d::Constant(sigma), w);
}

}  // namespace

TEST_CASE("reduced-rule analytic deficit is negative and stable") {
  const auto packet = standard_packet(Spin(0));
  const double coarse = analytic_deficit_reduced(Spin(0), *packet, 60, 30);
  const double fine = analytic_deficit_reduced(Spin(0), *packet, 90, 45);
  CHECK(fine < 0.0);
  CHECK(std::abs(fine - coarse) < 1e-10 * std::abs(fine));

  // The spin-1/2 closed form is strictly more negative.
  const auto half = standard_packet(Spin(1));
  CHECK(analytic_deficit_reduced(Spin(1), *half) < fine);

  CHECK_THROWS_AS(analytic_deficit_reduced(Spin(2), *standard_packet(Spin(2))),
                  std::domain_error);
  const auto squeezed = std::make_shared<GaussianPacket>(
      Spin(0), Eigen::Vector3d::Zero(), Eigen::Vector3d(0.5, 0.5, 0.3),
      Eigen::VectorXcd::Ones(1));
  CHECK_THROWS_AS(analytic_deficit_reduced(Spin(0), *squeezed),
                  std::domain_error);
}

TEST_CASE("no-go engine agrees with the reduced oracle at coarse levels") {
  AuditOptions opt;
  opt.levels = {10, 14};
  const auto packet = standard_packet(Spin(0));
  const AuditReport rep = run_nogo(Spin(0), packet, opt);
  CHECK(rep.deficit < 0.0);
  CHECK(rep.has_analytic);
  CHECK(rep.analytic_rel_err < 1e-4);
  CHECK(rep.gate_defect < 1e-8);
  CHECK(rep.separation > 100.0);
  CHECK(rep.conclusive);
}

TEST_CASE("no-go conclusion survives boosting the packet") {
  // Frame independence of the sign: audit the boosted image of the standard
  // packet with rules adapted to it.
  const auto packet = standard_packet(Spin(0));
  const Eigen::Vector3d beta(0, 0, 0.4);
  const AmplitudePtr boosted = boost(packet, beta);
  std::vector<QuadratureRule> rules = {rule_for_boosted_packet(*packet, beta, 10),
                                       rule_for_boosted_packet(*packet, beta, 14)};
  AuditOptions opt;
  const AuditReport rep = nogo_engine(Spin(0), boosted, rules, std::nullopt, opt);
  CHECK(rep.deficit < 0.0);
  CHECK(rep.separation > 100.0);
}

TEST_CASE("dirac control rejects non-spin-1/2 packets") {
  CHECK_THROWS_AS(run_dirac_control(standard_packet(Spin(0))), std::domain_error);
}

TEST_CASE("boosted rule carries the packet norm") {
  const auto packet = standard_packet(Spin(1));
  const Eigen::Vector3d beta(0.2, 0, 0.4);
  const AmplitudePtr boosted = boost(packet, beta);
  const QuadratureRule q = rule_for_boosted_packet(*packet, beta, 16);
  CHECK(norm_squared(*boosted, q) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("manifest covariance witness") {
  std::mt19937_64 rng(7);
  const WitnessReport rep =
      manifest_covariance_witness(Eigen::Vector3d(0, 0, 0.5), 200, rng);
  CHECK(rep.samples == 200);
  // Diagonal pairs transform covariantly; generic pairs do not.
  CHECK(rep.diag_rel_violation < 1e-12);
  CHECK(rep.max_rel_violation > 0.01);
}

TEST_CASE("spin sweep shares the run_nogo code path") {
  AuditOptions opt;
  opt.levels = {10, 14};
  const auto sweep = run_general_spin_sweep({Spin(0)}, 0.5, opt);
  const AuditReport direct = run_nogo(Spin(0), standard_packet(Spin(0)), opt);
  REQUIRE(sweep.size() == 1);
  CHECK(sweep[0].deficit == direct.deficit);
  CHECK(sweep[0].lhs == direct.lhs);
}

TEST_CASE("check suite runs clean at reduced settings") {
  CheckConfig cfg;
  cfg.samples = 25;
  cfg.nodes = 12;
  cfg.nodes_fine = 20;
  int failures = 0;
  for (const CheckResult& r : run_all_checks(cfg))
    if (!r.pass) ++failures;
  CHECK(failures == 0);
}
