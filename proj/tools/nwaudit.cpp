// nwaudit: command-line front end for the relativistic wave-packet audits.
//
// Subcommands:
//   check          run the full invariant suite (group laws, spinor
//                  identities, unitarity, generator consistency, ...)
//   nogo           measure the candidate-current commutator deficit
//   dirac-control  positive control with the Dirac current
//   density        emit |psi_m(t, x)|^2 on a line / plane / volume grid
//
// Every command writes report.txt (a key = value run manifest) into --out.
// Everything above the "# volatile" marker is byte-identical across reruns
// with the same config and threads = 1; timing lines live below the marker.
//
// Exit codes: 0 pass, 1 assertion failure, 2 inconclusive numerics,
// 64 bad usage.

#include <omp.h>

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nwc/audit.hpp"
#include "nwc/checks.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kPass = 0, kFail = 1, kInconclusive = 2, kUsage = 64 };

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_vec(const Eigen::Vector3d& v) {
  return fmt(v.x()) + "," + fmt(v.y()) + "," + fmt(v.z());
}

// Shared packet / quadrature / run options.
struct Options {
  double spin = 0.5;
  std::vector<double> sigma = {0.5};
  std::vector<double> p0 = {0.0, 0.0, 0.0};
  std::vector<double> weights;  // default: highest weight
  std::vector<double> beta0 = {0.0, 0.0, 0.0};
  std::vector<int> levels = {16, 24};
  int nodes = 16;
  int threads = 0;  // 0: leave the OpenMP default (all cores)
  std::uint64_t seed = 12345;
  int samples = 200;
  std::string out = ".";
  bool compare_analytic = false;
  std::vector<double> sweep;  // spins for the sweep
  double tol_analytic = 1e-6;
  double tol_control = 1e-5;

  // density grid
  std::string axes = "z";
  double grid_min = -10.0, grid_max = 10.0;
  int grid_points = 201;
  double time = 0.0;

  nwc::Spin spin_value() const { return nwc::Spin::of(spin); }

  Eigen::Vector3d sigma_vec() const {
    if (sigma.size() == 1) return Eigen::Vector3d::Constant(sigma[0]);
    return Eigen::Vector3d(sigma.at(0), sigma.at(1), sigma.at(2));
  }
  Eigen::Vector3d p0_vec() const {
    return Eigen::Vector3d(p0.at(0), p0.at(1), p0.at(2));
  }
  Eigen::Vector3d beta0_vec() const {
    return Eigen::Vector3d(beta0.at(0), beta0.at(1), beta0.at(2));
  }
  Eigen::VectorXcd weights_vec(nwc::Spin s) const {
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(s.dim());
    if (weights.empty()) {
      w[0] = 1.0;
    } else {
      if (static_cast<int>(weights.size()) != s.dim())
        throw CLI::ValidationError("--weights",
                                   "expected " + std::to_string(s.dim()) +
                                       " entries for spin " + fmt(spin));
      for (int k = 0; k < s.dim(); ++k) w[k] = weights[k];
    }
    return w;
  }
  std::shared_ptr<const nwc::GaussianPacket> packet(nwc::Spin s) const {
    return std::make_shared<nwc::GaussianPacket>(s, p0_vec(), sigma_vec(),
                                                 weights_vec(s));
  }

  void echo(std::ostream& os) const {
    os << "spin = " << fmt(spin) << "\n";
    os << "sigma =";
    for (double v : sigma) os << " " << fmt(v);
    os << "\np0 = " << fmt_vec(p0_vec()) << "\n";
    os << "beta0 = " << fmt_vec(beta0_vec()) << "\n";
    os << "nodes = " << nodes << "\nlevels =";
    for (int n : levels) os << " " << n;
    os << "\nseed = " << seed << "\nsamples = " << samples << "\n";
    os << "threads = " << threads << "\n";
  }
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--spin", o.spin, "particle spin (0, 0.5, 1, ...)");
  cmd->add_option("--sigma", o.sigma,
                  "packet width, one value (radial) or three (per axis)")
      ->expected(1, 3)
      ->delimiter(',');
  cmd->add_option("--p0", o.p0, "packet center momentum px,py,pz")
      ->expected(3)
      ->delimiter(',');
  cmd->add_option("--weights", o.weights, "spin weights, 2s+1 reals")
      ->delimiter(',');
  cmd->add_option("--nodes", o.nodes, "quadrature nodes per axis")
      ->check(CLI::Range(8, 64));
  cmd->add_option("--levels", o.levels, "refinement levels, nodes per axis")
      ->delimiter(',');
  cmd->add_option("--threads", o.threads, "OpenMP worker threads (0 = all)");
  cmd->add_option("--seed", o.seed, "seed for property-test sampling");
  cmd->add_option("--out", o.out, "output directory for report files");
}

std::ofstream open_out(const Options& o, const std::string& name) {
  std::filesystem::create_directories(o.out);
  std::ofstream f(std::filesystem::path(o.out) / name);
  if (!f) throw std::runtime_error("cannot open " + name + " in " + o.out);
  return f;
}

std::ofstream open_manifest(const Options& o, const std::string& command) {
  std::ofstream f = open_out(o, "report.txt");
  f << "tool = nwaudit " << kVersion << "\n";
  f << "compiler = " << __VERSION__ << "\n";
  f << "eigen = " << EIGEN_WORLD_VERSION << "." << EIGEN_MAJOR_VERSION << "."
    << EIGEN_MINOR_VERSION << "\n";
  f << "command = " << command << "\n";
  o.echo(f);
  return f;
}

void apply_threads(const Options& o) {
  if (o.threads > 0) omp_set_num_threads(o.threads);
}

// ---------------------------------------------------------------------------

int cmd_check(const Options& o) {
  apply_threads(o);
  nwc::CheckConfig cfg;
  cfg.seed = o.seed;
  cfg.nodes = o.nodes;
  cfg.nodes_fine = o.levels.empty() ? o.nodes + 8 : o.levels.back();
  cfg.sigma = o.sigma[0];
  cfg.samples = o.samples;

  const double t0 = omp_get_wtime();
  const auto results = nwc::run_all_checks(cfg);
  const double wall = omp_get_wtime() - t0;

  std::ofstream man = open_manifest(o, "check");
  std::ofstream csv = open_out(o, "results.csv");
  csv << "suite,defect,tolerance,pass\n";
  bool all_pass = true;
  std::string first_fail;
  for (const auto& r : results) {
    const char* verdict = r.pass ? "pass" : "FAIL";
    std::printf("%-32s defect %-13.6g tol %-8.1g %s\n", r.name.c_str(),
                r.defect, r.tolerance, verdict);
    man << "suite." << r.name << " = " << fmt(r.defect) << " / "
        << fmt(r.tolerance) << " " << verdict << "\n";
    csv << r.name << "," << fmt(r.defect) << "," << fmt(r.tolerance) << ","
        << verdict << "\n";
    if (!r.pass && all_pass) {
      all_pass = false;
      first_fail = r.name;
    }
  }
  man << "suites = " << results.size() << "\n";
  man << "overall = " << (all_pass ? "pass" : "FAIL") << "\n";
  man << "# volatile\nwall_seconds = " << fmt(wall) << "\n";
  if (!all_pass) {
    std::fprintf(stderr, "check: FAILED suite %s\n", first_fail.c_str());
    return kFail;
  }
  std::printf("check: %zu suites passed\n", results.size());
  return kPass;
}

int cmd_nogo(const Options& o) {
  apply_threads(o);
  nwc::AuditOptions opt;
  opt.levels = o.levels;

  std::vector<double> spins =
      o.sweep.empty() ? std::vector<double>{o.spin} : o.sweep;
  std::vector<double> sigmas(o.sigma.begin(), o.sigma.end());

  std::ofstream man = open_manifest(o, "nogo");
  std::ofstream csv = open_out(o, "results.csv");
  csv << "spin,sigma,lhs,rhs,deficit,analytic_deficit,errbar\n";

  int worst = kPass;
  double wall = 0.0;
  for (double sv : spins) {
    const nwc::Spin s = nwc::Spin::of(sv);
    for (double sigma : sigmas) {
      Options po = o;
      po.spin = sv;
      po.sigma = {sigma};
      const auto packet = po.packet(s);
      const nwc::AuditReport rep = nwc::run_nogo(s, packet, opt);
      wall += rep.wall_seconds;

      csv << fmt(sv) << "," << fmt(sigma) << "," << fmt(rep.lhs) << ","
          << fmt(rep.rhs) << "," << fmt(rep.deficit) << ","
          << (rep.has_analytic ? fmt(rep.analytic_deficit) : std::string("-"))
          << "," << fmt(rep.errbar) << "\n";

      std::ostringstream key;
      key << "nogo.s" << fmt(sv) << ".sigma" << fmt(sigma);
      man << key.str() << ".deficit = " << fmt(rep.deficit) << "\n";
      man << key.str() << ".errbar = " << fmt(rep.errbar) << "\n";
      man << key.str() << ".separation = " << fmt(rep.separation) << "\n";
      man << key.str() << ".gate_defect = " << fmt(rep.gate_defect) << "\n";
      if (rep.has_analytic)
        man << key.str() << ".analytic_rel_err = " << fmt(rep.analytic_rel_err)
            << "\n";
      man << key.str() << ".conclusive = " << (rep.conclusive ? "yes" : "no")
          << "\n";

      std::printf(
          "nogo s=%g sigma=%g: deficit %.10g errbar %.3g separation %.3g%s\n",
          sv, sigma, rep.deficit, rep.errbar, rep.separation,
          rep.conclusive ? "" : "  [INCONCLUSIVE]");
      if (!rep.conclusive) worst = std::max(worst, int(kInconclusive));
      if (rep.deficit >= 0.0) worst = std::max(worst, int(kFail));
      if (o.compare_analytic && rep.has_analytic &&
          rep.analytic_rel_err > o.tol_analytic) {
        std::printf("  analytic mismatch: rel err %.3g > %.1g\n",
                    rep.analytic_rel_err, o.tol_analytic);
        worst = std::max(worst, int(kFail));
      }
    }
  }
  man << "exit = " << worst << "\n";
  man << "# volatile\nwall_seconds = " << fmt(wall) << "\n";
  return worst;
}

int cmd_dirac_control(const Options& o) {
  apply_threads(o);
  const nwc::Spin s(1);
  const auto packet = o.packet(s);
  const nwc::DiracControlReport rep =
      nwc::run_dirac_control(packet, o.beta0_vec(), o.nodes);

  std::ofstream man = open_manifest(o, "dirac-control");
  std::ofstream csv = open_out(o, "results.csv");
  csv << "i,j,comm_KiJj,target\n";
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      csv << i << "," << j << "," << fmt(rep.second_set(i, j)) << ","
          << fmt(i == j ? rep.j0 : 0.0) << "\n";

  man << "j0 = " << fmt(rep.j0) << "\n";
  for (int i = 0; i < 3; ++i) {
    man << "first_set_comm." << i << " = " << fmt(rep.first_set_comm[i])
        << "\n";
    man << "ji." << i << " = " << fmt(rep.ji[i]) << "\n";
  }
  man << "max_rel_second = " << fmt(rep.max_rel_second) << "\n";
  man << "max_rel_first = " << fmt(rep.max_rel_first) << "\n";
  man << "gate_defect = " << fmt(rep.gate_defect) << "\n";
  const bool ok = rep.pass(o.tol_control);
  man << "overall = " << (ok ? "pass" : "FAIL") << "\n";
  man << "# volatile\nwall_seconds = " << fmt(rep.wall_seconds) << "\n";

  std::printf("dirac-control: <J0> = %.10g\n", rep.j0);
  std::printf("  max |<i[K_i,J_j]> - delta_ij <J0>| / <J0> = %.3g\n",
              rep.max_rel_second);
  std::printf("  max |<i[K_i,J0]> - <J_i>| / <J0>          = %.3g\n",
              rep.max_rel_first);
  std::printf("  %s (tolerance %.1g)\n", ok ? "pass" : "FAIL", o.tol_control);
  return ok ? kPass : kFail;
}

int cmd_density(const Options& o) {
  apply_threads(o);
  for (char c : o.axes)
    if (c != 'x' && c != 'y' && c != 'z')
      throw CLI::ValidationError("--axes", "expects a subset of \"xyz\"");
  const int dims = static_cast<int>(o.axes.size());
  double total_points = 1.0;
  for (int d = 0; d < dims; ++d) total_points *= o.grid_points;
  if (total_points > 1e7) {
    std::fprintf(stderr, "density: grid of %.3g points refused (max 1e7)\n",
                 total_points);
    return kUsage;
  }

  const nwc::Spin s = o.spin_value();
  const auto packet = o.packet(s);
  nwc::AmplitudePtr psi = packet;
  nwc::QuadratureRule rule =
      nwc::rule_for_boosted_packet(*packet, o.beta0_vec(), o.nodes);
  if (!o.beta0_vec().isZero(0.0)) psi = nwc::boost(psi, o.beta0_vec());
  const nwc::PositionAmplitude pos(*psi, o.time, rule);

  const double step =
      o.grid_points > 1 ? (o.grid_max - o.grid_min) / (o.grid_points - 1) : 0.0;
  const auto coord = [&](int k) { return o.grid_min + step * k; };
  const int axis_index[3] = {
      static_cast<int>(o.axes.find('x')), static_cast<int>(o.axes.find('y')),
      static_cast<int>(o.axes.find('z'))};

  std::ofstream man = open_manifest(o, "density");
  std::ofstream csv = open_out(o, "density.csv");
  csv << "x,y,z,m,density\n";
  double integral = 0.0;
  std::vector<int> idx(dims, 0);
  const double t0 = omp_get_wtime();
  while (true) {
    Eigen::Vector3d x = Eigen::Vector3d::Zero();
    for (int a = 0; a < 3; ++a)
      if (axis_index[a] >= 0) x[a] = coord(idx[axis_index[a]]);
    const Eigen::VectorXcd amp = pos.eval(x);
    for (int m = 0; m < amp.size(); ++m)
      csv << fmt(x.x()) << "," << fmt(x.y()) << "," << fmt(x.z()) << ","
          << fmt(s.m_of(m)) << "," << fmt(std::norm(amp[m])) << "\n";
    integral += amp.squaredNorm();
    int d = dims - 1;
    for (; d >= 0; --d) {
      if (++idx[d] < o.grid_points) break;
      idx[d] = 0;
    }
    if (d < 0) break;
  }
  integral *= std::pow(step, dims);
  csv << "# integrated_density," << fmt(integral) << "\n";
  man << "axes = " << o.axes << "\n";
  man << "grid = " << o.grid_points << " in [" << fmt(o.grid_min) << ", "
      << fmt(o.grid_max) << "] per axis\n";
  man << "t = " << fmt(o.time) << "\n";
  man << "integrated_density = " << fmt(integral) << "\n";
  man << "# volatile\nwall_seconds = " << fmt(omp_get_wtime() - t0) << "\n";
  std::printf("density: wrote %s grid, integrated density %.6g\n",
              o.axes.c_str(), integral);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"audits of relativistic wave-packet currents"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "flat key = value config file");
  app.require_subcommand(1);

  Options o;
  CLI::App* check = app.add_subcommand("check", "run the invariant suites");
  add_common(check, o);
  check->add_option("--samples", o.samples, "random draws per suite");

  CLI::App* nogo =
      app.add_subcommand("nogo", "candidate-current commutator deficit");
  add_common(nogo, o);
  nogo->add_flag("--compare-analytic", o.compare_analytic,
                 "fail unless the deficit matches the closed-form kernel");
  nogo->add_option("--sweep", o.sweep, "list of spins to sweep")
      ->delimiter(',');
  nogo->add_option("--tol-analytic", o.tol_analytic,
                   "relative tolerance for --compare-analytic");

  CLI::App* dirac =
      app.add_subcommand("dirac-control", "Dirac-current positive control");
  add_common(dirac, o);
  dirac->add_option("--beta0", o.beta0, "boost velocity bx,by,bz")
      ->expected(3)
      ->delimiter(',');
  dirac->add_option("--tol-control", o.tol_control, "relative pass tolerance");

  CLI::App* density =
      app.add_subcommand("density", "position-space density on a grid");
  add_common(density, o);
  density->add_option("--beta0", o.beta0, "boost velocity bx,by,bz")
      ->expected(3)
      ->delimiter(',');
  density->add_option("--axes", o.axes, "grid axes: subset of xyz");
  density->add_option("--grid-min", o.grid_min, "grid lower bound");
  density->add_option("--grid-max", o.grid_max, "grid upper bound");
  density->add_option("--grid-points", o.grid_points, "points per axis")
      ->check(CLI::Range(1, 10000000));
  density->add_option("--time", o.time, "evaluation time t");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o);
    if (nogo->parsed()) return cmd_nogo(o);
    if (dirac->parsed()) return cmd_dirac_control(o);
    if (density->parsed()) return cmd_density(o);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "nwaudit: %s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "nwaudit: %s\n", e.what());
    return kFail;
  }
  return kUsage;
}
