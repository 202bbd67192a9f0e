#include "nwc/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace nwc {

namespace {

// Golub-Welsch: eigenvalues of the symmetric Jacobi matrix are the nodes,
// weights are mu0 times the squared first eigenvector components.
Rule1D golub_welsch(const Eigen::VectorXd& offdiag, double mu0) {
  const int n = static_cast<int>(offdiag.size()) + 1;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) J(k, k + 1) = J(k + 1, k) = offdiag[k];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  Rule1D r;
  r.x.resize(n);
  r.w.resize(n);
  for (int k = 0; k < n; ++k) {
    r.x[k] = es.eigenvalues()[k];
    const double v0 = es.eigenvectors()(0, k);
    r.w[k] = mu0 * v0 * v0;
  }
  return r;
}

}  // namespace

Rule1D gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: n >= 1 required");
  Eigen::VectorXd b(n - 1);
  for (int k = 1; k < n; ++k) b[k - 1] = std::sqrt(0.5 * k);
  return golub_welsch(b, std::sqrt(M_PI));
}

Rule1D gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
  Eigen::VectorXd b(n - 1);
  for (int k = 1; k < n; ++k) b[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  return golub_welsch(b, 2.0);
}

QuadratureRule QuadratureRule::gauss_hermite3(const Eigen::Vector3d& center,
                                              const Eigen::Vector3d& sigma,
                                              int nodes_per_axis) {
  const Rule1D gh = gauss_hermite(nodes_per_axis);
  const int n = nodes_per_axis;
  // Per-axis: p = center + sqrt(2) sigma x, dp = sqrt(2) sigma dx, with the
  // e^{-x^2} weight cancelled so the rule approximates a plain integral.
  std::vector<std::vector<double>> px(3), pw(3);
  for (int ax = 0; ax < 3; ++ax) {
    px[ax].resize(n);
    pw[ax].resize(n);
    for (int k = 0; k < n; ++k) {
      px[ax][k] = center[ax] + M_SQRT2 * sigma[ax] * gh.x[k];
      pw[ax][k] = M_SQRT2 * sigma[ax] * gh.w[k] * std::exp(gh.x[k] * gh.x[k]);
    }
  }
  QuadratureRule q;
  q.nodes.reserve(static_cast<std::size_t>(n) * n * n);
  q.weights.reserve(q.nodes.capacity());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        q.nodes.emplace_back(px[0][i], px[1][j], px[2][k]);
        q.weights.push_back(pw[0][i] * pw[1][j] * pw[2][k]);
      }
  return q;
}

ReducedTwoPointRule ReducedTwoPointRule::make(int n_radial, int n_angular,
                                              double scale) {
  ReducedTwoPointRule rule;
  const Rule1D gl = gauss_legendre(n_radial);
  rule.radial.x.resize(n_radial);
  rule.radial.w.resize(n_radial);
  for (int k = 0; k < n_radial; ++k) {
    const double t = gl.x[k];
    const double r = scale * (1.0 + t) / (1.0 - t);
    const double dr = 2.0 * scale / ((1.0 - t) * (1.0 - t));
    rule.radial.x[k] = r;
    rule.radial.w[k] = gl.w[k] * dr * r * r;
  }
  rule.angular = gauss_legendre(n_angular);
  return rule;
}

double ReducedTwoPointRule::integrate(
    const std::function<double(double, double, double)>& kernel,
    const std::function<double(double)>& radial_profile) const {
  const int nr = static_cast<int>(radial.x.size());
  const int nc = static_cast<int>(angular.x.size());
  std::vector<double> f(nr);
  for (int a = 0; a < nr; ++a) f[a] = radial_profile(radial.x[a]);
  double total = 0.0;
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b) {
      double ang = 0.0;
      for (int c = 0; c < nc; ++c)
        ang += angular.w[c] * kernel(radial.x[a], radial.x[b], angular.x[c]);
      total += radial.w[a] * radial.w[b] * f[a] * f[b] * ang;
    }
  return 8.0 * M_PI * M_PI * total;
}

}  // namespace nwc
