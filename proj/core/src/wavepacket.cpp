#include "nwc/wavepacket.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace nwc {

namespace {
const complexd kI{0.0, 1.0};
}

Eigen::VectorXcd MomentumAmplitude::gradient(const Eigen::Vector3d&, int) const {
  throw std::logic_error("amplitude has no analytic gradient");
}

Eigen::VectorXcd gradient_or_fd(const MomentumAmplitude& psi,
                                const Eigen::Vector3d& p, int axis) {
  if (psi.has_gradient()) return psi.gradient(p, axis);
  const double h = std::max(1e-5, 1e-5 * p.norm());
  auto central = [&](double step) {
    Eigen::Vector3d dp = Eigen::Vector3d::Zero();
    dp[axis] = step;
    return ((psi.eval(p + dp) - psi.eval(p - dp)) / (2.0 * step)).eval();
  };
  const Eigen::VectorXcd d1 = central(h);
  const Eigen::VectorXcd d2 = central(h / 2.0);
  return (4.0 * d2 - d1) / 3.0;
}

// --- GaussianPacket --------------------------------------------------------

GaussianPacket::GaussianPacket(Spin s, const Eigen::Vector3d& p0,
                               const Eigen::Vector3d& sigma,
                               Eigen::VectorXcd spin_weights,
                               const Eigen::Vector3d& x0)
    : MomentumAmplitude(s), p0_(p0), sigma_(sigma), x0_(x0),
      c_(std::move(spin_weights)) {
  if (c_.size() != s.dim())
    throw std::invalid_argument("spin weight count must be 2s+1");
  if ((sigma_.array() <= 0.0).any())
    throw std::invalid_argument("packet widths must be positive");
  const double cn = c_.norm();
  if (cn == 0.0) throw std::invalid_argument("spin weights must not vanish");
  c_ /= cn;
  norm_const_ = 1.0;
  for (int i = 0; i < 3; ++i)
    norm_const_ *= std::pow(2.0 * M_PI * sigma_[i] * sigma_[i], -0.25);
}

Eigen::VectorXcd GaussianPacket::eval(const Eigen::Vector3d& p) const {
  double expo = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double d = p[i] - p0_[i];
    expo -= d * d / (4.0 * sigma_[i] * sigma_[i]);
  }
  const complexd scalar =
      norm_const_ * std::exp(complexd(expo, 0.0) - kI * p.dot(x0_));
  return c_ * scalar;
}

Eigen::VectorXcd GaussianPacket::gradient(const Eigen::Vector3d& p,
                                          int axis) const {
  const complexd factor(-(p[axis] - p0_[axis]) / (2.0 * sigma_[axis] * sigma_[axis]),
                        -x0_[axis]);
  return factor * eval(p);
}

bool GaussianPacket::is_radial() const {
  return p0_.isZero(0.0) && x0_.isZero(0.0) &&
         sigma_.x() == sigma_.y() && sigma_.y() == sigma_.z();
}

// --- Transform wrappers ----------------------------------------------------

namespace {

class Translated final : public MomentumAmplitude {
 public:
  Translated(AmplitudePtr base, const FourVector& a)
      : MomentumAmplitude(base->spin()), base_(std::move(base)), a_(a) {}

  Eigen::VectorXcd eval(const Eigen::Vector3d& p) const override {
    const double phase = energy_of(p) * a_.t - p.dot(a_.r);
    return base_->eval(p) * std::exp(kI * phase);
  }
  bool has_gradient() const override { return base_->has_gradient(); }
  Eigen::VectorXcd gradient(const Eigen::Vector3d& p, int axis) const override {
    const double w = energy_of(p);
    const double phase = w * a_.t - p.dot(a_.r);
    const complexd dphase = kI * (p[axis] / w * a_.t - a_.r[axis]);
    return (base_->gradient(p, axis) + dphase * base_->eval(p)) *
           std::exp(kI * phase);
  }
  std::string family() const override { return "translated:" + base_->family(); }

 private:
  AmplitudePtr base_;
  FourVector a_;
};

class Rotated final : public MomentumAmplitude {
 public:
  Rotated(AmplitudePtr base, const SpinorMap& R)
      : MomentumAmplitude(base->spin()), base_(std::move(base)),
        D_(wigner_D(spin(), R)),
        Rinv_(covering_to_lorentz(R).m.block<3, 3>(1, 1).transpose()) {}

  Eigen::VectorXcd eval(const Eigen::Vector3d& p) const override {
    return D_ * base_->eval(Rinv_ * p);
  }
  bool has_gradient() const override { return base_->has_gradient(); }
  Eigen::VectorXcd gradient(const Eigen::Vector3d& p, int axis) const override {
    const Eigen::Vector3d q = Rinv_ * p;
    Eigen::VectorXcd g = Eigen::VectorXcd::Zero(dim());
    for (int j = 0; j < 3; ++j)
      if (Rinv_(j, axis) != 0.0) g += Rinv_(j, axis) * base_->gradient(q, j);
    return D_ * g;
  }
  std::string family() const override { return "rotated:" + base_->family(); }

 private:
  AmplitudePtr base_;
  Eigen::MatrixXcd D_;
  Eigen::Matrix3d Rinv_;  // rotation of momenta, inverse of R's SO(3) image
};

class Boosted final : public MomentumAmplitude {
 public:
  Boosted(AmplitudePtr base, const Eigen::Vector3d& beta0)
      : MomentumAmplitude(base->spin()), base_(std::move(base)), beta0_(beta0),
        gamma0_(1.0 / std::sqrt(1.0 - beta0.squaredNorm())),
        A_(boost_spinor(beta0)),
        Linv_(boost_from_velocity(beta0).inverse()) {}

  Eigen::VectorXcd eval(const Eigen::Vector3d& p) const override {
    const FourVector P = FourVector::on_shell(p);
    const FourVector Q = apply(Linv_, P);
    const double pref = std::sqrt(gamma0_ * (1.0 - beta0_.dot(P.r / P.t)));
    // W(p <- Lambda^-1 p), evaluated in SL(2,C).
    const SpinorMap W =
        standard_boost_spinor(P).inverse() * A_ * standard_boost_spinor(Q);
    const Eigen::VectorXcd base = base_->eval(Q.r);
    if (spin().twice_s == 0) return pref * base;
    if (spin().twice_s == 1) return pref * (W.m * base);
    return pref * (wigner_D(spin(), W) * base);
  }
  std::string family() const override { return "boosted:" + base_->family(); }

 private:
  AmplitudePtr base_;
  Eigen::Vector3d beta0_;
  double gamma0_;
  SpinorMap A_;
  LorentzTransform Linv_;
};

class ParityFlipped final : public MomentumAmplitude {
 public:
  ParityFlipped(AmplitudePtr base, double eta)
      : MomentumAmplitude(base->spin()), base_(std::move(base)), eta_(eta) {}

  Eigen::VectorXcd eval(const Eigen::Vector3d& p) const override {
    return eta_ * base_->eval(-p);
  }
  bool has_gradient() const override { return base_->has_gradient(); }
  Eigen::VectorXcd gradient(const Eigen::Vector3d& p, int axis) const override {
    return -eta_ * base_->gradient(-p, axis);
  }
  std::string family() const override { return "parity:" + base_->family(); }

 private:
  AmplitudePtr base_;
  double eta_;
};

class TimeReversed final : public MomentumAmplitude {
 public:
  explicit TimeReversed(AmplitudePtr base)
      : MomentumAmplitude(base->spin()), base_(std::move(base)) {}

  Eigen::VectorXcd eval(const Eigen::Vector3d& p) const override {
    return phased(base_->eval(-p));
  }
  bool has_gradient() const override { return base_->has_gradient(); }
  Eigen::VectorXcd gradient(const Eigen::Vector3d& p, int axis) const override {
    return -phased(base_->gradient(-p, axis));
  }
  std::string family() const override { return "timerev:" + base_->family(); }

 private:
  // Psi'_m = (-1)^{s+m} Psi^*_{-m}; index of -m is 2s - k.
  Eigen::VectorXcd phased(const Eigen::VectorXcd& v) const {
    const int n = dim();
    Eigen::VectorXcd out(n);
    for (int k = 0; k < n; ++k) {
      const double sign = ((spin().twice_s - k) % 2 == 0) ? 1.0 : -1.0;
      out[k] = sign * std::conj(v[n - 1 - k]);
    }
    return out;
  }

  AmplitudePtr base_;
};

}  // namespace

AmplitudePtr translate(AmplitudePtr psi, const FourVector& a) {
  return std::make_shared<Translated>(std::move(psi), a);
}
AmplitudePtr rotate(AmplitudePtr psi, const SpinorMap& R) {
  return std::make_shared<Rotated>(std::move(psi), R);
}
AmplitudePtr boost(AmplitudePtr psi, const Eigen::Vector3d& beta0) {
  if (beta0.squaredNorm() >= 1.0)
    throw std::domain_error("boost velocity must satisfy |beta| < 1");
  return std::make_shared<Boosted>(std::move(psi), beta0);
}
AmplitudePtr parity(AmplitudePtr psi, double eta) {
  return std::make_shared<ParityFlipped>(std::move(psi), eta);
}
AmplitudePtr time_reversal(AmplitudePtr psi) {
  return std::make_shared<TimeReversed>(std::move(psi));
}

// --- Quadrature functionals ------------------------------------------------

complexd inner_product(const MomentumAmplitude& phi, const MomentumAmplitude& psi,
                       const QuadratureRule& q) {
  if (phi.spin().twice_s != psi.spin().twice_s)
    throw std::domain_error("inner_product: mismatched spin");
  complexd acc = 0.0;
  for (std::size_t k = 0; k < q.size(); ++k)
    acc += q.weights[k] * phi.eval(q.nodes[k]).dot(psi.eval(q.nodes[k]));
  return acc;
}

double norm_squared(const MomentumAmplitude& psi, const QuadratureRule& q) {
  double acc = 0.0;
  for (std::size_t k = 0; k < q.size(); ++k)
    acc += q.weights[k] * psi.eval(q.nodes[k]).squaredNorm();
  return acc;
}

FourVector expectation_four_momentum(const MomentumAmplitude& psi,
                                     const QuadratureRule& q) {
  Eigen::Vector4d acc = Eigen::Vector4d::Zero();
  for (std::size_t k = 0; k < q.size(); ++k) {
    const double rho = q.weights[k] * psi.eval(q.nodes[k]).squaredNorm();
    acc += rho * FourVector::on_shell(q.nodes[k]).vec();
  }
  return FourVector::from_vec(acc);
}

double expectation_sz(const MomentumAmplitude& psi, const QuadratureRule& q) {
  const Spin s = psi.spin();
  double acc = 0.0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    const Eigen::VectorXcd v = psi.eval(q.nodes[k]);
    for (int m = 0; m < s.dim(); ++m)
      acc += q.weights[k] * std::norm(v[m]) * s.m_of(m);
  }
  return acc;
}

PositionAmplitude::PositionAmplitude(const MomentumAmplitude& psi, double t,
                                     const QuadratureRule& q)
    : t_(t), dim_(psi.dim()), nodes_(q.nodes) {
  const double ft = std::pow(2.0 * M_PI, -1.5);
  omega_.reserve(q.size());
  wpsi_.reserve(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) {
    omega_.push_back(energy_of(q.nodes[k]));
    wpsi_.push_back(ft * q.weights[k] * psi.eval(q.nodes[k]));
  }
}

Eigen::VectorXcd PositionAmplitude::eval(const Eigen::Vector3d& x) const {
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(dim_);
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    const double phase = -(omega_[k] * t_ - nodes_[k].dot(x));
    acc += wpsi_[k] * std::exp(kI * phase);
  }
  return acc;
}

double quadrature_gate_defect(const MomentumAmplitude& psi,
                              const QuadratureRule& coarse,
                              const QuadratureRule& fine) {
  return std::abs(norm_squared(psi, coarse) - norm_squared(psi, fine));
}

}  // namespace nwc
