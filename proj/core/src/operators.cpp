#include "nwc/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace nwc {

namespace {

const complexd kI{0.0, 1.0};
const double kMeasure = std::pow(2.0 * M_PI, -3);

Eigen::MatrixXcd spin_cross_term(const SpinRep& rep, const Eigen::Vector3d& p,
                                 int i) {
  const int j = (i + 1) % 3, k = (i + 2) % 3;
  return (rep.J[j] * p[k] - rep.J[k] * p[j]) / (energy_of(p) + kMass);
}

}  // namespace

KernelOperator candidate_j0_kernel(Spin s) {
  KernelOperator op;
  op.s = s;
  op.hermitian = true;
  op.k = [](const Eigen::Vector3d&, int ma, const Eigen::Vector3d&, int mb) {
    return ma == mb ? complexd(kMeasure) : complexd(0.0);
  };
  const int dim = s.dim();
  op.block = [dim](const Eigen::Vector3d&, const Eigen::Vector3d&,
                   Eigen::MatrixXcd& out) {
    out = kMeasure * Eigen::MatrixXcd::Identity(dim, dim);
  };
  return op;
}

KernelOperator candidate_j_spatial_kernel(Spin s, int axis) {
  const SpinRep& rep = spin_matrices(s);
  KernelOperator op;
  op.s = s;
  op.hermitian = true;
  auto make_block = [&rep, axis](const Eigen::Vector3d& pa, const Eigen::Vector3d& pb,
                                 Eigen::MatrixXcd& out) {
    const double conv = 0.5 * (pa[axis] / energy_of(pa) + pb[axis] / energy_of(pb));
    out = kMeasure *
          (conv * Eigen::MatrixXcd::Identity(rep.s.dim(), rep.s.dim()) +
           kI * (spin_cross_term(rep, pa, axis) - spin_cross_term(rep, pb, axis)));
  };
  op.block = make_block;
  op.k = [make_block, dim = s.dim()](const Eigen::Vector3d& pa, int ma,
                                     const Eigen::Vector3d& pb, int mb) {
    Eigen::MatrixXcd out(dim, dim);
    make_block(pa, pb, out);
    return out(ma, mb);
  };
  return op;
}

KernelOperator dirac_current_kernel(const FourVector& x, int mu) {
  KernelOperator op;
  op.s = Spin(1);
  op.hermitian = true;
  const Matrix4cd g0gmu = gamma_algebra().gamma[0] * gamma_algebra().gamma[mu];
  auto make_block = [g0gmu, x](const Eigen::Vector3d& pa, const Eigen::Vector3d& pb,
                               Eigen::MatrixXcd& out) {
    const double wa = energy_of(pa), wb = energy_of(pb);
    const double phase = (wa - wb) * x.t - (pa - pb).dot(x.r);
    const complexd pref =
        kMeasure / std::sqrt(wa * wb) * std::exp(kI * phase);
    const Vector4cd ua[2] = {dirac_u(FourVector(wa, pa), 0),
                             dirac_u(FourVector(wa, pa), 1)};
    const Vector4cd ub[2] = {dirac_u(FourVector(wb, pb), 0),
                             dirac_u(FourVector(wb, pb), 1)};
    for (int ma = 0; ma < 2; ++ma) {
      const Eigen::RowVector4cd left = ua[ma].adjoint() * g0gmu;
      for (int mb = 0; mb < 2; ++mb) out(ma, mb) = pref * (left * ub[mb])(0);
    }
  };
  op.block = make_block;
  op.k = [make_block](const Eigen::Vector3d& pa, int ma, const Eigen::Vector3d& pb,
                      int mb) {
    Eigen::MatrixXcd out(2, 2);
    make_block(pa, pb, out);
    return out(ma, mb);
  };
  return op;
}

KernelOperator deficit_kernel(Spin s) {
  if (s.twice_s != 0 && s.twice_s != 1)
    throw std::domain_error("deficit_kernel: closed form only for s = 0 or 1/2");
  const bool with_spin = (s.twice_s == 1);
  KernelOperator op;
  op.s = s;
  op.hermitian = true;
  auto bracket = [with_spin](const Eigen::Vector3d& pa, const Eigen::Vector3d& pb) {
    const double wa = energy_of(pa), wb = energy_of(pb);
    double v = 3.0 - 0.25 * (pa / wa - pb / wb).squaredNorm();
    if (with_spin)
      v -= 0.5 * (pa / (wa + kMass) - pb / (wb + kMass)).squaredNorm();
    return v;
  };
  op.k = [bracket](const Eigen::Vector3d& pa, int ma, const Eigen::Vector3d& pb,
                   int mb) {
    return ma == mb ? complexd(kMeasure * bracket(pa, pb)) : complexd(0.0);
  };
  const int dim = s.dim();
  op.block = [bracket, dim](const Eigen::Vector3d& pa, const Eigen::Vector3d& pb,
                            Eigen::MatrixXcd& out) {
    out = kMeasure * bracket(pa, pb) * Eigen::MatrixXcd::Identity(dim, dim);
  };
  return op;
}

namespace {

class GeneratorApplied final : public MomentumAmplitude {
 public:
  GeneratorApplied(AmplitudePtr base, int axis)
      : MomentumAmplitude(base->spin()), base_(std::move(base)), axis_(axis),
        rep_(&spin_matrices(spin())) {}

  Eigen::VectorXcd eval(const Eigen::Vector3d& p) const override {
    const double w = energy_of(p);
    const Eigen::VectorXcd v = base_->eval(p);
    const Eigen::VectorXcd g = gradient_or_fd(*base_, p, axis_);
    Eigen::VectorXcd out = -0.5 * kI * (2.0 * w * g + (p[axis_] / w) * v);
    if (spin().twice_s > 0) out += spin_cross_term(*rep_, p, axis_) * v;
    return out;
  }
  std::string family() const override { return "K" + std::to_string(axis_); }

 private:
  AmplitudePtr base_;
  int axis_;
  const SpinRep* rep_;
};

}  // namespace

AmplitudePtr boost_generator_apply(AmplitudePtr psi, int axis) {
  if (axis < 0 || axis > 2) throw std::invalid_argument("axis must be 0..2");
  return std::make_shared<GeneratorApplied>(std::move(psi), axis);
}

std::array<AmplitudePtr, 3> boost_generator_apply_all(AmplitudePtr psi) {
  return {boost_generator_apply(psi, 0), boost_generator_apply(psi, 1),
          boost_generator_apply(psi, 2)};
}

KernelApplied::KernelApplied(KernelOperator op, AmplitudePtr psi,
                             const QuadratureRule& q)
    : MomentumAmplitude(op.s), op_(std::move(op)), rule_(q) {
  if (op_.s.twice_s != psi->spin().twice_s)
    throw std::domain_error("apply_kernel: kernel/amplitude spin mismatch");
  const std::size_t n = q.size();
  src_.resize(n);
  for (std::size_t b = 0; b < n; ++b)
    src_[b] = q.weights[b] * psi->eval(q.nodes[b]);

  values_.resize(n);
  const int d = dim();
#pragma omp parallel
  {
    Eigen::MatrixXcd buf(d, d);
#pragma omp for schedule(static)
    for (long long a = 0; a < static_cast<long long>(n); ++a) {
      Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(d);
      if (op_.block) {
        for (std::size_t b = 0; b < n; ++b) {
          op_.block(rule_.nodes[a], rule_.nodes[b], buf);
          acc.noalias() += buf * src_[b];
        }
      } else {
        for (std::size_t b = 0; b < n; ++b)
          for (int ma = 0; ma < d; ++ma)
            for (int mb = 0; mb < d; ++mb)
              acc[ma] += op_.k(rule_.nodes[a], ma, rule_.nodes[b], mb) * src_[b][mb];
      }
      values_[a] = std::move(acc);
    }
  }
}

Eigen::VectorXcd KernelApplied::contract(const Eigen::Vector3d& pa) const {
  const int d = dim();
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(d);
  Eigen::MatrixXcd buf(d, d);
  for (std::size_t b = 0; b < rule_.size(); ++b) {
    if (op_.block) {
      op_.block(pa, rule_.nodes[b], buf);
      acc.noalias() += buf * src_[b];
    } else {
      for (int ma = 0; ma < d; ++ma)
        for (int mb = 0; mb < d; ++mb)
          acc[ma] += op_.k(pa, ma, rule_.nodes[b], mb) * src_[b][mb];
    }
  }
  return acc;
}

Eigen::VectorXcd KernelApplied::eval(const Eigen::Vector3d& p) const {
  return contract(p);
}

std::shared_ptr<const KernelApplied> apply_kernel(const KernelOperator& op,
                                                  AmplitudePtr psi,
                                                  const QuadratureRule& q) {
  return std::make_shared<KernelApplied>(op, std::move(psi), q);
}

complexd kernel_expectation(const KernelOperator& op, const AmplitudePtr& psi,
                            const QuadratureRule& q) {
  const auto applied = apply_kernel(op, psi, q);
  complexd acc = 0.0;
  for (std::size_t a = 0; a < q.size(); ++a)
    acc += q.weights[a] * psi->eval(q.nodes[a]).dot(applied->value_at_node(a));
  return acc;
}

double commutator_expectation(int axis, const KernelOperator& op,
                              const AmplitudePtr& psi, const QuadratureRule& q) {
  const AmplitudePtr kpsi = boost_generator_apply(psi, axis);
  const auto opsi = apply_kernel(op, psi, q);
  complexd z = 0.0;
  for (std::size_t a = 0; a < q.size(); ++a)
    z += q.weights[a] * kpsi->eval(q.nodes[a]).dot(opsi->value_at_node(a));
  return -2.0 * z.imag();
}

}  // namespace nwc
