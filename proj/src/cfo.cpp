#include "lieqrt/cfo.hpp"

#include <bit>
#include <cmath>

#include "lieqrt/error.hpp"
#include "lieqrt/linalg.hpp"
#include "lieqrt/purity.hpp"

namespace lieqrt {

namespace {

constexpr int kMaxSteps = 12;  // 2^N <= 4096

int bit(std::size_t k, int t) { return static_cast<int>((k >> t) & 1u); }

std::string outcome_label(std::size_t k, int steps) {
  std::string label(static_cast<std::size_t>(steps), '0');
  for (int t = 0; t < steps; ++t) label[t] = bit(k, t) ? '1' : '0';
  return label;
}

Operator weighted_sum(const LieRep& rep, const Eigen::VectorXd& h) {
  require(static_cast<std::size_t>(h.size()) == rep.generators.size(),
          ErrorKind::DimensionMismatch, "coefficient vector length differs from generator count");
  require(h.allFinite(), ErrorKind::InvalidInput, "coefficients must be finite");
  Operator a = Operator::Zero(rep.dim, rep.dim);
  for (std::size_t i = 0; i < rep.generators.size(); ++i) a += h(Index(i)) * rep.generators[i];
  return a;
}

void check_steps(int steps) {
  require(steps >= 1 && steps <= kMaxSteps, ErrorKind::InvalidInput,
          "number of steps must be in [1, 12]");
}

}  // namespace

IwasawaFactors iwasawa_sl2(const Operator& m) {
  require(m.rows() == 2 && m.cols() == 2, ErrorKind::DimensionMismatch,
          "iwasawa_sl2: expects a 2x2 matrix");
  require(m.allFinite(), ErrorKind::InvalidInput, "iwasawa_sl2: non-finite entries");
  require(sigma_min(m) > 1e-12, ErrorKind::Singular, "iwasawa_sl2: matrix is singular");

  IwasawaFactors f;
  f.det_root = std::sqrt(m.determinant());
  const QrFactors qr = qr_positive(Operator(m / f.det_root));
  const double r = qr.r(0, 0).real();
  f.u = qr.q;
  f.alpha = 2.0 * std::log(r);
  f.eta = qr.r(0, 1) / r;
  return f;
}

Operator reconstruct_sl2(const IwasawaFactors& f) {
  Operator cartan = Operator::Zero(2, 2);
  cartan(0, 0) = std::exp(0.5 * f.alpha);
  cartan(1, 1) = std::exp(-0.5 * f.alpha);
  Operator nil = Operator::Identity(2, 2);
  nil(0, 1) = f.eta;
  return f.u * cartan * nil;
}

EulerAngles su2_euler_zyz(const Operator& u) {
  require(u.rows() == 2 && u.cols() == 2, ErrorKind::DimensionMismatch,
          "su2_euler_zyz: expects a 2x2 matrix");
  const Complex p = u(0, 0);
  const Complex q = u(0, 1);
  const double arg_p = std::abs(p) > 0.0 ? std::arg(p) : 0.0;
  const double arg_q = std::abs(q) > 0.0 ? std::arg(q) : 0.0;
  return {arg_p + arg_q, 2.0 * std::atan2(std::abs(q), std::abs(p)), arg_p - arg_q};
}

Operator lift_to_spin(const IwasawaFactors& f, const LieRep& rep) {
  require(rep.is_su2() && !rep.raising_ops.empty(), ErrorKind::InvalidInput,
          "lift_to_spin: needs an su(2) irrep");
  const Operator& jy = rep.generators[1];
  const Operator& jz = rep.generators[2];
  const Operator& jp = rep.raising_ops.front();
  const Complex i(0, 1);
  const EulerAngles e = su2_euler_zyz(f.u);
  const Operator rot = mat_exp(Operator(i * e.a * jz)) * mat_exp(Operator(i * e.b * jy)) *
                       mat_exp(Operator(i * e.c * jz));
  return rot * mat_exp(Operator(f.alpha * jz)) * mat_exp(Operator(f.eta * jp));
}

Operator lift_to_spin(const IwasawaFactors& f, int two_s) {
  return lift_to_spin(f, su2_rep(two_s));
}

Operator cfo_element(const LieRep& rep, const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const auto n = static_cast<Index>(rep.generators.size());
  require(a.size() == n && b.size() == n, ErrorKind::DimensionMismatch,
          "cfo_element: coefficient count differs from generator count");
  const Complex i(0, 1);
  Operator x = Operator::Zero(rep.dim, rep.dim);
  for (Index k = 0; k < n; ++k) x += (Complex(a(k), b(k)) * i) * rep.generators[k];
  return mat_exp(x);
}

Operator sample_cfo_element(const LieRep& rep, Rng& rng, double scale) {
  require(scale > 0.0 && std::isfinite(scale), ErrorKind::InvalidInput,
          "sample_cfo_element: scale must be positive");
  const auto n = static_cast<Index>(rep.generators.size());
  Eigen::VectorXd a(n), b(n);
  for (Index k = 0; k < n; ++k) {
    a(k) = rng.uniform(-scale, scale);
    b(k) = rng.uniform(-scale, scale);
  }
  return cfo_element(rep, a, b);
}

KrausChannel weak_meas_kraus(const LieRep& rep, const Eigen::VectorXd& h, double epsilon,
                             int steps) {
  check_steps(steps);
  require(std::isfinite(epsilon), ErrorKind::InvalidInput, "weak_meas_kraus: epsilon");
  const Operator a = epsilon * weighted_sum(rep, h);

  // Every factor is a function of the same Hermitian A: work in its eigenbasis.
  Eigen::SelfAdjointEigenSolver<Operator> es(((a + a.adjoint()) * 0.5).eval());
  const Eigen::VectorXd& lambda = es.eigenvalues();
  const Operator& v = es.eigenvectors();
  const Eigen::ArrayXd c = lambda.array().cos();
  const Eigen::ArrayXd s = lambda.array().sin();
  const Eigen::ArrayXd f0 = c - s;
  const Eigen::ArrayXd f1 = c + s;
  const double prefactor = std::pow(2.0, -0.5 * steps);

  const std::size_t outcomes = std::size_t(1) << steps;
  KrausChannel ch;
  ch.epsilon = epsilon;
  ch.steps = steps;
  ch.h = {h};
  ch.kraus.reserve(outcomes);
  ch.labels.reserve(outcomes);
  Eigen::ArrayXd completeness = Eigen::ArrayXd::Zero(lambda.size());
  for (std::size_t k = 0; k < outcomes; ++k) {
    Eigen::ArrayXd f = Eigen::ArrayXd::Constant(lambda.size(), prefactor);
    for (int t = 0; t < steps; ++t) f *= bit(k, t) ? f1 : f0;
    completeness += f.square();
    ch.kraus.push_back(v * f.matrix().cast<Complex>().asDiagonal() * v.adjoint());
    ch.labels.push_back(outcome_label(k, steps));
  }
  require(((completeness - 1.0).abs() <= 1e-12).all(), ErrorKind::InvariantViolation,
          "weak_meas_kraus: spectral completeness failed");
  return ch;
}

KrausChannel weak_meas_kraus_steps(const LieRep& rep, const std::vector<Eigen::VectorXd>& h,
                                   double epsilon) {
  const int steps = static_cast<int>(h.size());
  check_steps(steps);
  require(std::isfinite(epsilon), ErrorKind::InvalidInput, "weak_meas_kraus_steps: epsilon");

  OperatorList f0, f1;
  for (const auto& ht : h) {
    const Operator a = epsilon * weighted_sum(rep, ht);
    Eigen::SelfAdjointEigenSolver<Operator> es(((a + a.adjoint()) * 0.5).eval());
    const Operator& v = es.eigenvectors();
    const Eigen::ArrayXd c = es.eigenvalues().array().cos();
    const Eigen::ArrayXd sn = es.eigenvalues().array().sin();
    f0.push_back(v * (c - sn).matrix().cast<Complex>().asDiagonal() * v.adjoint());
    f1.push_back(v * (c + sn).matrix().cast<Complex>().asDiagonal() * v.adjoint());
  }

  const double prefactor = std::pow(2.0, -0.5 * steps);
  const std::size_t outcomes = std::size_t(1) << steps;
  KrausChannel ch;
  ch.epsilon = epsilon;
  ch.steps = steps;
  ch.h = h;
  for (std::size_t k = 0; k < outcomes; ++k) {
    Operator m = prefactor * Operator::Identity(rep.dim, rep.dim);
    for (int t = 0; t < steps; ++t)
      m = ((bit(k, t) ? f1[t] : f0[t]) * m).eval();
    ch.kraus.push_back(std::move(m));
    ch.labels.push_back(outcome_label(k, steps));
  }
  return ch;
}

Operator first_order_kraus(const LieRep& rep, const Eigen::VectorXd& h, double epsilon,
                           int steps, std::size_t k) {
  check_steps(steps);
  require(k < (std::size_t(1) << steps), ErrorKind::InvalidInput,
          "first_order_kraus: outcome index out of range");
  const int ones = std::popcount(k);
  const double weight = -epsilon * double(steps - 2 * ones);
  return std::pow(2.0, -0.5 * steps) * mat_exp(Operator(weight * weighted_sum(rep, h)));
}

double completeness_residual(const KrausChannel& ch) {
  require(!ch.kraus.empty(), ErrorKind::InvalidInput, "completeness_residual: empty channel");
  const Index d = ch.kraus.front().rows();
  Operator sum = Operator::Zero(d, d);
  for (const auto& m : ch.kraus) sum.noalias() += m.adjoint() * m;
  return (sum - Operator::Identity(d, d)).norm();
}

std::vector<Outcome> apply_channel(const KrausChannel& ch, const State& psi) {
  require(!ch.kraus.empty(), ErrorKind::InvalidInput, "apply_channel: empty channel");
  require(psi.size() == ch.kraus.front().cols(), ErrorKind::DimensionMismatch,
          "apply_channel: state dimension");
  require(std::abs(psi.norm() - 1.0) <= 1e-10, ErrorKind::Unnormalized,
          "apply_channel: input state is not normalized");
  std::vector<Outcome> out;
  out.reserve(ch.kraus.size());
  double total = 0.0;
  for (const auto& m : ch.kraus) {
    State image = m * psi;
    const double p = image.squaredNorm();
    require(std::isfinite(p), ErrorKind::NumericalFailure, "apply_channel: non-finite branch");
    total += p;
    Outcome o;
    o.p = p;
    if (p >= 1e-14) o.phi = image / std::sqrt(p);
    out.push_back(std::move(o));
  }
  require(std::abs(total - 1.0) <= 1e-10, ErrorKind::InvariantViolation,
          "apply_channel: outcome probabilities do not sum to 1");
  return out;
}

double average_purity(const std::vector<Outcome>& outcomes, const LieRep& rep) {
  double total = 0.0;
  for (const auto& o : outcomes)
    if (o.phi) total += o.p * g_purity(*o.phi, rep);
  return total;
}

State normalize_after(const Operator& m, const State& psi) {
  require(m.cols() == psi.size(), ErrorKind::DimensionMismatch, "normalize_after: dimension");
  State image = m * psi;
  const double n = image.norm();
  require(std::isfinite(n), ErrorKind::NumericalFailure, "normalize_after: non-finite image");
  require(n > 1e-14, ErrorKind::Singular, "normalize_after: state is annihilated");
  return image / n;
}

}  // namespace lieqrt
