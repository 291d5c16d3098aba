#include "lieqrt/purity.hpp"

#include <algorithm>

#include "lieqrt/linalg.hpp"

namespace lieqrt {

double g_purity(const State& psi, const LieRep& rep) {
  require(!rep.generators.empty(), ErrorKind::InvalidInput, "g_purity: empty generator set");
  require(rep.hw_normalization > 0.0, ErrorKind::InvalidInput,
          "g_purity: highest-weight normalization vanishes (trivial rep)");
  require(psi.size() == rep.dim, ErrorKind::DimensionMismatch, "g_purity: state dimension");
  require(std::abs(psi.norm() - 1.0) <= 1e-10, ErrorKind::Unnormalized,
          "g_purity: state is not normalized");
  double total = 0.0;
  for (const auto& g : rep.generators) {
    const double e = psi.dot(g * psi).real();
    total += e * e;
  }
  return total / rep.hw_normalization;
}

double g_purity_mixed(const Operator& rho, const LieRep& rep) {
  require(!rep.generators.empty(), ErrorKind::InvalidInput,
          "g_purity_mixed: empty generator set");
  require(rep.hw_normalization > 0.0, ErrorKind::InvalidInput,
          "g_purity_mixed: highest-weight normalization vanishes (trivial rep)");
  require(rho.rows() == rep.dim && rho.cols() == rep.dim, ErrorKind::DimensionMismatch,
          "g_purity_mixed: density matrix dimension");
  require(is_hermitian(rho, 1e-10), ErrorKind::InvalidInput,
          "g_purity_mixed: density matrix not Hermitian");
  require(std::abs(rho.trace() - 1.0) <= 1e-8, ErrorKind::InvalidInput,
          "g_purity_mixed: trace differs from 1");
  Eigen::SelfAdjointEigenSolver<Operator> es(rho, Eigen::EigenvaluesOnly);
  require(es.eigenvalues().minCoeff() >= -1e-10, ErrorKind::InvalidInput,
          "g_purity_mixed: density matrix not positive semidefinite");
  double total = 0.0;
  for (const auto& g : rep.generators) {
    const double e = rho.cwiseProduct(g.transpose()).sum().real();
    total += e * e;
  }
  return total / rep.hw_normalization;
}

int spin_gap(double s, double m) {
  const double two_s = 2.0 * s;
  require(s >= 0.0 && std::abs(two_s - std::round(two_s)) < 1e-9, ErrorKind::InvalidInput,
          "spin must be a nonnegative half-integer");
  const double gap = s - m;
  const double gr = std::round(gap);
  require(std::abs(gap - gr) < 1e-9 && gr >= 0.0 && gr <= two_s + 1e-9, ErrorKind::InvalidInput,
          "m must satisfy |m| <= s with s - m integral");
  return static_cast<int>(gr);
}

double zeta_coeff(double s, double m, int k) {
  const int gap = spin_gap(s, m);
  require(k >= 1 && k <= gap, ErrorKind::InvalidInput, "zeta_coeff: k must lie in [1, s - m]");
  const double sign = (k - 1) % 2 == 0 ? 1.0 : -1.0;
  const double sq = (s - m) * (s + m + 1.0) * sign * pochhammer(m - s + 1.0, k - 1) *
                    pochhammer(m + s + 2.0, k - 1);
  return std::sqrt(std::max(sq, 0.0));
}

double zeta_ladder(double s, double m, int k) {
  const int gap = spin_gap(s, m);
  require(k >= 1 && k <= gap, ErrorKind::InvalidInput, "zeta_ladder: k must lie in [1, s - m]");
  double out = 1.0;
  for (int j = 0; j < k; ++j) out *= ladder_coeff(s, m + j);
  return out;
}

namespace {
// Weights w_k = x^k zeta(s,m,k)^2 / (k!)^2 with x = e^{2 alpha}|eta|^2, w_0 = 1.
std::vector<double> norm_weights(double s, double m, double x) {
  const int gap = spin_gap(s, m);
  std::vector<double> w(static_cast<std::size_t>(gap) + 1, 1.0);
  for (int k = 1; k <= gap; ++k) w[k] = w[k - 1] * x / (double(k) * double(k));
  for (int k = 1; k <= gap; ++k) {
    const double z = zeta_coeff(s, m, k);
    w[k] *= z * z;
  }
  return w;
}
}  // namespace

double phi_norm(double s, double m, double alpha, double eta_abs) {
  const auto w = norm_weights(s, m, std::exp(2.0 * alpha) * eta_abs * eta_abs);
  double sum = 0.0;
  for (double v : w) sum += v;
  return std::exp(2.0 * alpha * m) * sum;
}

double phi_norm_hypergeometric(double s, double m, double alpha, double eta_abs, int sign) {
  require(sign == 1 || sign == -1, ErrorKind::InvalidInput, "phi_norm_hypergeometric: sign");
  const int gap = spin_gap(s, m);
  const double z = -eta_abs * eta_abs * std::exp(2.0 * sign * alpha);
  return std::exp(2.0 * alpha * m) * hyp2f1_terminating(-gap, s + m + 1.0, 1.0, z);
}

double jz_expect(double s, double m, double alpha, double eta_abs) {
  const auto w = norm_weights(s, m, std::exp(2.0 * alpha) * eta_abs * eta_abs);
  double sum = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) sum += w[k] * (m + double(k));
  return std::exp(2.0 * alpha * m) * sum;
}

Complex jplus_expect(double s, double m, double alpha, Complex eta) {
  const int gap = spin_gap(s, m);
  const double a2 = std::norm(eta);
  Complex sum = 0.0;
  double zeta_k = 1.0;   // zeta(s,m,0)
  double eta_pow = 1.0;  // |eta|^{2k}
  double fact = 1.0;     // k!
  for (int k = 0; k < gap; ++k) {
    const double zeta_next = zeta_coeff(s, m, k + 1);
    const double coeff = ladder_coeff(s, m + k) * eta_pow / (fact * fact * double(k + 1)) *
                         std::exp(alpha * (2.0 * m + 2.0 * k + 1.0)) * zeta_k * zeta_next;
    sum += std::conj(eta) * coeff;
    zeta_k = zeta_next;
    eta_pow *= a2;
    fact *= double(k + 1);
  }
  return sum;
}

double log_derivative_term(double s, double m, double z) {
  const int gap = spin_gap(s, m);
  if (gap == 0) return 0.0;
  const int a = -gap;
  const double b = m + s + 1.0;
  return z * a * b * hyp2f1_terminating(a + 1, b + 1.0, 2.0, z) /
         hyp2f1_terminating(a, b, 1.0, z);
}

double g_function(double s, double m, double z) {
  const int gap = spin_gap(s, m);
  require(s > 0.0, ErrorKind::InvalidInput, "g_function: s must be positive");
  if (gap == 0) return 0.0;
  const int a = -gap;
  const double b = m + s + 1.0;
  const double num =
      hyp2f1_terminating(a, b, 2.0, z) + z * m * hyp2f1_terminating(a + 1, b + 1.0, 3.0, z);
  return a * b * num / (s * hyp2f1_terminating(a, b, 1.0, z) * (1.0 - z));
}

double weight_purity_closed(double s, double m, double alpha, double eta_abs) {
  return weight_purity_closed(ClosedFormInputs{s, m, alpha, eta_abs});
}

double weight_purity_closed(const ClosedFormInputs& in) {
  require(in.s > 0.0, ErrorKind::InvalidInput, "weight_purity_closed: s must be positive");
  require(in.eta_abs >= 0.0, ErrorKind::InvalidInput, "weight_purity_closed: |eta| < 0");
  spin_gap(in.s, in.m);
  const double z = in.z();
  const double jz = in.m / in.s + log_derivative_term(in.s, in.m, z) / in.s;
  const double g = g_function(in.s, in.m, z);
  return jz * jz - z * g * g;
}

double weight_purity_series(double s, double m, double alpha, Complex eta) {
  require(s > 0.0, ErrorKind::InvalidInput, "weight_purity_series: s must be positive");
  const double n = phi_norm(s, m, alpha, std::abs(eta));
  const double jz = jz_expect(s, m, alpha, std::abs(eta));
  const Complex jp = jplus_expect(s, m, alpha, eta);
  return (jz * jz + std::norm(jp)) / (s * s * n * n);
}

double weight_purity_direct(const LieRep& rep, double m, double alpha, Complex eta) {
  require(rep.is_su2() && !rep.raising_ops.empty(), ErrorKind::InvalidInput,
          "weight_purity_direct: needs an su(2) rep with J+");
  const Operator& jz = rep.generators[rep.cartan_indices.front()];
  const Operator& jp = rep.raising_ops.front();
  State phi = mat_exp(Operator(alpha * jz)) * (mat_exp(Operator(eta * jp)) * weight_state(rep, m));
  phi.normalize();
  return g_purity(phi, rep);
}

}  // namespace lieqrt
