#pragma once

#include <cmath>

#include "lieqrt/error.hpp"
#include "lieqrt/lie_reps.hpp"
#include "lieqrt/types.hpp"

namespace lieqrt {

/// g-purity (1/N) sum_i <psi|g_i|psi>^2 with N = sum_i <HW|g_i|HW>^2, so
/// that free pure states sit at exactly 1.
double g_purity(const State& psi, const LieRep& rep);

/// Same quantifier for a density matrix: (1/N) sum_i Tr[rho g_i]^2.
double g_purity_mixed(const Operator& rho, const LieRep& rep);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), (a)_0 = 1.
template <typename Real>
Real pochhammer(Real a, int k) {
  require(k >= 0, ErrorKind::InvalidInput, "pochhammer: negative order");
  Real out(1);
  for (int j = 0; j < k; ++j) out *= a + Real(j);
  return out;
}

/// 2F1(a, b; c; z) for a nonpositive integer a: the polynomial
/// sum_{k=0}^{-a} (a)_k (b)_k z^k / ((c)_k k!).
template <typename Real>
Real hyp2f1_terminating(int a, Real b, Real c, Real z) {
  require(a <= 0, ErrorKind::InvalidInput, "hyp2f1_terminating: a must be a nonpositive integer");
  const int terms = -a;
  for (int j = 0; j < terms; ++j)
    require(c + Real(j) != Real(0), ErrorKind::InvalidInput,
            "hyp2f1_terminating: c hits a pole before the series terminates");
  Real term(1);
  Real sum(1);
  for (int k = 0; k < terms; ++k) {
    term *= (Real(a) + Real(k)) * (b + Real(k)) * z / ((c + Real(k)) * Real(k + 1));
    sum += term;
  }
  return sum;
}

/// Inputs of the closed-form weight-state purity; z = -e^{2 alpha} |eta|^2.
struct ClosedFormInputs {
  double s = 0.0;
  double m = 0.0;
  double alpha = 0.0;
  double eta_abs = 0.0;

  double z() const { return -std::exp(2.0 * alpha) * eta_abs * eta_abs; }
};

/// s - m as an integer; validates that 2s is integral and |m| <= s.
int spin_gap(double s, double m);

/// J+^k |s,m> = zeta(s,m,k) |s,m+k>, computed from Pochhammer symbols:
/// zeta^2 = (s-m)(s+m+1) (-1)^{k-1}(m-s+1)_{k-1} (m+s+2)_{k-1}.
double zeta_coeff(double s, double m, int k);

/// The same coefficient as the ladder product prod_{j<k} c(s, m+j).
double zeta_ladder(double s, double m, int k);

/// <phi|phi> for |phi> = e^{alpha Jz} e^{eta J+} |s,m>, explicit series.
double phi_norm(double s, double m, double alpha, double eta_abs);

/// e^{2 alpha m} 2F1(m-s, s+m+1; 1; -|eta|^2 e^{2 sign alpha}). Only
/// sign = +1 agrees with the series; sign = -1 is kept for comparison.
double phi_norm_hypergeometric(double s, double m, double alpha, double eta_abs, int sign);

/// <phi|Jz|phi>, unnormalized, explicit series.
double jz_expect(double s, double m, double alpha, double eta_abs);

/// <phi|J+|phi>, unnormalized; <phi|J-|phi> is its conjugate.
Complex jplus_expect(double s, double m, double alpha, Complex eta);

/// z d/dz log 2F1(m-s, m+s+1; 1; z) = z (m-s)(m+s+1) 2F1(m-s+1, m+s+2; 2; z) / 2F1(...; 1; z).
double log_derivative_term(double s, double m, double z);

/// The real function G(m, s, z) of the closed form.
double g_function(double s, double m, double z);

/// Purity of e^{alpha Jz} e^{eta J+}|s,m> (normalized) from the closed form
/// (m/s + (1/s) z d/dz log F)^2 - z G^2.
double weight_purity_closed(double s, double m, double alpha, double eta_abs);
double weight_purity_closed(const ClosedFormInputs& in);

/// Same quantity assembled from the three expectation-value series.
double weight_purity_series(double s, double m, double alpha, Complex eta);

/// Same quantity by building the state with dense matrix exponentials and
/// evaluating g_purity on it. Independent of every series above.
double weight_purity_direct(const LieRep& rep, double m, double alpha, Complex eta);

}  // namespace lieqrt
