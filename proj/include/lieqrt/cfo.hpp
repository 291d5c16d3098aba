#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieqrt/lie_reps.hpp"
#include "lieqrt/random.hpp"
#include "lieqrt/types.hpp"

namespace lieqrt {

/// M = det_root * u * e^{alpha Jz} e^{eta J+} in the defining 2x2 rep
/// (Jz = diag(1/2, -1/2), J+ = [[0,1],[0,0]]), u in SU(2).
struct IwasawaFactors {
  Operator u = Operator::Identity(2, 2);
  double alpha = 0.0;
  Complex eta = 0.0;
  /// Principal square root of det M; M / det_root lies in SL(2, C).
  Complex det_root = 1.0;
};

IwasawaFactors iwasawa_sl2(const Operator& m);

/// u e^{alpha Jz} e^{eta J+}, i.e. the SL(2) part without det_root.
Operator reconstruct_sl2(const IwasawaFactors& f);

/// u = e^{i a Jz} e^{i b Jy} e^{i c Jz} for u in SU(2).
struct EulerAngles {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

EulerAngles su2_euler_zyz(const Operator& u);

/// Spin-s image R(u) e^{alpha Jz} e^{eta J+} of the factored SL(2) element.
Operator lift_to_spin(const IwasawaFactors& f, const LieRep& rep);
Operator lift_to_spin(const IwasawaFactors& f, int two_s);

/// exp(sum_i (a_i + i b_i) i g_i).
Operator cfo_element(const LieRep& rep, const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// cfo_element with a_i, b_i uniform in (-scale, scale), drawn as a_0, b_0, a_1, b_1, ...
Operator sample_cfo_element(const LieRep& rep, Rng& rng, double scale);

/// Ordered Kraus family. Outcome index k encodes the bits k_1..k_N with
/// k_t = (k >> (t-1)) & 1; labels[k] is the string "k_1 k_2 ... k_N".
struct KrausChannel {
  OperatorList kraus;
  std::vector<std::string> labels;
  double epsilon = 0.0;
  int steps = 0;
  /// One coefficient vector per step; a single entry for the commuting family.
  std::vector<Eigen::VectorXd> h;
};

/// Sequential weak-measurement family
///   M_k = 2^{-N/2} [C - (-1)^{k_N} S] ... [C - (-1)^{k_1} S],
/// C = cos(A), S = sin(A), A = epsilon sum_i h_i g_i.
KrausChannel weak_meas_kraus(const LieRep& rep, const Eigen::VectorXd& h, double epsilon,
                             int steps);

/// Same construction with an independent coefficient vector at every step
/// (non-commuting factors); completeness still holds step by step.
KrausChannel weak_meas_kraus_steps(const LieRep& rep, const std::vector<Eigen::VectorXd>& h,
                                   double epsilon);

/// E_k = 2^{-N/2} exp(-epsilon sum_t (-1)^{k_t} sum_i h_i g_i), the
/// exponential that M_k approaches to first order in epsilon.
Operator first_order_kraus(const LieRep& rep, const Eigen::VectorXd& h, double epsilon,
                           int steps, std::size_t k);

/// ||sum_k M_k^dagger M_k - I||_F.
double completeness_residual(const KrausChannel& ch);

struct Outcome {
  double p = 0.0;
  /// Post-measurement state; empty when p < 1e-14.
  std::optional<State> phi;
};

/// Outcome probabilities p_k = <psi|M_k^dagger M_k|psi> and normalized
/// branches. Throws InvariantViolation unless sum_k p_k = 1 within 1e-10.
std::vector<Outcome> apply_channel(const KrausChannel& ch, const State& psi);

/// sum_k p_k P(phi_k) over non-null outcomes.
double average_purity(const std::vector<Outcome>& outcomes, const LieRep& rep);

/// M psi / ||M psi||. Throws Singular when ||M psi|| <= 1e-14.
State normalize_after(const Operator& m, const State& psi);

}  // namespace lieqrt
