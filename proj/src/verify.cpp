#include <chrono>
#include <cmath>

#include "lieqrt/cfo.hpp"
#include "lieqrt/experiments.hpp"
#include "lieqrt/linalg.hpp"
#include "lieqrt/purity.hpp"
#include "lieqrt/random.hpp"
#include "lieqrt/structures.hpp"

namespace lieqrt {

namespace {

struct Suite {
  ExperimentReport& out;

  void check(const std::string& module, const std::string& name, double value, double threshold) {
    const bool ok = std::isfinite(value) && value <= threshold;
    out.table.add_row({module, name, value, threshold, std::int64_t(ok)});
    out.row_violation.push_back(!ok);
  }
};

void linalg_suite(Suite& s, Rng& rng) {
  const Complex i(0, 1);
  for (Index d : {2, 5, 16}) {
    const Operator g = ginibre(d, rng);
    const Operator h = 0.5 * (g + g.adjoint());
    const Operator u = mat_exp(Operator(i * h));
    s.check("linalg", "exp(iH) unitary, d=" + std::to_string(d),
            (u.adjoint() * u - Operator::Identity(d, d)).norm(), 1e-12);
    const Operator e = mat_exp(Operator(0.3 * g));
    const Operator inv = mat_exp(Operator(-0.3 * g));
    s.check("linalg", "exp(A) exp(-A) = I, d=" + std::to_string(d),
            (e * inv - Operator::Identity(d, d)).norm(), 1e-11);
    const QrFactors qr = qr_positive(g);
    s.check("linalg", "QR reconstructs, d=" + std::to_string(d), (qr.q * qr.r - g).norm(), 1e-12);
  }
}

void lie_suite(Suite& s) {
  for (int two_s = 1; two_s <= 8; ++two_s) {
    const LieRep rep = su2_rep(two_s);
    const std::string tag = "su2 two_s=" + std::to_string(two_s);
    const double spin = rep.spin();
    s.check("lie-reps", tag + " closure", closure_residual(rep.generators), 1e-10);
    s.check("lie-reps", tag + " highest weight", highest_weight_defect(rep), 1e-12);
    s.check("lie-reps", tag + " N_g = s^2", std::abs(rep.hw_normalization - spin * spin), 1e-12);
  }
  for (int n = 1; n <= 4; ++n) {
    const LieRep rep = so2n_rep(n);
    const MajoranaSet maj = majorana_ops(n);
    const std::string tag = "so2n n=" + std::to_string(n);
    s.check("lie-reps", tag + " anticommutation", anticommutation_defect(maj), 1e-12);
    if (n <= 3) s.check("lie-reps", tag + " closure", closure_residual(rep.generators), 1e-10);
    s.check("lie-reps", tag + " Cartan commute", cartan_commutator_defect(rep), 1e-12);
    double annihilated = 0.0;
    for (int j = 1; j <= n; ++j)
      annihilated = std::max(annihilated, (annihilation_op(maj, j) * rep.hw_state).norm());
    s.check("lie-reps", tag + " vacuum annihilated", annihilated, 1e-12);
    s.check("lie-reps", tag + " N_g = n", std::abs(rep.hw_normalization - n), 1e-12);
  }
}

void purity_suite(Suite& s, Rng& rng) {
  for (int two_s = 1; two_s <= 16; ++two_s) {
    const LieRep rep = su2_rep(two_s);
    const double spin = rep.spin();
    double worst = 0.0;
    for (int k = 0; k <= two_s; ++k) {
      const double m = spin - k;
      worst = std::max(worst, std::abs(g_purity(weight_state(rep, m), rep) - m * m / (spin * spin)));
    }
    s.check("purity", "P(|s,m>) = m^2/s^2, two_s=" + std::to_string(two_s), worst, 1e-10);
  }
  const LieRep rep = su2_rep(10);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const double m = std::floor(rng.uniform(-5.0, 6.0));
    const double a = rng.uniform(-2.0, 2.0);
    const double e = rng.uniform(0.0, 3.0);
    worst = std::max(worst, std::abs(weight_purity_closed(5.0, m, a, e) -
                                     weight_purity_direct(rep, m, a, Complex(e, 0.0))));
  }
  s.check("purity", "closed form = direct, s=5 random points", worst, 1e-8);
  double zeta = 0.0;
  for (int k = 1; k <= 5; ++k) zeta = std::max(zeta, std::abs(zeta_coeff(5.0, 0.0, k) - zeta_ladder(5.0, 0.0, k)));
  s.check("purity", "zeta Pochhammer = ladder product", zeta, 1e-9);
}

void cfo_suite(Suite& s, Rng& rng) {
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const Operator m = ginibre(2, rng);
    const IwasawaFactors f = iwasawa_sl2(m);
    worst = std::max(worst, (f.det_root * reconstruct_sl2(f) - m).norm());
  }
  s.check("cfo", "Iwasawa reconstructs M", worst, 1e-12);

  for (const RepSpec spec : {RepSpec::su2(5.0), RepSpec::so2n(3)}) {
    const LieRep rep = spec.build();
    Eigen::VectorXd h(static_cast<Index>(rep.generators.size()));
    for (Index k = 0; k < h.size(); ++k) h(k) = rng.uniform(-1.0, 1.0);
    const KrausChannel ch = weak_meas_kraus(rep, h, 0.05, 4);
    s.check("cfo", spec.label() + " Kraus completeness", completeness_residual(ch), 1e-10);
    const auto outcomes = apply_channel(ch, haar_state(rep.dim, rng));
    double total = 0.0;
    for (const auto& o : outcomes) total += o.p;
    s.check("cfo", spec.label() + " sum p_k = 1", std::abs(total - 1.0), 1e-10);
  }
  const LieRep rep = su2_rep(10);
  const Operator lift = lift_to_spin(iwasawa_sl2(ginibre(2, rng)), rep);
  s.check("cfo", "lifted GL(2) keeps |s,s> free",
          std::abs(g_purity(normalize_after(lift, rep.hw_state), rep) - 1.0), 1e-8);
}

}  // namespace

ExperimentReport run_verify(std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentReport out;
  out.experiment = "verify";
  out.config = {{"seed", seed}};
  out.table.columns = {"module", "check", "value", "threshold", "passed"};
  Suite suite{out};
  Rng rng(seed);
  linalg_suite(suite, rng);
  lie_suite(suite);
  purity_suite(suite, rng);
  cfo_suite(suite, rng);
  const ExperimentReport structures = run_structures_suite();
  suite.check("structures", "claim witnesses", double(structures.violations()), 0.0);
  out.summary = {{"checks", out.table.rows.size()}, {"violations", out.violations()}};
  out.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace lieqrt
