#include "lieqrt/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "lieqrt/cfo.hpp"
#include "lieqrt/error.hpp"
#include "lieqrt/linalg.hpp"
#include "lieqrt/purity.hpp"
#include "lieqrt/random.hpp"
#include "lieqrt/structures.hpp"

namespace lieqrt {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

nlohmann::json base_choices(const RepSpec& rep) {
  nlohmann::json c = {{"n_g", "sum_i <HW|g_i|HW>^2 over the orthonormalized generator basis"},
                      {"rng", "mt19937_64, per-trial child streams via splitmix64(seed, trial)"}};
  if (rep.kind == RepKind::So2n)
    c["hw_state"] = "Jordan-Wigner vacuum e_0; each i c_{2j-1} c_{2j} has eigenvalue -1 on it";
  else
    c["hw_state"] = "|s, s> = e_0, basis index k <-> m = s - k";
  return c;
}

State random_coherent_state(const LieRep& rep, Rng& rng) {
  Operator x = Operator::Zero(rep.dim, rep.dim);
  for (const auto& g : rep.generators) x += Complex(0, rng.uniform(-M_PI, M_PI)) * g;
  return mat_exp(x) * rep.hw_state;
}

double min_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::min_element(v.begin(), v.end());
}
double max_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}
double mean_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / double(v.size());
}

std::size_t count_above(const std::vector<double>& v, double tol) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [&](double x) { return x > tol; }));
}

void require_su2(const ExperimentConfig& cfg, const char* who) {
  require(cfg.rep.kind == RepKind::Su2, ErrorKind::InvalidInput,
          std::string(who) + ": needs an su2 representation");
  require(cfg.rep.param >= 1, ErrorKind::InvalidInput, std::string(who) + ": spin must be positive");
}

std::vector<double> resolve_m(const ExperimentConfig& cfg) {
  const double s = 0.5 * cfg.rep.param;
  std::vector<double> ms = cfg.m_values.empty() ? nonnegative_weights(s) : cfg.m_values;
  for (double m : ms) (void)weight_index(cfg.rep.param, m);
  return ms;
}

}  // namespace

RepSpec RepSpec::su2(double s) {
  const double two_s = 2.0 * s;
  require(s >= 0 && std::abs(two_s - std::round(two_s)) < 1e-12, ErrorKind::InvalidInput,
          "spin must be a nonnegative multiple of 1/2");
  return {RepKind::Su2, static_cast<int>(std::lround(two_s))};
}

std::string RepSpec::label() const {
  if (kind == RepKind::So2n) return "so2n(n=" + std::to_string(param) + ")";
  std::ostringstream os;
  os << "su2(s=" << 0.5 * param << ")";
  return os.str();
}

LieRep RepSpec::build() const { return kind == RepKind::Su2 ? su2_rep(param) : so2n_rep(param); }

std::vector<double> Grid::points() const {
  require(count >= 1, ErrorKind::InvalidInput, "grid: count must be positive");
  require(std::isfinite(lo) && std::isfinite(hi), ErrorKind::InvalidInput, "grid: bounds");
  require(count > 1 || lo == hi, ErrorKind::InvalidInput, "grid: a single point needs lo == hi");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    out[i] = count == 1 ? lo : lo + (hi - lo) * double(i) / double(count - 1);
  return out;
}

Grid Grid::parse(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  require(second != std::string::npos && text.find(':', second + 1) == std::string::npos,
          ErrorKind::InvalidInput, "grid must look like lo:hi:count, got '" + text + "'");
  Grid g;
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, first), b = text.substr(first + 1, second - first - 1),
                      c = text.substr(second + 1);
    g.lo = std::stod(a, &used);
    require(used == a.size(), ErrorKind::InvalidInput, "grid: bad lower bound");
    g.hi = std::stod(b, &used);
    require(used == b.size(), ErrorKind::InvalidInput, "grid: bad upper bound");
    g.count = std::stoi(c, &used);
    require(used == c.size(), ErrorKind::InvalidInput, "grid: bad count");
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidInput, "grid must look like lo:hi:count, got '" + text + "'");
  }
  (void)g.points();
  return g;
}

std::string Grid::str() const {
  std::ostringstream os;
  os.precision(17);
  os << lo << ':' << hi << ':' << count;
  return os.str();
}

void ExperimentConfig::validate() const {
  require(trials >= 1, ErrorKind::InvalidInput, "trials must be positive");
  require(steps >= 1 && steps <= 12, ErrorKind::InvalidInput, "steps must be in [1, 12]");
  require(std::isfinite(epsilon) && epsilon >= 0.0, ErrorKind::InvalidInput,
          "epsilon must be finite and nonnegative");
  require(std::isfinite(cfo_scale) && cfo_scale >= 0.0, ErrorKind::InvalidInput,
          "scale must be finite and nonnegative");
  require(workers >= 1, ErrorKind::InvalidInput, "workers must be positive");
  require(std::isfinite(tolerance) && tolerance > 0.0, ErrorKind::InvalidInput,
          "tolerance must be positive");
  (void)alpha.points();
  (void)eta.points();
}

nlohmann::json ExperimentConfig::to_json() const {
  // Worker count is deliberately absent: output must not depend on it.
  return {{"rep", rep.label()},
          {"seed", seed},
          {"trials", trials},
          {"epsilon", epsilon},
          {"steps", steps},
          {"cfo_scale", cfo_scale},
          {"m_values", m_values},
          {"alpha", alpha.str()},
          {"eta", eta.str()},
          {"tolerance", tolerance}};
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body) {
  const std::size_t threads = std::min<std::size_t>(std::max(workers, 1), std::max<std::size_t>(count, 1));
  std::vector<std::exception_ptr> errors(count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<double> nonnegative_weights(double s) {
  const auto spec = RepSpec::su2(s);
  std::vector<double> out;
  for (int twice_m = spec.param % 2; twice_m <= spec.param; twice_m += 2) out.push_back(0.5 * twice_m);
  return out;
}

ExperimentReport run_thm1(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto t0 = Clock::now();
  const LieRep rep = cfg.rep.build();
  const Rng root(cfg.seed);
  std::vector<double> purity(static_cast<std::size_t>(cfg.trials));

  parallel_for(purity.size(), cfg.workers, [&](std::size_t i) {
    Rng rng = root.child(i);
    const State psi = random_coherent_state(rep, rng);
    if (cfg.cfo_scale == 0.0) {
      purity[i] = g_purity(psi, rep);
      return;
    }
    const Operator m = sample_cfo_element(rep, rng, cfg.cfo_scale);
    purity[i] = g_purity(normalize_after(m, psi), rep);
  });

  ExperimentReport out;
  out.experiment = "thm1";
  out.config = cfg.to_json();
  out.choices = base_choices(cfg.rep);
  out.choices["coherent_states"] = "exp(i sum_k a_k g_k)|HW>, a_k uniform in (-pi, pi)";
  out.choices["cfo_elements"] = "exp(sum_k (a_k + i b_k) i g_k), a_k, b_k uniform in (-scale, scale)";
  out.table.columns = {"trial", "purity_image"};
  std::vector<double> dev;
  for (std::size_t i = 0; i < purity.size(); ++i) {
    out.table.add_row({std::int64_t(i), purity[i]});
    dev.push_back(std::abs(purity[i] - 1.0));
    out.row_violation.push_back(!(dev.back() <= kFreeTol));
  }
  out.summary = {{"max_abs_deviation", max_of(dev)},
                 {"above_tolerance", count_above(dev, cfg.tolerance)},
                 {"violations", out.violations()}};
  out.runtime_seconds = seconds_since(t0);
  return out;
}

ExperimentReport run_fig2(const ExperimentConfig& cfg) {
  cfg.validate();
  require_su2(cfg, "fig2");
  const auto t0 = Clock::now();
  const LieRep rep = cfg.rep.build();
  const double s = rep.spin();
  const std::vector<double> ms = resolve_m(cfg);
  const std::size_t per_m = static_cast<std::size_t>(cfg.trials);
  const Rng root(cfg.seed);
  std::vector<double> purity(ms.size() * per_m);

  parallel_for(purity.size(), cfg.workers, [&](std::size_t i) {
    Rng rng = root.child(i);
    const Operator m = ginibre(2, rng);
    const Operator lift = lift_to_spin(iwasawa_sl2(m), rep);
    purity[i] = g_purity(normalize_after(lift, weight_state(rep, ms[i / per_m])), rep);
  });

  ExperimentReport out;
  out.experiment = "fig2";
  out.config = cfg.to_json();
  out.choices = base_choices(cfg.rep);
  out.choices["m_distribution"] = "Ginibre: i.i.d. standard complex Gaussian 2x2 entries";
  out.choices["lift"] = "Iwasawa factor of M / sqrt(det M) mapped to spin s";
  out.table.columns = {"m", "sample_index", "purity"};
  double worst_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < purity.size(); ++i) {
    const double m = ms[i / per_m];
    const double bound = m * m / (s * s);
    out.table.add_row({m, std::int64_t(i % per_m), purity[i]});
    worst_gap = std::min(worst_gap, purity[i] - bound);
    bool bad = !(purity[i] >= bound - kBoundTol);
    if (std::abs(m) == s) bad = bad || !(std::abs(purity[i] - 1.0) <= kFreeTol);
    out.row_violation.push_back(bad);
  }
  nlohmann::json per = nlohmann::json::array();
  for (std::size_t j = 0; j < ms.size(); ++j) {
    const std::vector<double> slice(purity.begin() + j * per_m, purity.begin() + (j + 1) * per_m);
    per.push_back({{"m", ms[j]}, {"bound", ms[j] * ms[j] / (s * s)}, {"min", min_of(slice)},
                   {"mean", mean_of(slice)}, {"max", max_of(slice)}});
  }
  out.summary = {{"min_gap_to_bound", worst_gap}, {"per_m", per}, {"violations", out.violations()}};
  out.runtime_seconds = seconds_since(t0);
  return out;
}

ExperimentReport run_fig3(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto t0 = Clock::now();
  const LieRep rep = cfg.rep.build();
  const Rng root(cfg.seed);
  const auto n = static_cast<std::size_t>(cfg.trials);
  struct Trial {
    double before, after, min_p;
  };
  std::vector<Trial> trials(n);

  parallel_for(n, cfg.workers, [&](std::size_t i) {
    Rng rng = root.child(i);
    const State psi = haar_state(rep.dim, rng);
    Eigen::VectorXd h(static_cast<Index>(rep.generators.size()));
    for (Index k = 0; k < h.size(); ++k) h(k) = rng.uniform(-1.0, 1.0);
    const KrausChannel ch = weak_meas_kraus(rep, h, cfg.epsilon, cfg.steps);
    const auto outcomes = apply_channel(ch, psi);
    double min_p = 1.0;
    for (const auto& o : outcomes) min_p = std::min(min_p, o.p);
    trials[i] = {g_purity(psi, rep), average_purity(outcomes, rep), min_p};
  });

  // Sorted only at emission; trial indices stay those of the run.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return trials[a].before < trials[b].before; });

  ExperimentReport out;
  out.experiment = "fig3";
  out.config = cfg.to_json();
  out.choices = base_choices(cfg.rep);
  out.choices["state_distribution"] = "Haar: normalized complex Gaussian vector";
  out.choices["h_distribution"] = "h_i uniform in (-1, 1), fresh per trial";
  out.choices["channel"] = "sequential weak measurement, M_k = 2^{-N/2} prod_t (cos A - (-1)^{k_t} sin A)";
  out.table.columns = {"trial", "purity_before", "purity_after_avg", "margin", "min_pk"};
  std::vector<double> margins;
  for (std::size_t i : order) {
    const Trial& t = trials[i];
    const double margin = t.after - t.before;
    out.table.add_row({std::int64_t(i), t.before, t.after, margin, t.min_p});
    margins.push_back(margin);
    out.row_violation.push_back(!(margin >= -kMarginTol));
  }
  std::vector<double> neg;
  for (double m : margins) neg.push_back(-m);
  out.summary = {{"min_margin", min_of(margins)},
                 {"mean_margin", mean_of(margins)},
                 {"below_tolerance", count_above(neg, cfg.tolerance)},
                 {"violations", out.violations()}};
  out.runtime_seconds = seconds_since(t0);
  return out;
}

ExperimentReport run_closed_form_scan(const ExperimentConfig& cfg) {
  cfg.validate();
  require_su2(cfg, "scan");
  const auto t0 = Clock::now();
  const LieRep rep = cfg.rep.build();
  const double s = rep.spin();
  const std::vector<double> ms = resolve_m(cfg);
  const std::vector<double> alphas = cfg.alpha.points();
  const std::vector<double> etas = cfg.eta.points();
  const std::size_t per_m = alphas.size() * etas.size();
  std::vector<double> closed(ms.size() * per_m), direct(closed.size());

  parallel_for(ms.size() * alphas.size(), cfg.workers, [&](std::size_t job) {
    const double m = ms[job / alphas.size()];
    const double a = alphas[job % alphas.size()];
    for (std::size_t k = 0; k < etas.size(); ++k) {
      const std::size_t i = job * etas.size() + k;
      closed[i] = weight_purity_closed(s, m, a, etas[k]);
      direct[i] = weight_purity_direct(rep, m, a, Complex(etas[k], 0.0));
    }
  });

  ExperimentReport out;
  out.experiment = "scan";
  out.config = cfg.to_json();
  out.choices = base_choices(cfg.rep);
  out.choices["eta_phase"] = "eta real and nonnegative; the purity depends on |eta| only";
  out.table.columns = {"m", "alpha", "eta_abs", "p_closed", "p_direct", "abs_diff"};
  double max_diff = 0.0;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    const double m = ms[i / per_m];
    const double a = alphas[(i % per_m) / etas.size()];
    const double e = etas[i % etas.size()];
    const double diff = std::abs(closed[i] - direct[i]);
    out.table.add_row({m, a, e, closed[i], direct[i], diff});
    max_diff = std::max(max_diff, diff);
    out.row_violation.push_back(!(diff < kOracleTol) || !(closed[i] >= m * m / (s * s) - 1e-10));
  }
  out.summary = {{"max_abs_diff", max_diff}, {"violations", out.violations()}};
  out.runtime_seconds = seconds_since(t0);
  return out;
}

ExperimentReport run_structures_suite() {
  const auto t0 = Clock::now();
  ExperimentReport out;
  out.experiment = "structures";
  out.choices = {{"automorphism_test", "conjugation-image membership, entrywise tolerance 1e-10"}};
  out.table.columns = {"claim", "expected", "observed", "passed"};
  auto record = [&](const std::string& claim, bool expected, bool observed) {
    const bool ok = expected == observed;
    out.table.add_row({claim, std::string(expected ? "true" : "false"),
                       std::string(observed ? "true" : "false"), std::int64_t(ok)});
    out.row_violation.push_back(!ok);
  };

  const Complex i(0, 1);
  const double r = 1.0 / std::sqrt(2.0);
  Operator had(2, 2);
  had << r, r, r, -r;
  Operator s_gate = Operator::Identity(2, 2);
  s_gate(1, 1) = i;
  Operator t_gate = Operator::Identity(2, 2);
  t_gate(1, 1) = std::exp(i * (M_PI / 4));
  Operator cnot = Operator::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1;
  const Operator id2 = Operator::Identity(2, 2);
  const Operator x_rot = mat_exp(Operator(i * (M_PI / 8) * pauli_word_matrix("X")));

  record("pauli group n=1 closed, associative, invertible", true, check_pauli_group(1).ok());
  record("pauli group n=2 closed, associative, invertible", true, check_pauli_group(2).ok());
  record("X*Y = iZ", true, PauliElement{0, "X"} * PauliElement{0, "Y"} == PauliElement{1, "Z"});
  record("H preserves P_1", true, conjugation_is_automorphism(had, 1).preserved);
  record("S preserves P_1", true, conjugation_is_automorphism(s_gate, 1).preserved);
  record("H (x) I preserves P_2", true, conjugation_is_automorphism(kron(had, id2), 2).preserved);
  record("I (x) S preserves P_2", true, conjugation_is_automorphism(kron(id2, s_gate), 2).preserved);
  record("CNOT preserves P_2", true, conjugation_is_automorphism(cnot, 2).preserved);
  record("T preserves P_1", false, conjugation_is_automorphism(t_gate, 1).preserved);
  record("exp(i pi X / 8) preserves P_1", false, conjugation_is_automorphism(x_rot, 1).preserved);
  record("T (x) I preserves P_2", false, conjugation_is_automorphism(kron(t_gate, id2), 2).preserved);

  Operator perm = Operator::Zero(3, 3);
  perm(0, 1) = perm(1, 2) = perm(2, 0) = 1;
  Operator diag = Operator::Zero(3, 3);
  diag.diagonal() << 2.0, 3.0, 1.0;
  const Operator gen_perm = perm * diag;
  record("cyclic permutation preserves D_3", true, generalized_permutation_preserves_ring(perm, 3));
  record("diag(2,3,1) preserves D_3", true, generalized_permutation_preserves_ring(diag, 3));
  record("permutation * diagonal preserves D_3", true,
         generalized_permutation_preserves_ring(gen_perm, 3));
  record("inverse of permutation * diagonal preserves D_3", true,
         generalized_permutation_preserves_ring(Operator(gen_perm.inverse()), 3));
  record("Hadamard preserves D_2", false, generalized_permutation_preserves_ring(had, 2));

  Operator ham = Operator::Zero(3, 3);
  ham.diagonal() << 0.0, 1.0, 2.5;
  ham(0, 1) = ham(1, 0) = 0.3;
  const CommutantSpec spec(ham);
  const Operator poly = Operator::Identity(3, 3) + 0.5 * ham + 0.25 * ham * ham;
  record("polynomial in H commutes with H", true, commutant_member(poly, spec));
  Rng rng(11);
  record("Ginibre M commutes with H", false, commutant_member(ginibre(3, rng), spec));

  const LocalAlgebraReport eq = local_algebra_check(2, 2);
  record("local algebra dA=dB=2 closed", true, eq.closure_residual < 1e-10);
  record("local unitaries preserve local algebra (2,2)", true, eq.local_unitary_residual < 1e-10);
  record("U_A (x) I preserves A-local span (2,2)", true, eq.a_factor_residual < 1e-10);
  record("SWAP exchanges A- and B-local algebras (2,2)", true,
         eq.swap_checked && eq.swap_residual < 1e-10);
  const LocalAlgebraReport ne = local_algebra_check(2, 3);
  record("local algebra dA=2, dB=3 passes", true, ne.passed());
  record("SWAP check at dA=2, dB=3 skipped", true, !ne.swap_checked);

  out.summary = {{"claims", out.table.rows.size()}, {"violations", out.violations()}};
  out.runtime_seconds = seconds_since(t0);
  return out;
}

}  // namespace lieqrt
