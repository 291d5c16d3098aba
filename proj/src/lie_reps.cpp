#include "lieqrt/lie_reps.hpp"

#include <algorithm>
#include <cmath>

#include "lieqrt/error.hpp"
#include "lieqrt/linalg.hpp"

namespace lieqrt {

namespace {

double hw_normalization(const OperatorList& gens, const State& hw) {
  double total = 0.0;
  for (const auto& g : gens) {
    const double e = hw.dot(g * hw).real();
    total += e * e;
  }
  return total;
}

void finalize(LieRep& rep) {
  for (const auto& g : rep.generators)
    require(is_hermitian(g, 1e-12), ErrorKind::InvariantViolation,
            rep.name + ": generator not Hermitian");
  rep.generators = gram_schmidt_hs(rep.generators);
  rep.hw_normalization = hw_normalization(rep.generators, rep.hw_state);
}

Operator pauli(char p) {
  Operator m = Operator::Zero(2, 2);
  switch (p) {
    case 'I': m(0, 0) = 1; m(1, 1) = 1; break;
    case 'X': m(0, 1) = 1; m(1, 0) = 1; break;
    case 'Y': m(0, 1) = Complex(0, -1); m(1, 0) = Complex(0, 1); break;
    case 'Z': m(0, 0) = 1; m(1, 1) = -1; break;
    default: throw Error(ErrorKind::InvalidInput, "unknown Pauli letter");
  }
  return m;
}

}  // namespace

Operator pauli_word_matrix(const std::string& word) {
  Operator out = Operator::Identity(1, 1);
  for (char c : word) out = kron(out, pauli(c));
  return out;
}

double ladder_coeff(double s, double m) {
  const double v = s * (s + 1.0) - m * (m + 1.0);
  return v > 0.0 ? std::sqrt(v) : 0.0;
}

Index weight_index(int two_s, double m) {
  require(two_s >= 0, ErrorKind::InvalidInput, "weight_index: negative spin");
  const double k = 0.5 * two_s - m;
  const double kr = std::round(k);
  require(std::abs(k - kr) < 1e-9 && kr >= 0 && kr <= two_s, ErrorKind::InvalidInput,
          "weight index: m out of range for this spin");
  return static_cast<Index>(kr);
}

LieRep su2_rep(int two_s) {
  require(two_s >= 0, ErrorKind::InvalidInput, "su2_rep: two_s must be nonnegative");
  require(two_s + 1 <= kMaxDim, ErrorKind::InvalidInput, "su2_rep: dimension too large");
  const Index d = two_s + 1;
  const double s = 0.5 * two_s;

  Operator jz = Operator::Zero(d, d);
  Operator jp = Operator::Zero(d, d);
  for (Index k = 0; k < d; ++k) {
    const double m = s - static_cast<double>(k);
    jz(k, k) = m;
    if (k > 0) jp(k - 1, k) = ladder_coeff(s, m);
  }
  const Operator jm = jp.adjoint();
  const Operator jx = 0.5 * (jp + jm);
  const Operator jy = Complex(0, -0.5) * (jp - jm);

  LieRep rep;
  rep.name = "su2(two_s=" + std::to_string(two_s) + ")";
  rep.dim = d;
  rep.two_s = two_s;
  rep.generators = {jx, jy, jz};
  rep.cartan_indices = {2};
  rep.raising_ops = {jp};
  rep.hw_state = State::Unit(d, 0);
  rep.rank = 1;
  if (two_s == 0) {
    // Trivial rep: all generators vanish, nothing to orthogonalize.
    rep.hw_normalization = 0.0;
    return rep;
  }
  finalize(rep);
  return rep;
}

State weight_state(const LieRep& rep, double m) {
  require(rep.is_su2(), ErrorKind::InvalidInput, "weight_state: rep is not an su(2) irrep");
  return State::Unit(rep.dim, weight_index(rep.two_s, m));
}

MajoranaSet majorana_ops(int n) {
  require(n >= 1 && n <= 10, ErrorKind::InvalidInput, "majorana_ops: n must be in [1, 10]");
  MajoranaSet set;
  set.n = n;
  for (int j = 1; j <= n; ++j) {
    const std::string zs(static_cast<std::size_t>(j - 1), 'Z');
    const std::string is(static_cast<std::size_t>(n - j), 'I');
    set.ops.push_back(pauli_word_matrix(zs + 'X' + is));
    set.ops.push_back(pauli_word_matrix(zs + 'Y' + is));
  }
  return set;
}

Operator annihilation_op(const MajoranaSet& set, int j) {
  require(j >= 1 && j <= set.n, ErrorKind::InvalidInput, "annihilation_op: mode out of range");
  return 0.5 * (set.ops[2 * (j - 1)] + Complex(0, 1) * set.ops[2 * (j - 1) + 1]);
}

LieRep so2n_rep(int n) {
  const MajoranaSet maj = majorana_ops(n);
  const Index d = Index(1) << n;
  const int count = 2 * n;

  LieRep rep;
  rep.name = "so2n(n=" + std::to_string(n) + ")";
  rep.dim = d;
  rep.modes = n;
  rep.rank = n;
  for (int mu = 0; mu < count; ++mu) {
    for (int nu = mu + 1; nu < count; ++nu) {
      if (mu % 2 == 0 && nu == mu + 1) rep.cartan_indices.push_back(rep.generators.size());
      rep.generators.push_back(Complex(0, 1) * (maj.ops[mu] * maj.ops[nu]));
    }
  }
  rep.hw_state = State::Unit(d, 0);
  finalize(rep);
  return rep;
}

double closure_residual(const OperatorList& gens) {
  OperatorList algebra;
  algebra.reserve(gens.size());
  for (const auto& g : gens) algebra.push_back(Complex(0, 1) * g);
  const RealSpan span(algebra);
  double worst = 0.0;
  for (std::size_t a = 0; a < algebra.size(); ++a)
    for (std::size_t b = a + 1; b < algebra.size(); ++b)
      worst = std::max(worst, span.residual(commutator(algebra[a], algebra[b])));
  return worst;
}

double cartan_commutator_defect(const LieRep& rep) {
  double worst = 0.0;
  for (std::size_t a = 0; a < rep.cartan_indices.size(); ++a)
    for (std::size_t b = a + 1; b < rep.cartan_indices.size(); ++b)
      worst = std::max(worst, commutator(rep.generators[rep.cartan_indices[a]],
                                         rep.generators[rep.cartan_indices[b]])
                                  .norm());
  return worst;
}

double highest_weight_defect(const LieRep& rep) {
  double worst = 0.0;
  const State& hw = rep.hw_state;
  for (std::size_t idx : rep.cartan_indices) {
    const State image = rep.generators[idx] * hw;
    const Complex weight = hw.dot(image);
    worst = std::max(worst, (image - weight * hw).norm());
  }
  for (const auto& e : rep.raising_ops) worst = std::max(worst, (e * hw).norm());
  return worst;
}

double anticommutation_defect(const MajoranaSet& set) {
  const Index d = set.ops.empty() ? 0 : set.ops.front().rows();
  double worst = 0.0;
  for (std::size_t a = 0; a < set.ops.size(); ++a)
    for (std::size_t b = a; b < set.ops.size(); ++b) {
      Operator ac = anticommutator(set.ops[a], set.ops[b]);
      if (a == b) ac -= 2.0 * Operator::Identity(d, d);
      worst = std::max(worst, ac.norm());
    }
  return worst;
}

}  // namespace lieqrt
