#include "lieqrt/structures.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "lieqrt/error.hpp"
#include "lieqrt/lie_reps.hpp"
#include "lieqrt/linalg.hpp"
#include "lieqrt/random.hpp"

namespace lieqrt {

namespace {

constexpr std::array<char, 4> kLetters = {'I', 'X', 'Y', 'Z'};

// Single-qubit product a*b = i^phase * letter.
std::pair<int, char> letter_product(char a, char b) {
  if (a == 'I') return {0, b};
  if (b == 'I') return {0, a};
  if (a == b) return {0, 'I'};
  // Cyclic XY = iZ, YZ = iX, ZX = iY; reversed order picks up -i.
  if ((a == 'X' && b == 'Y') || (a == 'Y' && b == 'Z') || (a == 'Z' && b == 'X'))
    return {1, static_cast<char>('X' + 'Y' + 'Z' - a - b)};
  return {3, static_cast<char>('X' + 'Y' + 'Z' - a - b)};
}

Complex i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

std::vector<std::string> all_words(int n) {
  std::vector<std::string> words{""};
  for (int q = 0; q < n; ++q) {
    std::vector<std::string> next;
    next.reserve(words.size() * 4);
    for (const auto& w : words)
      for (char c : kLetters) next.push_back(w + c);
    words = std::move(next);
  }
  return words;
}

double max_abs(const Operator& x) { return x.cwiseAbs().maxCoeff(); }

Operator inverse_checked(const Operator& m, const char* who) {
  require(m.rows() == m.cols(), ErrorKind::DimensionMismatch, std::string(who) + ": not square");
  require(sigma_min(m) > 1e-12, ErrorKind::Singular, std::string(who) + ": singular operator");
  return m.partialPivLu().inverse();
}

}  // namespace

std::string PauliElement::str() const {
  static const char* prefix[] = {"+", "+i", "-", "-i"};
  return prefix[((phase % 4) + 4) % 4] + word;
}

PauliElement operator*(const PauliElement& a, const PauliElement& b) {
  require(a.word.size() == b.word.size(), ErrorKind::DimensionMismatch,
          "Pauli product: qubit counts differ");
  PauliElement out;
  out.phase = a.phase + b.phase;
  out.word.resize(a.word.size());
  for (std::size_t q = 0; q < a.word.size(); ++q) {
    const auto [ph, letter] = letter_product(a.word[q], b.word[q]);
    out.phase += ph;
    out.word[q] = letter;
  }
  out.phase = ((out.phase % 4) + 4) % 4;
  return out;
}

PauliElement inverse(const PauliElement& p) {
  return {(4 - ((p.phase % 4) + 4) % 4) % 4, p.word};
}

Operator to_matrix(const PauliElement& p) {
  return i_pow(p.phase) * pauli_word_matrix(p.word);
}

std::vector<PauliElement> pauli_group(int n) {
  require(n >= 1 && n <= 3, ErrorKind::InvalidInput, "pauli_group: n must be in [1, 3]");
  std::vector<PauliElement> out;
  for (int phase = 0; phase < 4; ++phase)
    for (const auto& w : all_words(n)) out.push_back({phase, w});
  return out;
}

GroupCheck check_pauli_group(int n) {
  require(n >= 1 && n <= 2, ErrorKind::InvalidInput, "check_pauli_group: n must be in [1, 2]");
  const auto group = pauli_group(n);
  const std::set<PauliElement> members(group.begin(), group.end());
  const PauliElement identity{0, std::string(static_cast<std::size_t>(n), 'I')};

  std::vector<Operator> mats;
  for (const auto& g : group) mats.push_back(to_matrix(g));

  GroupCheck check{true, true, true, true};
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (group[i] * inverse(group[i]) != identity || inverse(group[i]) * group[i] != identity)
      check.has_inverses = false;
    for (std::size_t j = 0; j < group.size(); ++j) {
      const PauliElement ab = group[i] * group[j];
      if (!members.count(ab)) check.closed = false;
      if (max_abs(to_matrix(ab) - mats[i] * mats[j]) > 1e-12) check.faithful_matrices = false;
      for (const auto& c : group)
        if ((ab * c) != (group[i] * (group[j] * c))) check.associative = false;
    }
  }
  return check;
}

std::optional<PauliElement> match_pauli(const Operator& x, int n, double tol, double* residual) {
  const Index d = Index(1) << n;
  require(x.rows() == d && x.cols() == d, ErrorKind::DimensionMismatch, "match_pauli: dimension");
  // Each Pauli word has exactly one unit-modulus entry per row, so the
  // largest entry pins the candidate word up to the phase read off from it.
  double best = -1.0;
  PauliElement candidate;
  for (const auto& w : all_words(n)) {
    PauliElement p{0, w};
    const Complex c = hs_inner(to_matrix(p), x) / double(d);
    if (std::abs(c) > best) {
      best = std::abs(c);
      candidate = p;
    }
  }
  const Operator base = to_matrix(candidate);
  Index r = 0, col = 0;
  base.cwiseAbs().maxCoeff(&r, &col);
  const Complex ratio = x(r, col) / base(r, col);
  int phase = 0;
  double closest = 1e300;
  for (int k = 0; k < 4; ++k)
    if (std::abs(ratio - i_pow(k)) < closest) {
      closest = std::abs(ratio - i_pow(k));
      phase = k;
    }
  candidate.phase = phase;
  const double res = max_abs(x - to_matrix(candidate));
  if (residual) *residual = res;
  if (res <= tol) return candidate;
  return std::nullopt;
}

AutomorphismCertificate conjugation_is_automorphism(const Operator& u, int n) {
  require(n >= 1 && n <= 3, ErrorKind::InvalidInput,
          "conjugation_is_automorphism: n must be in [1, 3]");
  const Index d = Index(1) << n;
  require(u.rows() == d && u.cols() == d, ErrorKind::DimensionMismatch,
          "conjugation_is_automorphism: operator dimension");
  const Operator u_inv = inverse_checked(u, "conjugation_is_automorphism");

  AutomorphismCertificate cert;
  cert.preserved = true;
  for (int q = 0; q < n; ++q) {
    for (char letter : {'X', 'Z'}) {
      std::string word(static_cast<std::size_t>(n), 'I');
      word[q] = letter;
      GeneratorImage img;
      img.generator = std::string(1, letter) + std::to_string(q + 1);
      const Operator conj = u * to_matrix({0, word}) * u_inv;
      img.image = match_pauli(conj, n, 1e-10, &img.residual);
      if (!img.image) cert.preserved = false;
      cert.images.push_back(std::move(img));
    }
  }
  return cert;
}

DiagonalRingElement operator+(const DiagonalRingElement& a, const DiagonalRingElement& b) {
  require(a.diag.size() == b.diag.size(), ErrorKind::DimensionMismatch, "diagonal ring: size");
  return {a.diag + b.diag};
}

DiagonalRingElement operator*(const DiagonalRingElement& a, const DiagonalRingElement& b) {
  require(a.diag.size() == b.diag.size(), ErrorKind::DimensionMismatch, "diagonal ring: size");
  return {a.diag.cwiseProduct(b.diag)};
}

bool generalized_permutation_preserves_ring(const Operator& p, Index d) {
  require(p.rows() == d && p.cols() == d, ErrorKind::DimensionMismatch,
          "generalized_permutation_preserves_ring: dimension");
  const Operator p_inv = inverse_checked(p, "generalized_permutation_preserves_ring");
  for (Index j = 0; j < d; ++j) {
    const Operator x = p.col(j) * p_inv.row(j);  // P E_jj P^{-1}
    Operator off = x;
    off.diagonal().setZero();
    if (max_abs(off) > 1e-10 * std::max(1.0, max_abs(x))) return false;
  }
  return true;
}

CommutantSpec::CommutantSpec(Operator hamiltonian) : h_(std::move(hamiltonian)) {
  require(is_hermitian(h_, 1e-12), ErrorKind::InvalidInput, "CommutantSpec: H not Hermitian");
}

bool commutant_member(const Operator& m, const CommutantSpec& spec) {
  const Operator& h = spec.hamiltonian();
  require(m.rows() == h.rows() && m.cols() == h.cols(), ErrorKind::DimensionMismatch,
          "commutant_member: dimension");
  return commutator(m, h).norm() < 1e-10 && sigma_min(m) > 1e-12;
}

OperatorList hermitian_basis(Index d) {
  OperatorList out;
  for (Index j = 0; j < d; ++j) {
    Operator e = Operator::Zero(d, d);
    e(j, j) = 1;
    out.push_back(e);
  }
  for (Index j = 0; j < d; ++j)
    for (Index k = j + 1; k < d; ++k) {
      Operator sym = Operator::Zero(d, d);
      sym(j, k) = 1;
      sym(k, j) = 1;
      Operator anti = Operator::Zero(d, d);
      anti(j, k) = Complex(0, -1);
      anti(k, j) = Complex(0, 1);
      out.push_back(sym);
      out.push_back(anti);
    }
  return out;
}

bool LocalAlgebraReport::passed(double tol) const {
  return closure_residual < tol && local_unitary_residual < tol && a_factor_residual < tol &&
         (!swap_checked || swap_residual < tol);
}

LocalAlgebraReport local_algebra_check(Index dim_a, Index dim_b, std::uint64_t seed) {
  require(dim_a >= 1 && dim_b >= 1 && dim_a * dim_b <= 16, ErrorKind::InvalidInput,
          "local_algebra_check: dA * dB must be at most 16");
  const Operator id_a = Operator::Identity(dim_a, dim_a);
  const Operator id_b = Operator::Identity(dim_b, dim_b);
  LocalAlgebraReport rep;
  rep.dim_a = dim_a;
  rep.dim_b = dim_b;

  OperatorList a_local, b_local;
  for (const auto& p : hermitian_basis(dim_a)) a_local.push_back(kron(p, id_b));
  for (const auto& p : hermitian_basis(dim_b)) b_local.push_back(kron(id_a, p));
  OperatorList gens = a_local;
  gens.insert(gens.end(), b_local.begin(), b_local.end());
  rep.generator_count = gens.size();

  auto as_algebra = [](const OperatorList& hs) {
    OperatorList out;
    for (const auto& h : hs) out.push_back(Complex(0, 1) * h);
    return out;
  };
  const RealSpan span(as_algebra(gens));
  const RealSpan span_a(as_algebra(a_local));
  const RealSpan span_b(as_algebra(b_local));
  rep.span_rank = span.rank();
  rep.closure_residual = closure_residual(gens);

  Rng rng(seed);
  const Operator ua = haar_unitary(dim_a, rng);
  const Operator ub = haar_unitary(dim_b, rng);
  const Operator w = kron(ua, ub);
  const Operator wa = kron(ua, id_b);
  for (const auto& g : gens)
    rep.local_unitary_residual = std::max(
        rep.local_unitary_residual, span.residual(Complex(0, 1) * (w * g * w.adjoint())));
  for (const auto& g : a_local)
    rep.a_factor_residual = std::max(
        rep.a_factor_residual, span_a.residual(Complex(0, 1) * (wa * g * wa.adjoint())));

  if (dim_a == dim_b) {
    rep.swap_checked = true;
    const Index d = dim_a * dim_b;
    Operator swap = Operator::Zero(d, d);
    for (Index i = 0; i < dim_a; ++i)
      for (Index j = 0; j < dim_b; ++j) swap(j * dim_a + i, i * dim_b + j) = 1;
    for (const auto& g : a_local)
      rep.swap_residual =
          std::max(rep.swap_residual, span_b.residual(Complex(0, 1) * (swap * g * swap)));
    for (const auto& g : b_local)
      rep.swap_residual =
          std::max(rep.swap_residual, span_a.residual(Complex(0, 1) * (swap * g * swap)));
  }
  return rep;
}

}  // namespace lieqrt
