#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieqrt/types.hpp"

namespace lieqrt {

/// i^phase times a tensor product of Pauli letters, kept symbolic so the
/// group law is exact.
struct PauliElement {
  int phase = 0;  // mod 4
  std::string word;

  std::size_t qubits() const { return word.size(); }
  std::string str() const;

  friend bool operator==(const PauliElement&, const PauliElement&) = default;
  friend auto operator<=>(const PauliElement&, const PauliElement&) = default;
};

PauliElement operator*(const PauliElement& a, const PauliElement& b);

/// Inverse within the group: the word is self-inverse, only the phase flips.
PauliElement inverse(const PauliElement& p);

Operator to_matrix(const PauliElement& p);

/// All 4 * 4^n elements of P_n, n in [1, 3].
std::vector<PauliElement> pauli_group(int n);

struct GroupCheck {
  bool closed = false;
  bool associative = false;
  bool has_inverses = false;
  /// to_matrix(a * b) == to_matrix(a) to_matrix(b) for every pair.
  bool faithful_matrices = false;

  bool ok() const { return closed && associative && has_inverses && faithful_matrices; }
};

/// Exhaustive multiplication-table check of P_n; n in [1, 2].
GroupCheck check_pauli_group(int n);

struct GeneratorImage {
  std::string generator;  // e.g. "X1", "Z2"
  std::optional<PauliElement> image;
  double residual = 0.0;
};

struct AutomorphismCertificate {
  bool preserved = false;
  std::vector<GeneratorImage> images;
};

/// Decides whether P -> U P U^{-1} keeps every generator X_i, Z_i of P_n
/// inside the matrix image of P_n (entrywise tolerance 1e-10).
AutomorphismCertificate conjugation_is_automorphism(const Operator& u, int n);

/// Identifies x as i^k times a Pauli word when possible.
std::optional<PauliElement> match_pauli(const Operator& x, int n, double tol,
                                        double* residual = nullptr);

/// Element of the ring D_d(R) of real diagonal matrices.
struct DiagonalRingElement {
  Eigen::VectorXd diag;

  Operator to_matrix() const { return diag.cast<Complex>().asDiagonal(); }
};

DiagonalRingElement operator+(const DiagonalRingElement& a, const DiagonalRingElement& b);
DiagonalRingElement operator*(const DiagonalRingElement& a, const DiagonalRingElement& b);

/// True iff P D P^{-1} is diagonal for every one-hot diagonal D.
bool generalized_permutation_preserves_ring(const Operator& p, Index d);

/// The set {H} whose automorphisms are the invertible M commuting with H.
class CommutantSpec {
 public:
  explicit CommutantSpec(Operator hamiltonian);
  const Operator& hamiltonian() const { return h_; }

 private:
  Operator h_;
};

bool commutant_member(const Operator& m, const CommutantSpec& spec);

struct LocalAlgebraReport {
  Index dim_a = 0;
  Index dim_b = 0;
  std::size_t generator_count = 0;
  Index span_rank = 0;
  double closure_residual = 0.0;
  /// Worst residual of (U_A (x) U_B) X (U_A (x) U_B)^dagger outside the span.
  double local_unitary_residual = 0.0;
  /// Worst residual of (U_A (x) I) X_A (U_A (x) I)^dagger outside the A-local span.
  double a_factor_residual = 0.0;
  bool swap_checked = false;
  /// SWAP maps A-local onto B-local generators and back.
  double swap_residual = 0.0;

  bool passed(double tol = 1e-10) const;
};

/// Builds {i P_A (x) I, I (x) i P_B} for Hermitian bases of L(H_A), L(H_B)
/// and checks Lie closure, local-unitary invariance and (dA == dB) SWAP.
LocalAlgebraReport local_algebra_check(Index dim_a, Index dim_b, std::uint64_t seed = 2024);

/// Hermitian basis of L(C^d): diagonal units, then symmetric and
/// antisymmetric off-diagonal pairs.
OperatorList hermitian_basis(Index d);

}  // namespace lieqrt
