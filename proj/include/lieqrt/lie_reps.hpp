#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lieqrt/types.hpp"

namespace lieqrt {

/// A Hermitian basis {g_i} of a Lie algebra representation (the algebra is
/// the real span of {i g_i}) together with its Cartan and highest-weight data.
struct LieRep {
  std::string name;
  Index dim = 0;
  OperatorList generators;
  std::vector<std::size_t> cartan_indices;
  /// Raising operators e+_j; empty when no Cartan-Weyl data is attached.
  OperatorList raising_ops;
  State hw_state;
  Index rank = 0;
  /// sum_i <HW|g_i|HW>^2, the factor that makes the g-purity of |HW> equal 1.
  double hw_normalization = 0.0;

  /// 2s for su(2) irreps, -1 otherwise.
  int two_s = -1;
  /// Number of fermionic modes for so(2n) spinor reps, 0 otherwise.
  int modes = 0;

  bool is_su2() const { return two_s >= 0; }
  double spin() const { return 0.5 * two_s; }
};

struct MajoranaSet {
  int n = 0;
  OperatorList ops;
};

/// Ladder coefficient c(s, m) = sqrt(s(s+1) - m(m+1)).
double ladder_coeff(double s, double m);

/// Basis index of |s, m> for a spin with 2s = two_s (index 0 is m = s).
Index weight_index(int two_s, double m);

/// Spin-s irrep of su(2): generators {Jx, Jy, Jz}, Cartan {Jz}, raising {J+},
/// highest weight |s, s> = e_0. Jz = diag(s, s-1, ..., -s).
LieRep su2_rep(int two_s);

/// |s, m> with a real positive amplitude on its basis vector.
State weight_state(const LieRep& rep, double m);

/// Tensor product of Pauli letters from {I, X, Y, Z}, leftmost letter most
/// significant.
Operator pauli_word_matrix(const std::string& word);

/// Jordan-Wigner Majoranas on n qubits, qubit 1 the most significant factor:
/// c_{2j-1} = Z^(j-1) X I^(n-j), c_{2j} = Z^(j-1) Y I^(n-j).
MajoranaSet majorana_ops(int n);

/// a_j = (c_{2j-1} + i c_{2j}) / 2, j = 1..n.
Operator annihilation_op(const MajoranaSet& set, int j);

/// Spinor rep of so(2n): generators i c_mu c_nu for mu < nu in lexicographic
/// order, Cartan {i c_{2j-1} c_{2j}}, highest weight the Jordan-Wigner vacuum.
/// In this ordering every Cartan generator has eigenvalue -1 on the vacuum.
LieRep so2n_rep(int n);

/// Max over pairs of the distance from [i g_a, i g_b] to span_R{i g_c}.
double closure_residual(const OperatorList& hermitian_generators);

/// Max Frobenius norm of [h_a, h_b] over Cartan pairs.
double cartan_commutator_defect(const LieRep& rep);

/// Max over Cartan generators of ||h|HW> - <h>|HW>|| and over raising
/// operators of ||e+|HW>||.
double highest_weight_defect(const LieRep& rep);

/// Max ||c_a c_b + c_b c_a - 2 delta_ab I||_F.
double anticommutation_defect(const MajoranaSet& set);

}  // namespace lieqrt
