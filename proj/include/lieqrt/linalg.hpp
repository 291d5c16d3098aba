#pragma once

#include <cmath>
#include <string>
#include <type_traits>

#include <Eigen/Dense>

#include "lieqrt/error.hpp"
#include "lieqrt/types.hpp"

namespace lieqrt {

namespace detail {
template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};
}  // namespace detail

/// Upper bound on operator dimension accepted by the dense routines.
inline constexpr Index kMaxDim = 4096;

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& a) {
  return a.allFinite();
}

/// Tr[A^dagger B].
template <typename DA, typename DB>
auto hs_inner(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::DimensionMismatch,
          "hs_inner: operand shapes differ");
  return (a.conjugate().cwiseProduct(b)).sum();
}

template <typename DA, typename DB>
auto commutator(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  return (a * b - b * a).eval();
}

template <typename DA, typename DB>
auto anticommutator(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  return (a * b + b * a).eval();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, double tol = 1e-12) {
  return a.rows() == a.cols() && (a - a.adjoint()).norm() <= tol;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u, double tol = 1e-10) {
  using Plain = typename Derived::PlainObject;
  return u.rows() == u.cols() &&
         (u.adjoint() * u - Plain::Identity(u.rows(), u.cols())).norm() <= tol;
}

/// Frobenius norm of AA^dagger - A^dagger A.
template <typename Derived>
double normality_defect(const Eigen::MatrixBase<Derived>& a) {
  return (a * a.adjoint() - a.adjoint() * a).norm();
}

/// Kronecker product a (x) b, with a acting on the more significant factor.
template <typename DA, typename DB>
auto kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace detail {

// Scaling and squaring with diagonal Pade approximants of degree 3..13
// (Higham, SIAM J. Matrix Anal. Appl. 26, 2005).
template <typename Matrix>
Matrix pade_exp(const Matrix& a) {
  using Real = typename Eigen::NumTraits<typename Matrix::Scalar>::Real;
  const Index n = a.rows();
  const Matrix id = Matrix::Identity(n, n);
  const Real norm1 = a.cwiseAbs().colwise().sum().maxCoeff();

  auto finish = [&](const Matrix& u, const Matrix& v, int squarings) {
    Matrix r = (v - u).partialPivLu().solve(v + u);
    for (int i = 0; i < squarings; ++i) r = (r * r).eval();
    return r;
  };

  if (norm1 <= Real(1.495585217958292e-2)) {
    const Real b[] = {120., 60., 12., 1.};
    const Matrix a2 = a * a;
    return finish(a * (b[3] * a2 + b[1] * id), b[2] * a2 + b[0] * id, 0);
  }
  if (norm1 <= Real(2.539398330063230e-1)) {
    const Real b[] = {30240., 15120., 3360., 420., 30., 1.};
    const Matrix a2 = a * a;
    const Matrix a4 = a2 * a2;
    return finish(a * (b[5] * a4 + b[3] * a2 + b[1] * id), b[4] * a4 + b[2] * a2 + b[0] * id,
                  0);
  }
  if (norm1 <= Real(9.504178996162932e-1)) {
    const Real b[] = {17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.};
    const Matrix a2 = a * a;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a4 * a2;
    return finish(a * (b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id),
                  b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id, 0);
  }
  if (norm1 <= Real(2.097847961257068)) {
    const Real b[] = {17643225600., 8821612800., 2075673600., 302702400., 30270240.,
                      2162160.,     110880.,     3960.,       90.,        1.};
    const Matrix a2 = a * a;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a4 * a2;
    const Matrix a8 = a6 * a2;
    return finish(a * (b[9] * a8 + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id),
                  b[8] * a8 + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id, 0);
  }

  const Real theta13 = Real(5.371920351148152);
  int squarings = 0;
  if (norm1 > theta13) squarings = std::max(0, int(std::ceil(std::log2(norm1 / theta13))));
  const Matrix as = a / std::pow(Real(2), squarings);
  const Real b[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                    1187353796428800.,  129060195264000.,   10559470521600.,
                    670442572800.,      33522128640.,       1323241920.,
                    40840800.,          960960.,            16380.,
                    182.,               1.};
  const Matrix a2 = as * as;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a4 * a2;
  const Matrix u =
      as * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 +
            b[1] * id);
  const Matrix v =
      a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
  return finish(u, v, squarings);
}

// e^A for normal A through a unitary diagonalization.
template <typename Matrix>
Matrix normal_exp(const Matrix& a) {
  using Scalar = typename Matrix::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  const Real scale = a.norm();
  const Scalar i_unit(0, 1);
  if ((a - a.adjoint()).norm() <= Real(1e-14) * scale) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(((a + a.adjoint()) / Real(2)).eval());
    const auto& v = es.eigenvectors();
    return v * es.eigenvalues().array().exp().matrix().asDiagonal() * v.adjoint();
  }
  if ((a + a.adjoint()).norm() <= Real(1e-14) * scale) {
    const Matrix h = ((a - a.adjoint()) / (Real(2) * i_unit)).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    const auto& v = es.eigenvectors();
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> phases =
        (i_unit * es.eigenvalues().template cast<Scalar>()).array().exp();
    return v * phases.asDiagonal() * v.adjoint();
  }
  Eigen::ComplexSchur<Matrix> schur(a);
  const Matrix& q = schur.matrixU();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> d = schur.matrixT().diagonal().array().exp();
  return q * d.asDiagonal() * q.adjoint();
}

}  // namespace detail

/// Matrix exponential. Normal inputs (defect below 1e-12 ||A||^2) go through a
/// unitary eigendecomposition, everything else through scaling and squaring.
template <typename Derived>
typename Derived::PlainObject mat_exp(const Eigen::MatrixBase<Derived>& a) {
  using Matrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  require(a.rows() == a.cols(), ErrorKind::DimensionMismatch, "mat_exp: matrix not square");
  require(a.rows() >= 1 && a.rows() <= kMaxDim, ErrorKind::InvalidInput,
          "mat_exp: dimension out of range");
  require(a.allFinite(), ErrorKind::InvalidInput, "mat_exp: non-finite entries");
  const Matrix m = a;
  const Real sq = m.squaredNorm();
  if (sq == Real(0)) return Derived::PlainObject::Identity(a.rows(), a.cols());
  if constexpr (detail::is_complex<typename Derived::Scalar>::value) {
    if (normality_defect(m) < Real(1e-12) * sq) return detail::normal_exp(m);
  }
  return detail::pade_exp(m);
}

struct QrFactors {
  Operator q;
  Operator r;
};

/// QR with the diagonal of R made real and strictly positive, which fixes
/// the factorization uniquely. Throws Singular if sigma_min <= 1e-12.
QrFactors qr_positive(const Operator& m);

/// Smallest singular value.
double sigma_min(const Operator& m);

/// Orthogonalizes a set of operators in the real Hilbert-Schmidt geometry
/// Re Tr[A^dagger B]. An already orthogonal set comes back unchanged;
/// otherwise every output has unit HS norm. Throws DependentSet when a pivot
/// drops below 1e-12 of the input norm.
OperatorList gram_schmidt_hs(const OperatorList& ops);

/// Real linear span of a family of operators, for membership residuals.
/// Each operator is flattened to the real vector (Re vec A, Im vec A).
class RealSpan {
 public:
  explicit RealSpan(const OperatorList& ops, double rank_tol = 1e-10);

  Index rank() const { return basis_.cols(); }
  Index dim() const { return dim_; }

  /// Frobenius norm of x minus its orthogonal projection onto the span.
  double residual(const Operator& x) const;

 private:
  Index dim_ = 0;
  Eigen::MatrixXd basis_;
};

Eigen::VectorXd flatten_real(const Operator& x);

}  // namespace lieqrt
