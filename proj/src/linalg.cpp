#include "lieqrt/linalg.hpp"

#include <algorithm>

namespace lieqrt {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::DependentSet: return "dependent set";
    case ErrorKind::Singular: return "singular matrix";
    case ErrorKind::Unnormalized: return "unnormalized state";
    case ErrorKind::InvariantViolation: return "invariant violation";
    case ErrorKind::NumericalFailure: return "numerical failure";
  }
  return "error";
}

double sigma_min(const Operator& m) {
  if (m.rows() <= 16) {
    Eigen::JacobiSVD<Operator> svd(m);
    return svd.singularValues().minCoeff();
  }
  Eigen::BDCSVD<Operator> svd(m);
  return svd.singularValues().minCoeff();
}

QrFactors qr_positive(const Operator& m) {
  require(m.rows() == m.cols() && m.rows() > 0, ErrorKind::DimensionMismatch,
          "qr_positive: matrix not square");
  require(m.allFinite(), ErrorKind::InvalidInput, "qr_positive: non-finite entries");
  require(sigma_min(m) > 1e-12, ErrorKind::Singular, "qr_positive: matrix is singular");

  const Index n = m.rows();
  Eigen::HouseholderQR<Operator> qr(m);
  Operator q = qr.householderQ() * Operator::Identity(n, n);
  Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index i = 0; i < n; ++i) {
    const Complex phase = r(i, i) / std::abs(r(i, i));
    q.col(i) *= phase;
    r.row(i) *= std::conj(phase);
    r(i, i) = Complex(r(i, i).real(), 0.0);
  }
  return {std::move(q), std::move(r)};
}

OperatorList gram_schmidt_hs(const OperatorList& ops) {
  if (ops.empty()) return {};
  const Index rows = ops.front().rows();
  const Index cols = ops.front().cols();
  for (const auto& op : ops)
    require(op.rows() == rows && op.cols() == cols, ErrorKind::DimensionMismatch,
            "gram_schmidt_hs: operators of different shape");

  std::vector<double> norms;
  norms.reserve(ops.size());
  for (const auto& op : ops) {
    norms.push_back(op.norm());
    require(norms.back() > 1e-12, ErrorKind::DependentSet, "gram_schmidt_hs: zero operator");
  }

  bool orthogonal = true;
  for (std::size_t i = 0; i < ops.size() && orthogonal; ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      if (std::abs(hs_inner(ops[i], ops[j]).real()) > 1e-10 * norms[i] * norms[j]) {
        orthogonal = false;
        break;
      }
  if (orthogonal) return ops;

  // Modified Gram-Schmidt, real inner product.
  OperatorList out;
  out.reserve(ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    Operator v = ops[i];
    for (const auto& u : out) v -= hs_inner(u, v).real() * u;
    const double nv = v.norm();
    require(nv > 1e-12 * norms[i], ErrorKind::DependentSet,
            "gram_schmidt_hs: operator " + std::to_string(i) + " is in the span of the others");
    out.push_back(v / nv);
  }
  return out;
}

Eigen::VectorXd flatten_real(const Operator& x) {
  const Index n = x.size();
  Eigen::VectorXd v(2 * n);
  v.head(n) = x.reshaped().real();
  v.tail(n) = x.reshaped().imag();
  return v;
}

RealSpan::RealSpan(const OperatorList& ops, double rank_tol) {
  if (ops.empty()) return;
  dim_ = 2 * ops.front().size();
  Eigen::MatrixXd a(dim_, static_cast<Index>(ops.size()));
  for (std::size_t i = 0; i < ops.size(); ++i) {
    require(2 * ops[i].size() == dim_, ErrorKind::DimensionMismatch,
            "RealSpan: operators of different shape");
    a.col(static_cast<Index>(i)) = flatten_real(ops[i]);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(rank_tol);
  const Index rank = qr.rank();
  basis_ = qr.householderQ() * Eigen::MatrixXd::Identity(dim_, rank);
}

double RealSpan::residual(const Operator& x) const {
  const Eigen::VectorXd v = flatten_real(x);
  if (basis_.cols() == 0) return v.norm();
  require(v.size() == dim_, ErrorKind::DimensionMismatch, "RealSpan::residual: shape");
  return (v - basis_ * (basis_.transpose() * v)).norm();
}

}  // namespace lieqrt
