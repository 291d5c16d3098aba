#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace lieqrt {

using Complex = std::complex<double>;
using Index = Eigen::Index;

/// Dense complex operator on C^d. Hermiticity and unitarity are checked
/// through predicates, never assumed by the type.
using Operator = Eigen::MatrixXcd;

/// Amplitudes of a pure state. Normalized unless a function says otherwise.
using State = Eigen::VectorXcd;

using OperatorList = std::vector<Operator>;

}  // namespace lieqrt
