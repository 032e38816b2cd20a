#pragma once

#include <Eigen/Dense>
#include <complex>

namespace spinorlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Entrywise max-norm; all identity checks in the matrix core use it.
inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }
inline double max_abs(const Vector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

/// Default tolerance for algebraic identities that are exact up to rounding.
inline constexpr double kIdentityTol = 1e-12;

/// Default relative tolerance for rank decisions on spinor kernels.
inline constexpr double kRankTol = 1e-9;

}  // namespace spinorlab
