#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace bwy {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

// Regular ideal tetrahedron volume D(e^{i pi/3}).
inline constexpr double kV3 = 1.0149416064096536250;

// Largest absolute row sum.
inline double norm_inf(const CMatrix& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

enum class Exec { Serial, Parallel };

}  // namespace bwy
