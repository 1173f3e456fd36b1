// types.hpp: dense value types shared by every module

#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace cqed {

using Complex = std::complex<double>;

template <typename Scalar>
using OperatorT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using VectorT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Operator on the truncated QD (x) Fock space.
using Operator = OperatorT<Complex>;
// Matrix acting on column-stacked density matrices (d^2 x d^2).
using Superoperator = OperatorT<Complex>;
using DensityVector = VectorT<Complex>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Linear frequency (GHz) to angular frequency (rad/ns).
constexpr double angular(double linear_ghz) { return kTwoPi * linear_ghz; }
constexpr double linear(double angular_rad_per_ns) { return angular_rad_per_ns / kTwoPi; }

} // namespace cqed
