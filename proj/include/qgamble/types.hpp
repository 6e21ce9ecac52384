#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace qgamble {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Normalization / unitarity tolerance shared by the state engine.
inline constexpr double kNormTol = 1e-12;

// Branches with probability below this are reported absent instead of
// renormalizing numerical noise.
inline constexpr double kCollapseFloor = 1e-12;

// States further than this from unit norm are rejected by measurement.
inline constexpr double kStateNormSlack = 1e-9;

// A state handed to an operation that requires unit norm was degenerate.
struct InvalidStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qgamble
