#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace itokit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RowVector = Eigen::RowVectorXcd;
using Index = Eigen::Index;

/// Coefficient vector of an algebra element over the declared basis.
using Element = Vector;

inline constexpr double kDefaultTol = 1e-9;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An element or matrix does not match the owning algebra's dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Invalid builder or configuration parameters.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A structural hypothesis fails (no quotient identity, non-minimal
/// representation, degenerate metric, ...).
class StructureError : public Error {
public:
    using Error::Error;
};

}  // namespace itokit
