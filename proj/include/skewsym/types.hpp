#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace skewsym {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Default relative tolerance for classification and residual checks.
inline constexpr double kDefaultTol = 1e-9;
/// Absolute tolerance used when validating constructed kernels.
inline constexpr double kConstructionTol = 1e-10;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct NotSquare : Error {
    using Error::Error;
};
struct NotSymmetric : Error {
    using Error::Error;
};
struct NotUnitary : Error {
    using Error::Error;
};
struct NotSkew : Error {
    using Error::Error;
};
struct NumericalFailure : Error {
    using Error::Error;
};
struct MissingArgument : Error {
    using Error::Error;
};
struct InvalidVariant : Error {
    using Error::Error;
};
struct InvalidK : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct InvalidArgument : Error {
    using Error::Error;
};
struct DegenerateInput : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

inline void require_same_dim(Index a, Index b, const char* where) {
    if (a != b) {
        throw DimensionMismatch(std::string(where) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

}  // namespace skewsym
