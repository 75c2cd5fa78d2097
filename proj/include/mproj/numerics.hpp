#pragma once

// Dense linear-algebra contracts used throughout mproj.
//
// Matrices are Eigen column-major doubles. Singular values and eigenvalues
// are always returned in descending order; singular vector signs are
// unspecified.

#include <Eigen/Dense>

#include <span>
#include <stdexcept>
#include <string>

namespace mproj {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input contains NaN or Inf.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// A factorization or solve is numerically impossible at the requested level.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double value)
      : Error(what), value_(value) {}
  /// The offending quantity (singular value, residual, ...).
  double value() const { return value_; }

 private:
  double value_;
};

struct SvdFactors {
  Matrix left;
  Vector values;
  Matrix right;
  bool full_left = false;
};

struct EigFactors {
  Vector values;
  Matrix vectors;
};

bool all_finite(const Matrix& a);

/// Throws NonFiniteError naming `what` if `a` has a non-finite entry.
void require_finite(const Matrix& a, const std::string& what);

/// Pairwise (tree) summation with a fixed split order, so results are
/// reproducible bit-for-bit for the same input sequence.
double pairwise_sum(std::span<const double> values);

/// SVD with the complete n×n orthonormal left factor.
SvdFactors svd_full(const Matrix& a);

/// Singular values only, descending.
Vector svd_values(const Matrix& a);

/// Eigen-decomposition of a symmetric matrix, eigenvalues descending.
/// The input is symmetrized before factoring; asymmetry beyond
/// 1e-10·‖A‖_F is rejected.
EigFactors sym_eig_desc(const Matrix& a);

}  // namespace mproj
