#pragma once

// Mask (selection) operators. P is stored as its list of selected rows and
// never formed densely. Indices are 0-based in code and 1-based in text.

#include "mproj/numerics.hpp"

#include <string>
#include <vector>

namespace mproj {

class SelectionOperator {
 public:
  /// Throws std::invalid_argument unless the indices are distinct, in
  /// [0, n), and at most n of them.
  SelectionOperator(std::vector<Index> indices, Index n);

  static SelectionOperator identity(Index n);

  const std::vector<Index>& indices() const { return indices_; }
  Index n() const { return n_; }
  Index m() const { return static_cast<Index>(indices_.size()); }

  /// Single line of comma-separated 1-based indices.
  std::string to_csv_line() const;
  static SelectionOperator from_csv_line(const std::string& line, Index n);

  friend bool operator==(const SelectionOperator&,
                         const SelectionOperator&) = default;

 private:
  std::vector<Index> indices_;
  Index n_;
};

/// Pᵀa: row i of the result is row indices[i] of a.
Matrix select_rows(const SelectionOperator& p, const Matrix& a);
Vector select_rows(const SelectionOperator& p, const Vector& a);

/// Greedy DEIM selection over the columns of u1, ties to the smallest row.
/// Throws NumericalError if the interpolation residual vanishes at some step.
SelectionOperator deim_select(const Matrix& u1);

/// Singular values of Pᵀu1, descending.
Vector mask_condition(const SelectionOperator& p, const Matrix& u1);

/// Threshold below which Pᵀu1 is treated as singular.
inline constexpr double kInvertibilityTol = 1e-12;

}  // namespace mproj
