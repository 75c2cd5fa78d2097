#pragma once

// Benchmark functions, uniform grids and snapshot matrices.

#include "mproj/numerics.hpp"

#include <iosfwd>
#include <numbers>
#include <string>
#include <vector>

namespace mproj {

/// Inclusive equally spaced grid on [lo, hi].
class Grid1D {
 public:
  Grid1D(double lo, double hi, int count);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  int count() const { return static_cast<int>(points_.size()); }
  double spacing() const { return (hi_ - lo_) / (count() - 1); }
  const std::vector<double>& points() const { return points_; }
  double operator[](std::size_t i) const { return points_[i]; }

 private:
  double lo_;
  double hi_;
  std::vector<double> points_;
};

Grid1D grid_1d(double lo, double hi, int count);

/// f(x, y, mu) = y / sqrt((x + y - mu)^2 + (2x - 3mu)^2 + 0.01^2)
double example1_eval(double x, double y, double mu);

/// f(x, mu) = (1 - x) cos(3 pi mu (x + 1)) exp(-(x + 1) mu)
double example2_eval(double x, double mu);

/// Fixed domains of the two benchmark functions.
struct Example1Domain {
  static constexpr double x_lo = 0.0, x_hi = 2.0;
  static constexpr double y_lo = 0.0, y_hi = 2.0;
  static constexpr double mu_lo = 0.0, mu_hi = 2.0;
};

struct Example2Domain {
  static constexpr double x_lo = -1.0, x_hi = 1.0;
  // The published Example 2 tables are reproduced with parameters drawn
  // from [0, pi]; see README.
  static constexpr double mu_lo = 0.0, mu_hi = std::numbers::pi;
};

/// Column j holds the vectorized samples f(., mu_j).
///
/// Example 1 uses column stacking of the nx×ny array (x index fastest):
/// row = i + nx*j for the point (x_i, y_j).
struct SnapshotMatrix {
  Matrix data;
  std::vector<double> params;
  std::string layout;

  Index rows() const { return data.rows(); }
  Index cols() const { return data.cols(); }
};

SnapshotMatrix build_snapshots_ex1(int nx, int ny, const Grid1D& mu_grid);
SnapshotMatrix build_snapshots_ex2(int nx, const Grid1D& mu_grid);

/// Wraps an arbitrary matrix (e.g. read from disk) as snapshots; params are
/// the column indices.
SnapshotMatrix snapshots_from_matrix(Matrix data, std::string layout);

// Matrix CSV layout: a header line "n,N,layout" followed by n lines of N
// comma-separated values each, printed with round-trip precision.
void write_matrix_csv(std::ostream& os, const Matrix& a,
                      const std::string& layout);
void write_matrix_csv(const std::string& path, const Matrix& a,
                      const std::string& layout);
Matrix read_matrix_csv(std::istream& is, std::string* layout = nullptr);
Matrix read_matrix_csv(const std::string& path, std::string* layout = nullptr);

void write_snapshot_csv(const std::string& path, const SnapshotMatrix& s);
SnapshotMatrix read_snapshot_csv(const std::string& path);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

}  // namespace mproj
