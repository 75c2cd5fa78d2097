#include "mproj/numerics.hpp"

#include <cmath>
#include <sstream>

namespace mproj {

namespace {

void require_nonempty(const Matrix& a, const char* op) {
  if (a.rows() < 1 || a.cols() < 1) {
    std::ostringstream os;
    os << op << ": empty matrix (" << a.rows() << "x" << a.cols() << ")";
    throw DimensionError(os.str());
  }
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

bool all_finite(const Matrix& a) { return a.allFinite(); }

void require_finite(const Matrix& a, const std::string& what) {
  if (a.allFinite()) return;
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (!std::isfinite(a(i, j))) {
        std::ostringstream os;
        os << what << ": non-finite entry " << a(i, j) << " at (" << i << ","
           << j << ")";
        throw NonFiniteError(os.str());
      }
    }
  }
}

SvdFactors svd_full(const Matrix& a) {
  require_nonempty(a, "svd_full");
  require_finite(a, "svd_full");
  Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("svd_full: SVD backend failed to converge", 0.0);
  }
  SvdFactors out;
  out.left = svd.matrixU();
  out.values = svd.singularValues();
  out.right = svd.matrixV();
  out.full_left = true;
  return out;
}

Vector svd_values(const Matrix& a) {
  require_nonempty(a, "svd_values");
  require_finite(a, "svd_values");
  Eigen::BDCSVD<Matrix> svd(a);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("svd_values: SVD backend failed to converge", 0.0);
  }
  return svd.singularValues();
}

EigFactors sym_eig_desc(const Matrix& a) {
  require_nonempty(a, "sym_eig_desc");
  if (a.rows() != a.cols()) {
    throw DimensionError("sym_eig_desc: matrix is not square");
  }
  require_finite(a, "sym_eig_desc");
  const double asym = (a - a.transpose()).norm();
  if (asym > 1e-10 * a.norm()) {
    throw NumericalError("sym_eig_desc: matrix is not symmetric", asym);
  }
  const Matrix sym = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym);
  if (eig.info() != Eigen::Success) {
    throw NumericalError("sym_eig_desc: eigen solver failed to converge", 0.0);
  }
  // Eigen returns ascending order.
  EigFactors out;
  out.values = eig.eigenvalues().reverse();
  out.vectors = eig.eigenvectors().rowwise().reverse();
  return out;
}

}  // namespace mproj
