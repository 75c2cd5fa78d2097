#include "mproj/pod.hpp"

#include <sstream>

namespace mproj {

namespace {

void check_rank(Index n, int m) {
  if (m < 1 || m >= n) {
    std::ostringstream os;
    os << "pod basis: need 1 <= m < n, got m=" << m << ", n=" << n;
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

PodBasis PodBasis::from_orthonormal(const Matrix& u, int m) {
  if (u.rows() != u.cols()) {
    throw DimensionError("PodBasis::from_orthonormal: basis must be square");
  }
  check_rank(u.rows(), m);
  PodBasis b;
  b.m = m;
  b.u1 = u.leftCols(m);
  b.u2 = u.rightCols(u.cols() - m);
  return b;
}

PodFactorization::PodFactorization(const SnapshotMatrix& snapshots)
    : svd_(svd_full(snapshots.data)) {}

PodBasis PodFactorization::basis(int m) const {
  check_rank(n(), m);
  const Vector& s = svd_.values;
  // Directions beyond the snapshot rank carry no data.
  const double sm = m <= s.size() ? s(m - 1) : 0.0;
  if (!(sm > 1e-12 * s(0))) {
    std::ostringstream os;
    os << "pod basis: snapshot matrix is rank deficient at m=" << m
       << " (singular value " << sm << ")";
    throw NumericalError(os.str(), sm);
  }
  PodBasis b;
  b.m = m;
  b.u1 = svd_.left.leftCols(m);
  b.u2 = svd_.left.rightCols(n() - m);
  b.snapshot_values = s;
  return b;
}

PodBasis pod_basis(const SnapshotMatrix& snapshots, int m) {
  check_rank(snapshots.rows(), m);
  return PodFactorization(snapshots).basis(m);
}

}  // namespace mproj
