#pragma once

// Complete orthonormal basis U = [U1 U2] from proper orthogonal decomposition.

#include "mproj/numerics.hpp"
#include "mproj/snapshot.hpp"

namespace mproj {

/// [u1 u2] is a square orthonormal n×n matrix split after column m.
struct PodBasis {
  Matrix u1;
  Matrix u2;
  /// Snapshot singular values, descending. Empty for synthetic bases.
  Vector snapshot_values;
  int m = 0;

  Index n() const { return u1.rows(); }

  /// Wraps a given square orthonormal matrix, split after column m.
  static PodBasis from_orthonormal(const Matrix& u, int m);
};

/// Reusable full SVD of a snapshot matrix, so several ranks can be cut from
/// one factorization.
class PodFactorization {
 public:
  explicit PodFactorization(const SnapshotMatrix& snapshots);

  /// Throws std::invalid_argument for m outside [1, n) and NumericalError
  /// when snapshot_values[m-1] <= 1e-12 * snapshot_values[0].
  PodBasis basis(int m) const;

  const SvdFactors& svd() const { return svd_; }
  Index n() const { return svd_.left.rows(); }

 private:
  SvdFactors svd_;
};

PodBasis pod_basis(const SnapshotMatrix& snapshots, int m);

}  // namespace mproj
