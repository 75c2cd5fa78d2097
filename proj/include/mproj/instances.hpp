#pragma once

// Random problem instances for property checks.

#include "mproj/pod.hpp"
#include "mproj/selection.hpp"
#include "mproj/snapshot.hpp"

#include <random>

namespace mproj {

using Rng = std::mt19937_64;

struct InstanceFamily {
  int n_min = 6;
  int n_max = 40;
  int m_max = 8;  ///< m is drawn from [1, min(m_max, n/2)]
  int samples_min = 1;
  int samples_max = 10;
};

enum class MaskKind { Deim, Random };

struct RandomInstance {
  Matrix u;  ///< full n×n orthonormal basis
  PodBasis basis;
  SelectionOperator mask;
  SnapshotMatrix samples;
};

Matrix gaussian_matrix(Index rows, Index cols, Rng& rng);

/// Orthonormal n×n matrix from the QR factorization of a Gaussian matrix.
Matrix random_orthonormal(Index n, Rng& rng);

/// m distinct indices drawn uniformly from [0, n).
SelectionOperator random_mask(Index n, Index m, Rng& rng);

/// Random basis, mask and Gaussian samples. Random masks are redrawn until
/// σ_min(PᵀU1) > 1e-6.
RandomInstance random_instance(Rng& rng, const InstanceFamily& family,
                               MaskKind mask_kind);

/// Samples f_i = U1 a_i + U2 x_i whose U2-coordinates x_i lie along the
/// coupled right singular directions of PᵀU2, so that XXᵀ has eigenvalues
/// `lambdas` (descending) and the largest eigenvalue is paired with the
/// smallest cosine. The spectral gap bound is attained with equality on
/// these samples. Requires n >= 2m, lambdas.size() == m and every cosine
/// strictly below one.
SnapshotMatrix gap_attaining_samples(const PodBasis& basis,
                                     const SelectionOperator& p,
                                     const Vector& lambdas, Rng& rng);

}  // namespace mproj
