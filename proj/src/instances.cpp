#include "mproj/instances.hpp"

#include "mproj/projection.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace mproj {

Matrix gaussian_matrix(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix a(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) a(i, j) = normal(rng);
  }
  return a;
}

Matrix random_orthonormal(Index n, Rng& rng) {
  const Matrix g = gaussian_matrix(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  // Sign fix makes the distribution Haar.
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    if (r(j, j) < 0) q.col(j) *= -1.0;
  }
  return q;
}

SelectionOperator random_mask(Index n, Index m, Rng& rng) {
  std::vector<Index> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), Index{0});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(m));
  return {std::move(all), n};
}

RandomInstance random_instance(Rng& rng, const InstanceFamily& family,
                               MaskKind mask_kind) {
  std::uniform_int_distribution<int> pick_n(family.n_min, family.n_max);
  const int n = pick_n(rng);
  std::uniform_int_distribution<int> pick_m(1, std::max(1, std::min(family.m_max, n / 2)));
  const int m = pick_m(rng);
  std::uniform_int_distribution<int> pick_samples(family.samples_min,
                                                  family.samples_max);
  const int count = pick_samples(rng);

  Matrix u = random_orthonormal(n, rng);
  PodBasis basis = PodBasis::from_orthonormal(u, m);
  std::optional<SelectionOperator> mask;
  if (mask_kind == MaskKind::Deim) {
    mask = deim_select(basis.u1);
  } else {
    do {
      mask = random_mask(n, m, rng);
    } while (mask_condition(*mask, basis.u1)(m - 1) <= 1e-6);
  }
  SnapshotMatrix samples =
      snapshots_from_matrix(gaussian_matrix(n, count, rng), "random");
  return {std::move(u), std::move(basis), std::move(*mask), std::move(samples)};
}

SnapshotMatrix gap_attaining_samples(const PodBasis& basis,
                                     const SelectionOperator& p,
                                     const Vector& lambdas, Rng& rng) {
  const Index m = basis.u1.cols();
  if (basis.n() < 2 * m) {
    throw DimensionError("gap_attaining_samples: need n >= 2m");
  }
  if (lambdas.size() != m) {
    throw DimensionError("gap_attaining_samples: need one eigenvalue per cosine");
  }
  const CsFactors cs = cs_factors(basis, p);
  if (cs.s.minCoeff() <= 1e-8) {
    throw NumericalError("gap_attaining_samples: a cosine equals one",
                         cs.s.minCoeff());
  }
  // Row j of the coupling is s_j times the j-th coupled column of V2.
  const Matrix directions = cs.s.cwiseInverse().asDiagonal() * cs.coupling;
  const Matrix coeffs = gaussian_matrix(m, m, rng);
  Matrix f(basis.n(), m);
  for (Index i = 0; i < m; ++i) {
    const Vector x = std::sqrt(lambdas(i)) * directions.row(m - 1 - i).transpose();
    f.col(i) = basis.u1 * coeffs.col(i) + basis.u2 * x;
  }
  return snapshots_from_matrix(std::move(f), "gap-attaining");
}

}  // namespace mproj
