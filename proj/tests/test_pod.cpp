#include "mproj/instances.hpp"
#include "mproj/pod.hpp"

#include <doctest.h>

using namespace mproj;

namespace {

void check_basis_invariants(const PodBasis& b) {
  const Index n = b.n();
  const Index m = b.m;
  REQUIRE(b.u1.cols() == m);
  REQUIRE(b.u2.rows() == n);
  REQUIRE(b.u2.cols() == n - m);
  CHECK((b.u1.transpose() * b.u1 - Matrix::Identity(m, m)).norm() < 1e-10);
  CHECK((b.u2.transpose() * b.u2 - Matrix::Identity(n - m, n - m)).norm() < 1e-10);
  CHECK((b.u1.transpose() * b.u2).norm() < 1e-10);
}

}  // namespace

TEST_CASE("pod_basis on identity snapshots") {
  const SnapshotMatrix s = snapshots_from_matrix(Matrix::Identity(3, 3), "id");
  const PodBasis b = pod_basis(s, 1);
  check_basis_invariants(b);
  // u1 is a signed canonical vector.
  CHECK(b.u1.cwiseAbs().maxCoeff() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b.u1.cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pod_basis at benchmark size") {
  const SnapshotMatrix s = build_snapshots_ex1(30, 30, grid_1d(0, 2, 225));
  const PodBasis b = pod_basis(s, 10);
  CHECK(b.u1.rows() == 900);
  CHECK(b.u1.cols() == 10);
  CHECK(b.u2.cols() == 890);
  check_basis_invariants(b);

  // Eckart-Young: residual equals the discarded singular energy.
  const Matrix resid = s.data - b.u1 * (b.u1.transpose() * s.data);
  const double tail = b.snapshot_values.tail(b.snapshot_values.size() - 10).squaredNorm();
  CHECK(resid.squaredNorm() == doctest::Approx(tail).epsilon(1e-8));

  // Completeness on training and held-out samples.
  const SnapshotMatrix test = build_snapshots_ex1(30, 30, grid_1d(0, 2, 17));
  for (const SnapshotMatrix* set : {&s, &test}) {
    for (Index j = 0; j < set->cols(); ++j) {
      const Vector f = set->data.col(j);
      const Vector back = b.u1 * (b.u1.transpose() * f) + b.u2 * (b.u2.transpose() * f);
      CHECK((back - f).norm() <= 1e-8 * std::max(f.norm(), 1e-300));
    }
  }
}

TEST_CASE("orthogonal projection error is non-increasing in m") {
  const SnapshotMatrix s = build_snapshots_ex2(60, grid_1d(0, 3.14159, 30));
  const PodFactorization pod(s);
  double prev = std::numeric_limits<double>::infinity();
  for (int m = 1; m <= 20; ++m) {
    const PodBasis b = pod.basis(m);
    const double err =
        (s.data - b.u1 * (b.u1.transpose() * s.data)).colwise().squaredNorm().mean();
    CHECK(err <= prev * (1 + 1e-12) + 1e-300);
    prev = err;
  }
}

TEST_CASE("pod_basis rejects invalid ranks") {
  const SnapshotMatrix s = build_snapshots_ex2(10, grid_1d(1, 3, 4));
  CHECK_THROWS_AS(pod_basis(s, 0), std::invalid_argument);
  CHECK_THROWS_AS(pod_basis(s, 10), std::invalid_argument);
  CHECK_THROWS_AS(pod_basis(s, 12), std::invalid_argument);
  // Four snapshots cannot support a fifth direction.
  try {
    (void)pod_basis(s, 5);
    FAIL("expected rank deficiency");
  } catch (const NumericalError& e) {
    CHECK(e.value() <= 1e-12 * 10);
  }
  // Rank-one data.
  Matrix r1 = Matrix::Zero(5, 3);
  r1.col(0).setOnes();
  r1.col(1) = 2 * r1.col(0);
  CHECK_THROWS_AS(pod_basis(snapshots_from_matrix(r1, "r1"), 2), NumericalError);
}

TEST_CASE("from_orthonormal splits a square basis") {
  Rng rng(3);
  const Matrix u = random_orthonormal(9, rng);
  const PodBasis b = PodBasis::from_orthonormal(u, 4);
  check_basis_invariants(b);
  CHECK(b.snapshot_values.size() == 0);
  CHECK_THROWS_AS(PodBasis::from_orthonormal(Matrix::Identity(3, 2), 1), DimensionError);
}
