#include "mproj/instances.hpp"
#include "mproj/numerics.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <limits>
#include <numbers>

using namespace mproj;

namespace {

void check_svd_contract(const Matrix& a, const SvdFactors& svd) {
  const Index n = a.rows();
  const Index k = std::min(a.rows(), a.cols());
  REQUIRE(svd.full_left);
  REQUIRE(svd.left.rows() == n);
  REQUIRE(svd.left.cols() == n);
  REQUIRE(svd.values.size() == k);
  CHECK((svd.left.transpose() * svd.left - Matrix::Identity(n, n)).norm() < 1e-10);
  for (Index i = 0; i + 1 < k; ++i) CHECK(svd.values(i) >= svd.values(i + 1));
  CHECK(svd.values.minCoeff() >= 0.0);
  const Matrix recon = svd.left.leftCols(k) * svd.values.asDiagonal() *
                       svd.right.leftCols(k).transpose();
  CHECK((a - recon).norm() <= 1e-8 * std::max(a.norm(), 1e-300));
}

}  // namespace

TEST_CASE("svd_full on the identity") {
  const Matrix a = Matrix::Identity(3, 3);
  const SvdFactors svd = svd_full(a);
  check_svd_contract(a, svd);
  CHECK((svd.values - Vector::Ones(3)).norm() < 1e-14);
  CHECK((svd.left.cwiseAbs() - Matrix::Identity(3, 3)).norm() < 1e-12);
}

TEST_CASE("svd_full on the zero matrix") {
  const Matrix a = Matrix::Zero(2, 2);
  const SvdFactors svd = svd_full(a);
  CHECK(svd.values.norm() == 0.0);
  CHECK((svd.left.transpose() * svd.left - Matrix::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("svd_full on a tall rank-one matrix completes the left factor") {
  Matrix a = Matrix::Zero(3, 2);
  a(0, 0) = 3.0;
  const SvdFactors svd = svd_full(a);
  check_svd_contract(a, svd);
  CHECK(svd.values(0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(std::abs(svd.values(1)) < 1e-14);
  CHECK(std::abs(std::abs(svd.left(0, 0)) - 1.0) < 1e-12);
}

TEST_CASE("svd_values examples") {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 0.2;
  d(1, 1) = 0.5;
  const Vector v = svd_values(d);
  CHECK(v(0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(v(1) == doctest::Approx(0.2).epsilon(1e-15));

  const double t = 0.7;
  Matrix rot(2, 2);
  rot << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  CHECK((svd_values(rot) - Vector::Ones(2)).norm() < 1e-14);

  Matrix shear(2, 2);
  shear << 1, 1, 0, 1;
  const auto [s1, s2] = oracle::singular_values_2x2(shear);
  const double phi = std::numbers::phi;
  CHECK(s1 == doctest::Approx(phi).epsilon(1e-14));
  CHECK(s2 == doctest::Approx(1.0 / phi).epsilon(1e-14));
  const Vector sv = svd_values(shear);
  CHECK(std::abs(sv(0) - s1) < 1e-14);
  CHECK(std::abs(sv(1) - s2) < 1e-14);
}

TEST_CASE("svd rejects non-finite input") {
  Matrix a = Matrix::Ones(2, 2);
  a(1, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(svd_full(a), NonFiniteError);
  CHECK_THROWS_AS(svd_values(a), NonFiniteError);
  a(1, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(svd_values(a), NonFiniteError);
}

TEST_CASE("sym_eig_desc examples") {
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 1, 4, 2;
  const EigFactors e = sym_eig_desc(d);
  CHECK(e.values(0) == 4.0);
  CHECK(e.values(1) == 2.0);
  CHECK(e.values(2) == 1.0);

  const EigFactors id = sym_eig_desc(Matrix::Identity(4, 4));
  CHECK((id.values - Vector::Ones(4)).norm() < 1e-14);
  CHECK((id.vectors.transpose() * id.vectors - Matrix::Identity(4, 4)).norm() < 1e-12);

  Vector x(3);
  x << 1, 2, 2;
  const EigFactors r1 = sym_eig_desc(x * x.transpose());
  CHECK(r1.values(0) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(std::abs(r1.values(1)) < 1e-13);
  CHECK(std::abs(r1.values(2)) < 1e-13);
  CHECK(std::abs(std::abs(r1.vectors.col(0).dot(x / 3.0)) - 1.0) < 1e-12);
}

TEST_CASE("sym_eig_desc rejects asymmetric input") {
  Matrix a(2, 2);
  a << 1, 2, 0, 1;
  CHECK_THROWS_AS(sym_eig_desc(a), NumericalError);
  CHECK_THROWS_AS(sym_eig_desc(Matrix::Ones(2, 3)), DimensionError);
}

TEST_CASE("numerics properties on random matrices") {
  Rng rng(7);
  std::uniform_int_distribution<int> dim(1, 20);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = dim(rng);
    const Index k = dim(rng);
    const Matrix a = gaussian_matrix(n, k, rng);
    const SvdFactors svd = svd_full(a);
    check_svd_contract(a, svd);
    const Vector vals = svd_values(a);
    CHECK((vals - svd.values).cwiseAbs().maxCoeff() < 1e-10);

    const Matrix q = random_orthonormal(n, rng);
    CHECK((svd_values(q.transpose() * a) - vals).cwiseAbs().maxCoeff() < 1e-10);

    const Matrix g = a * a.transpose();
    const EigFactors e = sym_eig_desc(g);
    CHECK(std::abs(e.values.sum() - g.trace()) <= 1e-10 * g.trace() + 1e-12);
    CHECK(e.values.minCoeff() >= -1e-10 * std::max(1.0, e.values(0)));
    for (Index i = 0; i + 1 < e.values.size(); ++i) {
      CHECK(e.values(i) >= e.values(i + 1));
    }
    const double a2 = e.values(0);
    for (Index i = 0; i < n; ++i) {
      const Vector lhs = g * e.vectors.col(i);
      CHECK((lhs - e.values(i) * e.vectors.col(i)).norm() <= 1e-8 * std::max(a2, 1e-300));
    }
  }
}

TEST_CASE("pairwise_sum is exact on small integers and order-stable") {
  std::vector<double> v(1000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = double(i + 1);
  CHECK(pairwise_sum(v) == 500500.0);
  CHECK(pairwise_sum({}) == 0.0);
  std::vector<double> w{1e-17, 1.0, -1.0};
  CHECK(pairwise_sum(w) == pairwise_sum(w));
}
