#include "mproj/snapshot.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

using namespace mproj;

TEST_CASE("grid_1d examples") {
  const Grid1D g = grid_1d(0, 2, 3);
  CHECK(g.points() == std::vector<double>{0, 1, 2});
  const Grid1D e = grid_1d(-1, 1, 2);
  CHECK(e.points() == std::vector<double>{-1, 1});

  const Grid1D p = grid_1d(1, std::numbers::pi, 101);
  CHECK(p.count() == 101);
  CHECK(p.spacing() == doctest::Approx(0.021415926535897932).epsilon(1e-15));
  CHECK(p[0] == 1.0);
  CHECK(p[100] == std::numbers::pi);
  for (int i = 0; i + 1 < p.count(); ++i) CHECK(p[i] < p[i + 1]);
}

TEST_CASE("grid_1d rejects bad arguments") {
  CHECK_THROWS_AS(grid_1d(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(grid_1d(1, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(grid_1d(2, 1, 5), std::invalid_argument);
}

TEST_CASE("example1_eval") {
  CHECK(example1_eval(0, 0, 0) == 0.0);
  CHECK(example1_eval(0, 0, 2) == 0.0);
  // (x + y - mu) = 1, (2x - 3mu) = -1
  CHECK(example1_eval(1, 1, 1) ==
        doctest::Approx(1.0 / std::sqrt(1.0 + 1.0 + 1e-4)).epsilon(1e-15));
  CHECK(example1_eval(1, 1, 1) == doctest::Approx(0.70708910418).epsilon(1e-10));
  // Denominator never below 0.01.
  CHECK(std::abs(example1_eval(0.6, 1.2, 0.4)) <= 1.2 / 0.01);
}

TEST_CASE("example2_eval") {
  CHECK(example2_eval(1, 0.3) == 0.0);
  CHECK(example2_eval(1, 2.9) == 0.0);
  CHECK(example2_eval(-1, 2) == 2.0);
  CHECK(example2_eval(0, 1) == doctest::Approx(-std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("build_snapshots_ex1 small cases and layout") {
  const SnapshotMatrix s = build_snapshots_ex1(2, 2, grid_1d(0, 2, 2));
  CHECK(s.rows() == 4);
  CHECK(s.cols() == 2);
  CHECK(s.data(0, 0) == 0.0);  // (x, y) = (0, 0)

  const int nx = 5, ny = 4;
  const Grid1D mu = grid_1d(0, 2, 7);
  const SnapshotMatrix t = build_snapshots_ex1(nx, ny, mu);
  const Grid1D xs = grid_1d(0, 2, nx), ys = grid_1d(0, 2, ny);
  for (int k = 0; k < mu.count(); ++k) {
    // Fold the column back into an nx×ny array: x index fastest.
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        CHECK(t.data(i + nx * j, k) == example1_eval(xs[i], ys[j], mu[k]));
      }
    }
  }
}

TEST_CASE("build_snapshots_ex1 at benchmark size") {
  const SnapshotMatrix s = build_snapshots_ex1(30, 30, grid_1d(0, 2, 225));
  CHECK(s.rows() == 900);
  CHECK(s.cols() == 225);
  CHECK(s.data.allFinite());
  // Column norms against an independent per-point sum.
  const Grid1D xs = grid_1d(0, 2, 30);
  for (int k : {0, 57, 224}) {
    const double mu = s.params[k];
    double acc = 0.0;
    for (int i = 0; i < 30; ++i) {
      for (int j = 0; j < 30; ++j) {
        const double v = xs[j] / std::sqrt(std::pow(xs[i] + xs[j] - mu, 2) +
                                           std::pow(2 * xs[i] - 3 * mu, 2) + 1e-4);
        acc += v * v;
      }
    }
    CHECK(s.data.col(k).squaredNorm() == doctest::Approx(acc).epsilon(1e-12));
  }
}

TEST_CASE("build_snapshots_ex2") {
  const SnapshotMatrix s = build_snapshots_ex2(2, grid_1d(1, std::numbers::pi, 4));
  for (Index j = 0; j < s.cols(); ++j) {
    CHECK(s.data(0, j) == 2.0);
    CHECK(s.data(1, j) == 0.0);
  }
  const Grid1D mu = grid_1d(1, std::numbers::pi, 50);
  const SnapshotMatrix t = build_snapshots_ex2(100, mu);
  CHECK(t.rows() == 100);
  CHECK(t.cols() == 50);
  const Grid1D xs = grid_1d(-1, 1, 100);
  for (int j = 0; j < 50; ++j) {
    for (int i = 0; i < 100; ++i) CHECK(t.data(i, j) == example2_eval(xs[i], mu[j]));
  }
}

TEST_CASE("matrix csv layout round-trips bit-exactly") {
  const SnapshotMatrix s = build_snapshots_ex2(7, grid_1d(0, std::numbers::pi, 3));
  std::stringstream ss;
  write_matrix_csv(ss, s.data, s.layout);
  std::string first;
  {
    std::stringstream copy(ss.str());
    std::getline(copy, first);
  }
  CHECK(first == "7,3," + s.layout);
  std::string layout;
  const Matrix back = read_matrix_csv(ss, &layout);
  CHECK(layout == s.layout);
  CHECK(back == s.data);
}

TEST_CASE("matrix csv reader rejects malformed input") {
  std::stringstream a("2,2,x\n1,2\n3\n");
  CHECK_THROWS_AS(read_matrix_csv(a), Error);
  std::stringstream b("2,2,x\n1,2\n");
  CHECK_THROWS_AS(read_matrix_csv(b), Error);
  std::stringstream c("2;2\n");
  CHECK_THROWS_AS(read_matrix_csv(c), Error);
  std::stringstream d("1,1,x\nabc\n");
  CHECK_THROWS_AS(read_matrix_csv(d), Error);
}

TEST_CASE("snapshot csv file round trip") {
  const SnapshotMatrix s = build_snapshots_ex1(3, 3, grid_1d(0, 2, 4));
  const std::string path = "snapshot_roundtrip_test.csv";
  write_snapshot_csv(path, s);
  const SnapshotMatrix back = read_snapshot_csv(path);
  std::remove(path.c_str());
  CHECK(back.data == s.data);
  CHECK(back.layout == s.layout);
  CHECK(back.params.size() == 4);
}
