#include "mproj/snapshot.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace mproj {

Grid1D::Grid1D(double lo, double hi, int count) : lo_(lo), hi_(hi) {
  if (count < 2) {
    throw std::invalid_argument("grid_1d: count must be at least 2, got " +
                                std::to_string(count));
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("grid_1d: require lo < hi");
  }
  const double step = (hi - lo) / (count - 1);
  points_.resize(static_cast<std::size_t>(count));
  for (int i = 0; i < count - 1; ++i) points_[i] = lo + i * step;
  points_.back() = hi;
}

Grid1D grid_1d(double lo, double hi, int count) { return {lo, hi, count}; }

double example1_eval(double x, double y, double mu) {
  const double a = x + y - mu;
  const double b = 2.0 * x - 3.0 * mu;
  return y / std::sqrt(a * a + b * b + 0.01 * 0.01);
}

double example2_eval(double x, double mu) {
  return (1.0 - x) * std::cos(3.0 * std::numbers::pi * mu * (x + 1.0)) *
         std::exp(-(x + 1.0) * mu);
}

SnapshotMatrix build_snapshots_ex1(int nx, int ny, const Grid1D& mu_grid) {
  if (nx < 2 || ny < 2) {
    throw std::invalid_argument("build_snapshots_ex1: nx, ny must be >= 2");
  }
  const Grid1D xs(Example1Domain::x_lo, Example1Domain::x_hi, nx);
  const Grid1D ys(Example1Domain::y_lo, Example1Domain::y_hi, ny);
  SnapshotMatrix out;
  out.data.resize(static_cast<Index>(nx) * ny, mu_grid.count());
  out.params = mu_grid.points();
  out.layout = "ex1 x-fastest " + std::to_string(nx) + "x" + std::to_string(ny);
  for (int k = 0; k < mu_grid.count(); ++k) {
    const double mu = mu_grid[k];
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        out.data(i + static_cast<Index>(nx) * j, k) = example1_eval(xs[i], ys[j], mu);
      }
    }
  }
  return out;
}

SnapshotMatrix build_snapshots_ex2(int nx, const Grid1D& mu_grid) {
  if (nx < 2) {
    throw std::invalid_argument("build_snapshots_ex2: nx must be >= 2");
  }
  const Grid1D xs(Example2Domain::x_lo, Example2Domain::x_hi, nx);
  SnapshotMatrix out;
  out.data.resize(nx, mu_grid.count());
  out.params = mu_grid.points();
  out.layout = "ex2 x " + std::to_string(nx);
  for (int k = 0; k < mu_grid.count(); ++k) {
    for (int i = 0; i < nx; ++i) {
      out.data(i, k) = example2_eval(xs[i], mu_grid[k]);
    }
  }
  return out;
}

SnapshotMatrix snapshots_from_matrix(Matrix data, std::string layout) {
  require_finite(data, "snapshot matrix");
  SnapshotMatrix out;
  out.params.resize(static_cast<std::size_t>(data.cols()));
  for (std::size_t j = 0; j < out.params.size(); ++j) out.params[j] = double(j);
  out.data = std::move(data);
  out.layout = std::move(layout);
  return out;
}

std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

void write_matrix_csv(std::ostream& os, const Matrix& a,
                      const std::string& layout) {
  if (layout.find_first_of(",\n") != std::string::npos) {
    throw std::invalid_argument("matrix csv: layout must not contain ',' or newline");
  }
  os << a.rows() << ',' << a.cols() << ',' << layout << '\n';
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (j) os << ',';
      os << format_double(a(i, j));
    }
    os << '\n';
  }
}

void write_matrix_csv(const std::string& path, const Matrix& a,
                      const std::string& layout) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path + "' for writing");
  write_matrix_csv(os, a, layout);
  if (!os) throw Error("write to '" + path + "' failed");
}

namespace {

double parse_double(std::string_view tok, std::size_t line) {
  while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
  while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\r')) tok.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error("matrix csv line " + std::to_string(line) + ": bad number '" +
                std::string(tok) + "'");
  }
  return v;
}

Index parse_count(std::string_view tok, const char* what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 1) {
    throw Error(std::string("matrix csv header: bad ") + what + " '" +
                std::string(tok) + "'");
  }
  return static_cast<Index>(v);
}

}  // namespace

Matrix read_matrix_csv(std::istream& is, std::string* layout) {
  std::string line;
  if (!std::getline(is, line)) throw Error("matrix csv: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto c1 = line.find(',');
  const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
  if (c2 == std::string::npos) {
    throw Error("matrix csv: header must be 'n,N,layout'");
  }
  const std::string_view hdr(line);
  const Index n = parse_count(hdr.substr(0, c1), "row count");
  const Index cols = parse_count(hdr.substr(c1 + 1, c2 - c1 - 1), "column count");
  if (layout) *layout = line.substr(c2 + 1);

  Matrix a(n, cols);
  for (Index i = 0; i < n; ++i) {
    if (!std::getline(is, line)) {
      throw Error("matrix csv: expected " + std::to_string(n) + " rows, got " +
                  std::to_string(i));
    }
    std::string_view rest(line);
    for (Index j = 0; j < cols; ++j) {
      const auto comma = rest.find(',');
      if ((comma == std::string_view::npos) != (j == cols - 1)) {
        throw Error("matrix csv line " + std::to_string(i + 2) + ": expected " +
                    std::to_string(cols) + " values");
      }
      a(i, j) = parse_double(rest.substr(0, comma), std::size_t(i + 2));
      if (comma != std::string_view::npos) rest.remove_prefix(comma + 1);
    }
  }
  return a;
}

Matrix read_matrix_csv(const std::string& path, std::string* layout) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open '" + path + "'");
  return read_matrix_csv(is, layout);
}

void write_snapshot_csv(const std::string& path, const SnapshotMatrix& s) {
  write_matrix_csv(path, s.data, s.layout);
}

SnapshotMatrix read_snapshot_csv(const std::string& path) {
  std::string layout;
  Matrix a = read_matrix_csv(path, &layout);
  return snapshots_from_matrix(std::move(a), std::move(layout));
}

}  // namespace mproj
