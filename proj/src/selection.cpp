#include "mproj/selection.hpp"

#include <charconv>
#include <sstream>
#include <unordered_set>

namespace mproj {

SelectionOperator::SelectionOperator(std::vector<Index> indices, Index n)
    : indices_(std::move(indices)), n_(n) {
  if (n_ < 1) throw std::invalid_argument("selection: n must be positive");
  if (m() > n_) {
    throw std::invalid_argument("selection: more indices than rows");
  }
  std::unordered_set<Index> seen;
  for (Index i : indices_) {
    if (i < 0 || i >= n_) {
      throw std::invalid_argument("selection: index " + std::to_string(i) +
                                  " out of range [0, " + std::to_string(n_) + ")");
    }
    if (!seen.insert(i).second) {
      throw std::invalid_argument("selection: duplicate index " +
                                  std::to_string(i));
    }
  }
}

SelectionOperator SelectionOperator::identity(Index n) {
  std::vector<Index> idx(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) idx[i] = i;
  return {std::move(idx), n};
}

std::string SelectionOperator::to_csv_line() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) os << ',';
    os << indices_[i] + 1;
  }
  return os.str();
}

SelectionOperator SelectionOperator::from_csv_line(const std::string& line,
                                                   Index n) {
  std::vector<Index> idx;
  std::string_view rest(line);
  while (!rest.empty() && (rest.back() == '\n' || rest.back() == '\r')) {
    rest.remove_suffix(1);
  }
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("selection csv: bad index '" +
                                  std::string(tok) + "'");
    }
    idx.push_back(static_cast<Index>(v - 1));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return {std::move(idx), n};
}

Matrix select_rows(const SelectionOperator& p, const Matrix& a) {
  if (a.rows() != p.n()) {
    throw DimensionError("select_rows: operand has " + std::to_string(a.rows()) +
                         " rows, mask expects " + std::to_string(p.n()));
  }
  return a(p.indices(), Eigen::all);
}

Vector select_rows(const SelectionOperator& p, const Vector& a) {
  if (a.size() != p.n()) {
    throw DimensionError("select_rows: vector length " + std::to_string(a.size()) +
                         ", mask expects " + std::to_string(p.n()));
  }
  return a(p.indices());
}

namespace {

Index argmax_abs(const Vector& r) {
  Index best = 0;
  double best_val = std::abs(r(0));
  for (Index i = 1; i < r.size(); ++i) {
    if (std::abs(r(i)) > best_val) {
      best_val = std::abs(r(i));
      best = i;
    }
  }
  return best;
}

}  // namespace

SelectionOperator deim_select(const Matrix& u1) {
  const Index n = u1.rows();
  const Index m = u1.cols();
  if (m < 1 || m > n) {
    throw DimensionError("deim_select: need 1 <= m <= n");
  }
  require_finite(u1, "deim_select");
  std::vector<Index> idx;
  idx.reserve(static_cast<std::size_t>(m));
  idx.push_back(argmax_abs(u1.col(0)));
  if (std::abs(u1(idx[0], 0)) <= kInvertibilityTol) {
    throw NumericalError("deim_select: first basis vector is zero", 0.0);
  }
  for (Index k = 1; k < m; ++k) {
    const Matrix block = u1(idx, Eigen::seqN(0, k));
    const Vector rhs = u1(idx, k);
    const Vector c = block.fullPivLu().solve(rhs);
    const Vector r = u1.col(k) - u1.leftCols(k) * c;
    const Index next = argmax_abs(r);
    if (std::abs(r(next)) <= kInvertibilityTol) {
      std::ostringstream os;
      os << "deim_select: interpolation residual vanishes at step " << k + 1;
      throw NumericalError(os.str(), std::abs(r(next)));
    }
    idx.push_back(next);
  }
  return {std::move(idx), n};
}

Vector mask_condition(const SelectionOperator& p, const Matrix& u1) {
  if (p.m() != u1.cols()) {
    throw DimensionError("mask_condition: mask selects " + std::to_string(p.m()) +
                         " rows but basis has " + std::to_string(u1.cols()) +
                         " columns");
  }
  return svd_values(select_rows(p, u1));
}

}  // namespace mproj
