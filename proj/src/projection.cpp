#include "mproj/projection.hpp"

#include <cmath>
#include <sstream>

namespace mproj {

namespace {

void check_mask(const PodBasis& basis, const SelectionOperator& p) {
  if (p.n() != basis.n() || p.m() != basis.u1.cols()) {
    std::ostringstream os;
    os << "mask (n=" << p.n() << ", m=" << p.m() << ") does not match basis (n="
       << basis.n() << ", m=" << basis.u1.cols() << ")";
    throw DimensionError(os.str());
  }
}

void check_sample(const PodBasis& basis, const Vector& f) {
  if (f.size() != basis.n()) {
    throw DimensionError("sample length " + std::to_string(f.size()) +
                         " does not match basis dimension " +
                         std::to_string(basis.n()));
  }
}

void require_invertible(const Vector& sigma) {
  const double smin = sigma(sigma.size() - 1);
  if (!(smin > kInvertibilityTol)) {
    std::ostringstream os;
    os << "PᵀU1 is numerically singular (smallest singular value " << smin << ")";
    throw NumericalError(os.str(), smin);
  }
}

}  // namespace

MaskedProjector::MaskedProjector(const PodBasis& basis,
                                 const SelectionOperator& p)
    : u1_(basis.u1), p_(p) {
  check_mask(basis, p);
  const Matrix block = select_rows(p, basis.u1);
  sigma_ = svd_values(block);
  require_invertible(sigma_);
  lu_.compute(block);
}

Matrix MaskedProjector::apply(const Matrix& f) const {
  if (f.rows() != u1_.rows()) {
    throw DimensionError("masked projection: sample length mismatch");
  }
  return u1_ * lu_.solve(select_rows(p_, f));
}

Vector MaskedProjector::apply(const Vector& f) const {
  if (f.size() != u1_.rows()) {
    throw DimensionError("masked projection: sample length mismatch");
  }
  return u1_ * lu_.solve(select_rows(p_, f));
}

Vector orthogonal_project(const PodBasis& basis, const Vector& f) {
  check_sample(basis, f);
  return basis.u1 * (basis.u1.transpose() * f);
}

Vector masked_project(const PodBasis& basis, const SelectionOperator& p,
                      const Vector& f) {
  check_sample(basis, f);
  return MaskedProjector(basis, p).apply(f);
}

ProjectionPair projection_pair(const PodBasis& basis,
                               const SelectionOperator& p, const Vector& f) {
  ProjectionPair out;
  out.f = f;
  out.f_tilde = masked_project(basis, p, f);
  out.f_hat = orthogonal_project(basis, f);
  out.err_orth_sq = (f - out.f_hat).squaredNorm();
  out.gap_sq = (out.f_tilde - out.f_hat).squaredNorm();
  out.err_masked_sq = (f - out.f_tilde).squaredNorm();
  return out;
}

CsFactors cs_factors(const PodBasis& basis, const SelectionOperator& p) {
  check_mask(basis, p);
  const Matrix q11 = select_rows(p, basis.u1);
  require_finite(q11, "cs_factors");
  Eigen::JacobiSVD<Matrix> svd(q11, Eigen::ComputeFullU | Eigen::ComputeFullV);
  CsFactors cs;
  cs.sigma = svd.singularValues();
  require_invertible(cs.sigma);
  cs.z1 = svd.matrixU();
  cs.v1 = svd.matrixV();
  cs.s = cs.sigma.unaryExpr(
      [](double c) { return std::sqrt(std::max(0.0, 1.0 - c * c)); });
  cs.coupling = cs.z1.transpose() * select_rows(p, basis.u2);
  cs.block_shape_ok = basis.n() >= 2 * basis.u1.cols();
  return cs;
}

double gap_identity_rhs(const CsFactors& cs, const PodBasis& basis,
                        const Vector& f) {
  check_sample(basis, f);
  if (cs.coupling.cols() != basis.u2.cols()) {
    throw DimensionError("gap_identity_rhs: CS factors do not match basis");
  }
  const Vector k2 = basis.u2.transpose() * f;
  return (cs.coupling * k2).cwiseQuotient(cs.sigma).squaredNorm();
}

}  // namespace mproj
