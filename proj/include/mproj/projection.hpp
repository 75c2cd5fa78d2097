#pragma once

// Orthogonal and masked projections, their errors, and the cosine-sine
// quantities of the partitioned orthogonal matrix [PᵀU1 PᵀU2].

#include "mproj/numerics.hpp"
#include "mproj/pod.hpp"
#include "mproj/selection.hpp"

namespace mproj {

/// Leading blocks of the CS decomposition of [PᵀU1 PᵀU2]:
///   PᵀU1 = Z1 C V1ᵀ,   Z1ᵀ PᵀU2 = [S 0] V2ᵀ  (= coupling).
/// V2 itself is never formed.
struct CsFactors {
  Vector sigma;      ///< cosines, descending
  Vector s;          ///< sines, sqrt(1 - sigma^2)
  Matrix z1;         ///< m×m
  Matrix v1;         ///< m×m
  Matrix coupling;   ///< m×(n-m); row i has norm s[i]
  /// n >= 2m, the shape for which the textbook block form applies. The
  /// coupling formulation is valid either way.
  bool block_shape_ok = true;

  const Vector& c() const { return sigma; }
};

struct ProjectionPair {
  Vector f;
  Vector f_hat;    ///< orthogonal projection
  Vector f_tilde;  ///< masked projection
  double err_orth_sq = 0.0;
  double gap_sq = 0.0;
  double err_masked_sq = 0.0;
};

/// Masked projector U1 (PᵀU1)⁻¹ Pᵀ with the pivoted LU of PᵀU1 cached.
/// Construction throws NumericalError if σ_min(PᵀU1) <= 1e-12.
class MaskedProjector {
 public:
  MaskedProjector(const PodBasis& basis, const SelectionOperator& p);

  /// Applies the projector to every column of f.
  Matrix apply(const Matrix& f) const;
  Vector apply(const Vector& f) const;

  const Vector& sigma() const { return sigma_; }
  double sigma_min() const { return sigma_(sigma_.size() - 1); }

 private:
  Matrix u1_;
  SelectionOperator p_;
  Eigen::PartialPivLU<Matrix> lu_;
  Vector sigma_;
};

Vector orthogonal_project(const PodBasis& basis, const Vector& f);

Vector masked_project(const PodBasis& basis, const SelectionOperator& p,
                      const Vector& f);

ProjectionPair projection_pair(const PodBasis& basis,
                               const SelectionOperator& p, const Vector& f);

CsFactors cs_factors(const PodBasis& basis, const SelectionOperator& p);

/// Closed form of the squared masked/orthogonal gap,
/// ‖C⁻¹ · coupling · U2ᵀf‖² = Σ (1-σ_i²)/σ_i² · y_i².
double gap_identity_rhs(const CsFactors& cs, const PodBasis& basis,
                        const Vector& f);

}  // namespace mproj
