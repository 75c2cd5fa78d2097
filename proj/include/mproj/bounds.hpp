#pragma once

// Averaged error bounds for masked projections.
//
// Three bounds on the mean squared masked-projection error
// E = (1/N) Σ ‖f_i - f̃_i‖² are provided:
//
//   cs bound        (1/N) (1 + Σ_j (1-σ_j²)/σ_j²) Σ_i ‖(I - U1U1ᵀ) f_i‖²
//   spectral bound  (1/N) Σ_i ‖(I - U1U1ᵀ) f_i‖²
//                     + (1/N) Σ_{i=1..m} (σ_{m-i+1}⁻² - 1) λ_i(XXᵀ),
//                   X = U2ᵀ [f_1 ... f_N]
//   qdeim bound     (1/N) (1 + m(n-m)) Σ_i ‖(I - U1U1ᵀ) f_i‖²
//
// where σ are the singular values of PᵀU1. The first two hold for any
// mask with PᵀU1 invertible.

#include "mproj/numerics.hpp"
#include "mproj/pod.hpp"
#include "mproj/projection.hpp"
#include "mproj/selection.hpp"
#include "mproj/snapshot.hpp"

namespace mproj {

struct ErrorSummary {
  Index n_samples = 0;
  double avg_err_masked = 0.0;  ///< (1/N) Σ ‖f_i - f̃_i‖²
  double avg_err_orth = 0.0;    ///< (1/N) Σ ‖(I - U1U1ᵀ) f_i‖²
  double avg_gap = 0.0;         ///< (1/N) Σ ‖f̃_i - f̂_i‖²
};

struct SpectralData {
  /// Eigenvalues of XXᵀ, descending, length n - m (zero padded when the
  /// Gram matrix of the smaller side was used).
  Vector x_gram_eigs;
  Vector sigma;  ///< singular values of PᵀU1, descending
};

/// One table row. Columns b_thm1 / b_thm2 / b_qdeim hold the cs, spectral
/// and qdeim bounds respectively.
struct BoundReport {
  int m = 0;
  double avg_err = 0.0;
  double b_thm1 = 0.0;
  double b_thm2 = 0.0;
  double b_qdeim = 0.0;
  double sigma_min = 0.0;
  Index n = 0;
  Index n_samples = 0;
  double runtime_ms = 0.0;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

struct Evaluation {
  BoundReport report;
  ErrorSummary errors;
  SpectralData spectrum;
};

/// 1 + Σ (1-σ_i²)/σ_i². Rejects σ_i <= 0 or σ_i > 1 + 1e-12.
double cs_multiplier(const Vector& sigma);

/// Per-sample cs bound: multiplier × ‖(I - U1U1ᵀ) f‖².
double cs_bound_single(const Vector& sigma, const PodBasis& basis,
                       const Vector& f);

double cs_bound_avg(const Vector& sigma, const PodBasis& basis,
                    const SnapshotMatrix& samples);

/// Eigenvalues of XXᵀ with X = U2ᵀ F; the smaller Gram side is factored.
SpectralData spectral_data(const PodBasis& basis, const Vector& sigma,
                           const SnapshotMatrix& samples);

/// (1/N) Σ_{i=1..m} (σ_{m-i+1}⁻² - 1) λ_i: the smallest σ pairs with the
/// largest eigenvalue. Bounds the mean squared gap ‖f̃ - f̂‖².
double spectral_gap_bound(const SpectralData& spectrum, Index n_samples);

double spectral_bound_avg(const SpectralData& spectrum, const PodBasis& basis,
                          const SnapshotMatrix& samples);

double qdeim_bound_avg(const PodBasis& basis, const SnapshotMatrix& samples,
                       int m);

/// m((n-m+1) - σ_m⁻²) ‖(I - U1U1ᵀ) f‖². Positive when the cs bound with
/// every σ_i replaced by σ_m still beats the qdeim bound on f.
double qdeim_slack_alpha(const Vector& sigma, const PodBasis& basis,
                         const Vector& f, Index n, int m);

/// Per-sample ‖(I - U1U1ᵀ) f_i‖².
Vector orth_errors_sq(const PodBasis& basis, const Matrix& samples);

ErrorSummary error_summary(const PodBasis& basis, const SelectionOperator& p,
                           const SnapshotMatrix& samples);

/// One pass over the test samples computing the error and all three bounds.
Evaluation evaluate_all(const PodBasis& basis, const SelectionOperator& p,
                        const SnapshotMatrix& test);

}  // namespace mproj
