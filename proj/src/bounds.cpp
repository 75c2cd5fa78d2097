#include "mproj/bounds.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace mproj {

namespace {

double mean(const Vector& v) {
  return pairwise_sum(std::span<const double>(v.data(), std::size_t(v.size()))) /
         static_cast<double>(v.size());
}

void check_samples(const PodBasis& basis, const SnapshotMatrix& samples) {
  if (samples.cols() < 1) throw std::invalid_argument("no samples");
  if (samples.rows() != basis.n()) {
    throw DimensionError("samples have " + std::to_string(samples.rows()) +
                         " rows, basis dimension is " +
                         std::to_string(basis.n()));
  }
}

void check_sigma(const Vector& sigma) {
  if (sigma.size() < 1) throw std::invalid_argument("empty sigma");
  for (Index i = 0; i < sigma.size(); ++i) {
    if (!(sigma(i) > 0.0) || sigma(i) > 1.0 + 1e-12) {
      std::ostringstream os;
      os << "singular value sigma[" << i << "] = " << sigma(i)
         << " outside (0, 1]";
      throw std::invalid_argument(os.str());
    }
  }
}

Vector column_sq_norms(const Matrix& a) {
  return a.colwise().squaredNorm().transpose();
}

}  // namespace

double cs_multiplier(const Vector& sigma) {
  check_sigma(sigma);
  double acc = 1.0;
  for (Index i = 0; i < sigma.size(); ++i) {
    const double s2 = sigma(i) * sigma(i);
    acc += (1.0 - s2) / s2;
  }
  return acc;
}

Vector orth_errors_sq(const PodBasis& basis, const Matrix& samples) {
  if (samples.rows() != basis.n()) {
    throw DimensionError("orth_errors_sq: sample length mismatch");
  }
  return column_sq_norms(samples - basis.u1 * (basis.u1.transpose() * samples));
}

double cs_bound_single(const Vector& sigma, const PodBasis& basis,
                       const Vector& f) {
  const double mult = cs_multiplier(sigma);
  return mult * orth_errors_sq(basis, f)(0);
}

double cs_bound_avg(const Vector& sigma, const PodBasis& basis,
                    const SnapshotMatrix& samples) {
  check_samples(basis, samples);
  const double mult = cs_multiplier(sigma);
  return mult * mean(orth_errors_sq(basis, samples.data));
}

SpectralData spectral_data(const PodBasis& basis, const Vector& sigma,
                           const SnapshotMatrix& samples) {
  check_samples(basis, samples);
  const Matrix x = basis.u2.transpose() * samples.data;
  const Index k = x.rows();
  const Matrix gram = x.cols() < k ? Matrix(x.transpose() * x)
                                   : Matrix(x * x.transpose());
  const Vector eigs = sym_eig_desc(gram).values;
  SpectralData out;
  out.x_gram_eigs = Vector::Zero(k);
  out.x_gram_eigs.head(std::min(k, eigs.size())) = eigs.head(std::min(k, eigs.size()));
  out.sigma = sigma;
  return out;
}

double spectral_gap_bound(const SpectralData& spectrum, Index n_samples) {
  const Vector& sigma = spectrum.sigma;
  if (sigma.size() < 1) throw std::invalid_argument("empty sigma");
  for (Index i = 0; i < sigma.size(); ++i) {
    if (!(sigma(i) > 0.0)) {
      throw std::invalid_argument("spectral_gap_bound: zero singular value");
    }
  }
  if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
  const Index m = sigma.size();
  const Index avail = std::min(m, spectrum.x_gram_eigs.size());
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(avail));
  for (Index i = 0; i < avail; ++i) {
    const double s = sigma(m - 1 - i);
    const double lambda = std::max(0.0, spectrum.x_gram_eigs(i));
    terms.push_back((1.0 / (s * s) - 1.0) * lambda);
  }
  return pairwise_sum(terms) / static_cast<double>(n_samples);
}

double spectral_bound_avg(const SpectralData& spectrum, const PodBasis& basis,
                          const SnapshotMatrix& samples) {
  check_samples(basis, samples);
  return mean(orth_errors_sq(basis, samples.data)) +
         spectral_gap_bound(spectrum, samples.cols());
}

double qdeim_bound_avg(const PodBasis& basis, const SnapshotMatrix& samples,
                       int m) {
  check_samples(basis, samples);
  if (m != basis.u1.cols() || m >= basis.n()) {
    throw DimensionError("qdeim_bound_avg: m does not match basis");
  }
  const double n = static_cast<double>(basis.n());
  return (1.0 + m * (n - m)) * mean(orth_errors_sq(basis, samples.data));
}

double qdeim_slack_alpha(const Vector& sigma, const PodBasis& basis,
                         const Vector& f, Index n, int m) {
  if (sigma.size() < 1 || !(sigma(sigma.size() - 1) > 0.0)) {
    throw std::invalid_argument("qdeim_slack_alpha: need sigma_m > 0");
  }
  const double smin = sigma(sigma.size() - 1);
  const double err = orth_errors_sq(basis, f)(0);
  return m * ((static_cast<double>(n) - m + 1.0) - 1.0 / (smin * smin)) * err;
}

ErrorSummary error_summary(const PodBasis& basis, const SelectionOperator& p,
                           const SnapshotMatrix& samples) {
  check_samples(basis, samples);
  const MaskedProjector proj(basis, p);
  const Matrix& f = samples.data;
  const Matrix f_hat = basis.u1 * (basis.u1.transpose() * f);
  const Matrix f_tilde = proj.apply(f);
  ErrorSummary out;
  out.n_samples = f.cols();
  out.avg_err_masked = mean(column_sq_norms(f - f_tilde));
  out.avg_err_orth = mean(column_sq_norms(f - f_hat));
  out.avg_gap = mean(column_sq_norms(f_tilde - f_hat));
  return out;
}

Evaluation evaluate_all(const PodBasis& basis, const SelectionOperator& p,
                        const SnapshotMatrix& test) {
  const auto start = std::chrono::steady_clock::now();
  check_samples(basis, test);
  const Vector sigma = mask_condition(p, basis.u1);

  Evaluation ev;
  ev.errors = error_summary(basis, p, test);
  ev.spectrum = spectral_data(basis, sigma, test);

  BoundReport& r = ev.report;
  r.m = basis.m;
  r.n = basis.n();
  r.n_samples = test.cols();
  r.sigma_min = sigma(sigma.size() - 1);
  r.avg_err = ev.errors.avg_err_masked;
  const double orth = ev.errors.avg_err_orth;
  r.b_thm1 = cs_multiplier(sigma) * orth;
  r.b_thm2 = orth + spectral_gap_bound(ev.spectrum, test.cols());
  r.b_qdeim = (1.0 + r.m * static_cast<double>(r.n - r.m)) * orth;
  r.runtime_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return ev;
}

}  // namespace mproj
