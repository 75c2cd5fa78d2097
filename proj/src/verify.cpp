#include "mproj/verify.hpp"

#include "mproj/bounds.hpp"
#include "mproj/instances.hpp"
#include "mproj/projection.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace mproj {

namespace {

/// Accumulates scaled violations: ratio = |deviation| / tolerance.
class Tracker {
 public:
  explicit Tracker(std::string name) { result_.name = std::move(name); }

  void record(double deviation, double tolerance) {
    ++result_.cases;
    const double ratio = std::abs(deviation) / tolerance;
    if (!(ratio <= 1.0)) result_.passed = false;
    if (!(ratio <= result_.worst)) result_.worst = ratio;
  }

  /// Inequality lhs <= rhs with relative slack.
  void record_leq(double lhs, double rhs, double rel) {
    const double tol = rel * std::max(std::abs(rhs), 1e-300) + 1e-300;
    record(std::max(0.0, lhs - rhs), tol);
  }

  CheckResult result() const { return result_; }

 private:
  CheckResult result_;
};

}  // namespace

std::vector<CheckResult> run_property_suite(const VerifyOptions& options) {
  Rng rng(options.seed);
  const InstanceFamily family;

  Tracker pythagoras("pythagorean split");
  Tracker gap_identity("gap identity");
  Tracker interpolation("interpolation property");
  Tracker exactness("exactness on span(U1)");
  Tracker idempotence("masked projector idempotence");
  Tracker sigma_le_one("cosines bounded by one");
  Tracker valid_cs("avg error <= cs bound");
  Tracker valid_spectral("avg error <= spectral bound");
  Tracker valid_qdeim("avg error <= qdeim bound");
  Tracker gap_valid("avg gap <= spectral gap bound");
  Tracker dominance("spectral bound <= qdeim bound");
  Tracker scaling("scale equivariance");
  Tracker completion("invariance to U2 completion");
  Tracker attained("spectral gap bound attained");
  std::size_t tighter = 0;
  std::size_t compared = 0;
  std::size_t outside_premise = 0;
  std::size_t outside_exceeds = 0;

  for (int k = 0; k < options.instances; ++k) {
    const MaskKind kind = k % 2 == 0 ? MaskKind::Deim : MaskKind::Random;
    const RandomInstance inst = random_instance(rng, family, kind);
    const PodBasis& basis = inst.basis;
    const SelectionOperator& p = inst.mask;
    const Matrix& f = inst.samples.data;
    const CsFactors cs = cs_factors(basis, p);

    for (Index i = 0; i < cs.sigma.size(); ++i) {
      sigma_le_one.record(std::max(0.0, cs.sigma(i) - 1.0), 1e-12);
    }

    for (Index j = 0; j < f.cols(); ++j) {
      const Vector fj = f.col(j);
      const ProjectionPair pp = projection_pair(basis, p, fj);
      pythagoras.record(pp.err_masked_sq - pp.err_orth_sq - pp.gap_sq,
                        1e-8 * std::max(1.0, pp.err_masked_sq));
      gap_identity.record(gap_identity_rhs(cs, basis, fj) - pp.gap_sq,
                          1e-8 * std::max(1.0, pp.gap_sq));
      interpolation.record(
          (select_rows(p, pp.f_tilde) - select_rows(p, fj)).norm(),
          1e-8 * std::max(1.0, fj.norm()));
      const Vector twice = masked_project(basis, p, pp.f_tilde);
      idempotence.record((twice - pp.f_tilde).norm(),
                         1e-8 * std::max(1.0, fj.norm()));
      const Vector in_span = pp.f_hat;
      exactness.record((masked_project(basis, p, in_span) - in_span).norm(),
                       1e-8 * std::max(1.0, in_span.norm()));
    }

    const Evaluation ev = evaluate_all(basis, p, inst.samples);
    const BoundReport& r = ev.report;
    valid_cs.record_leq(r.avg_err, r.b_thm1, 1e-10);
    valid_spectral.record_leq(r.avg_err, r.b_thm2, 1e-10);
    gap_valid.record_leq(ev.errors.avg_gap,
                         spectral_gap_bound(ev.spectrum, r.n_samples), 1e-10);
    // The qdeim bound assumes |(P^T U1)^{-1}|^2 <= 1 + m(n-m).
    const double md = double(basis.m);
    const double dim_factor = 1.0 + md * (double(basis.n()) - md);
    if (1.0 / (r.sigma_min * r.sigma_min) <= dim_factor * (1.0 + 1e-10)) {
      valid_qdeim.record_leq(r.avg_err, r.b_qdeim, 1e-10);
      dominance.record_leq(r.b_thm2, r.b_qdeim, 1e-10);
    } else {
      ++outside_premise;
      if (r.b_thm2 > r.b_qdeim) ++outside_exceeds;
    }
    ++compared;
    if (r.b_thm2 <= r.b_thm1) ++tighter;

    const double t = 0.37 + 3.0 * (k % 5);
    const SnapshotMatrix scaled = snapshots_from_matrix(t * f, "scaled");
    const BoundReport rs = evaluate_all(basis, p, scaled).report;
    const double t2 = t * t;
    for (auto [a, b] : {std::pair{rs.avg_err, r.avg_err}, {rs.b_thm1, r.b_thm1},
                        {rs.b_thm2, r.b_thm2}, {rs.b_qdeim, r.b_qdeim}}) {
      scaling.record(a - t2 * b, 1e-10 * std::max(t2 * b, 1e-300));
    }

    // Rotating U2 is another valid completion of U1.
    PodBasis rotated = basis;
    rotated.u2 = basis.u2 * random_orthonormal(basis.u2.cols(), rng);
    const BoundReport rr = evaluate_all(rotated, p, inst.samples).report;
    for (auto [a, b] : {std::pair{rr.avg_err, r.avg_err}, {rr.b_thm1, r.b_thm1},
                        {rr.b_thm2, r.b_thm2}, {rr.b_qdeim, r.b_qdeim}}) {
      completion.record(a - b, 1e-8 * std::max(1.0, std::abs(b)));
    }

    if (basis.n() >= 2 * basis.m && cs.s.minCoeff() > 1e-6) {
      const Index m = basis.m;
      Vector lambdas(m);
      std::uniform_real_distribution<double> u(0.1, 10.0);
      for (Index i = 0; i < m; ++i) lambdas(i) = u(rng);
      std::sort(lambdas.data(), lambdas.data() + m, std::greater<>());
      const SnapshotMatrix s = gap_attaining_samples(basis, p, lambdas, rng);
      const Evaluation ea = evaluate_all(basis, p, s);
      const double bound = spectral_gap_bound(ea.spectrum, s.cols());
      attained.record(ea.errors.avg_gap - bound,
                      1e-8 * std::max(1.0, std::abs(bound)));
    }
  }

  std::vector<CheckResult> out;
  for (const Tracker* t :
       {&pythagoras, &gap_identity, &interpolation, &exactness, &idempotence,
        &sigma_le_one, &valid_cs, &valid_spectral, &valid_qdeim, &gap_valid,
        &dominance, &scaling, &completion, &attained}) {
    out.push_back(t->result());
  }
  CheckResult stat;
  stat.name = "spectral bound <= cs bound (statistic)";
  stat.informational = true;
  stat.cases = compared;
  stat.worst = compared ? double(tighter) / double(compared) : 0.0;
  std::ostringstream os;
  os << tighter << "/" << compared << " instances";
  stat.detail = os.str();
  out.push_back(stat);

  CheckResult premise;
  premise.name = "masks outside qdeim premise (statistic)";
  premise.informational = true;
  premise.cases = outside_premise;
  premise.worst = double(outside_exceeds);
  std::ostringstream ps;
  ps << outside_premise << "/" << compared << " instances have sigma_min^-2 > 1+m(n-m); "
     << outside_exceeds << " of them have spectral bound > qdeim bound";
  premise.detail = ps.str();
  out.push_back(premise);
  return out;
}

}  // namespace mproj
