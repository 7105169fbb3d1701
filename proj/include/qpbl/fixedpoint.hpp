#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qpbl/catalog.hpp"
#include "qpbl/scalar_function.hpp"
#include "qpbl/sequences.hpp"
#include "qpbl/space.hpp"

namespace qpbl {

/// One named hypothesis verification inside a solver run.
struct CheckResult {
  std::string name;
  bool passed = false;
  bool sampled = false;  // grid/sample evidence rather than exhaustive or exact
  std::string detail;
};

/// Machine-checkable outcome of a fixed-point run. Solvers refuse to run
/// (HypothesisFailed) unless every hypothesis check passes, so a
/// certificate always carries an all-green hypothesis_report.
///
/// iterations counts accepted displacement steps; a starting point that is
/// already fixed certifies with 0 iterations. map_evaluations counts
/// forward (or inverse, for expansive runs) applications in the main run.
struct FixedPointCertificate {
  Point point;
  double residual_forward = 0.0;   // dist(z, Tz)
  double residual_backward = 0.0;  // dist(Tz, z)
  double self_distance = 0.0;      // dist(z, z)
  int iterations = 0;
  int map_evaluations = 0;
  std::vector<CheckResult> hypothesis_report;
  bool unique_among_restarts = true;
  std::vector<Point> restart_points;
};

struct SolveOptions {
  /// Stop when dist(x_k, x_{k+1}) + dist(x_{k+1}, x_k) <= tol (the
  /// symmetrized displacement mirrors the two-sided 0-Cauchy limits).
  double tol = 1e-10;
  int max_iter = 100000;
  SamplePlan plan{};  // hypothesis sampling and restart seeding
  int restarts = 5;
};

/// Orbit x0, Tx0, T^2 x0, ..., T^n x0 as a memoized sequence (n+1 points;
/// generator index i yields T^(i-1) x0). DomainEscape when an iterate
/// leaves the mapping's domain.
SequenceSpec orbit(const Mapping& map, const Point& x0, int n);

/// Picard solver under dist(Tx, Ty) <= phi(dist(x, y)) with phi continuous,
/// vanishing exactly at zero, phi(t) < t, and sum s^n phi^n(t) convergent.
/// Hypothesis checks (in report order): "contraction-inequality" over the
/// evaluated pair set, "phi-below-identity" on a positive grid, and
/// "series-convergence" (200 terms; the last 50 consecutive term ratios
/// s phi^(n+1)(t) / phi^n(t) must stay below 1 - 1e-6).
FixedPointCertificate phi_contraction_solve(const Space& space, const Mapping& map,
                                            const ScalarFunction& phi, const Point& x0,
                                            const SolveOptions& opts = {});

/// The linear special case dist(Tx, Ty) <= lambda dist(x, y) with
/// 0 <= lambda < 1/s, run as phi(t) = lambda t.
FixedPointCertificate lambda_contraction_solve(const Space& space, const Mapping& map,
                                               double lambda, const Point& x0,
                                               const SolveOptions& opts = {});

/// Orbit displacement series sum dist(T^k x0, T^(k+1) x0) together with the
/// weight function it witnesses: phi(x) = sum_k dist(T^k x, T^(k+1) x)
/// (truncated at n_terms). The defining inequality
/// dist(x, Tx) <= phi(x) - phi(Tx) telescopes exactly, so it is verified
/// along the orbit up to the truncation tail plus accumulated float error.
struct WeightWitnessReport {
  double series_value = 0.0;  // partial sum at x0
  double phi_at_x0 = 0.0;
  std::function<double(const Point&)> phi_witness;
  bool inequality_verified = false;
  double max_telescope_error = 0.0;
  double observed_ratio = 0.0;  // largest consecutive term ratio in the tail
};

WeightWitnessReport weight_witness(const Space& space, const Mapping& map, const Point& x0,
                                   int n_terms);

/// One row of the (phi, psi) contraction inequality
///   phi(dist(Tx, Ty)) <= phi(dist(x, y)) / s - psi(dist(x, y))
/// on a finite space; exact rationals whenever the table, the coefficient,
/// and both comparison functions permit.
struct PhiPsiRow {
  Point x;
  Point y;
  double lhs = 0.0;
  double rhs = 0.0;
  std::optional<Rational> lhs_exact;
  std::optional<Rational> rhs_exact;
  bool holds = false;
};

std::vector<PhiPsiRow> phi_psi_inequality_table(const Space& space, const Mapping& map,
                                                const ScalarFunction& phi,
                                                const ScalarFunction& psi);

/// Picard solver under the (phi, psi) inequality above; phi must be linear,
/// both functions continuous, monotone nondecreasing, and zero exactly at
/// zero, with phi(psi(t)) <= psi(t) for positive t.
FixedPointCertificate phi_psi_solve(const Space& space, const Mapping& map,
                                    const ScalarFunction& phi, const ScalarFunction& psi,
                                    const Point& x0, const SolveOptions& opts = {});

/// Coefficients of the expansive inequality
///   dist(Tx,Ty) >= a1[d(x,y)+d(y,x)] + a2[d(x,Tx)+d(Tx,x)]
///                + a3[d(y,Ty)+d(Ty,y)] + a4[d(x,Ty)+d(Ty,x)],
/// all positive, constrained by 1 + a4 - a3 > 0,
/// s(a1+a2) + 2s^2(a3-a4) + a4 > 2s^2 and a1 + a4 >= 1. The solver also
/// recomputes lambda = (1 + a4 - a3) / (a1 + a2 + a4/s) and rejects
/// parameter sets whose lambda leaves (0, 1/(2s)) rather than relying on
/// the inequalities alone.
struct ExpansiveParams {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double a4 = 0.0;
};

/// Reverse Picard iteration x_{k+1} = T^{-1} x_k for surjective expansive
/// maps; requires an inverse evaluator.
FixedPointCertificate expansive_solve(const Space& space, const Mapping& map,
                                      const ExpansiveParams& params, const Point& x0,
                                      const SolveOptions& opts = {});

/// The K-form dist(Tx,Ty) >= K [dist(x,y) + dist(y,x)] with K > 2s,
/// checked directly rather than through degenerate a-parameters.
FixedPointCertificate expansive_solve_k(const Space& space, const Mapping& map, double K,
                                        const Point& x0, const SolveOptions& opts = {});

/// Chained relaxed-triangle bounds along a sequence (0-based positions):
///   dist(x_n, x_m) <= sum_{k=n}^{m-1} s^k dist(x_k, x_{k+1})
///   dist(x_m, x_n) <= sum_{k=n}^{m-1} s^k dist(x_{k+1}, x_k)
struct ChainBoundReport {
  double bound_forward = 0.0;
  double bound_backward = 0.0;
  double actual_forward = 0.0;
  double actual_backward = 0.0;
  bool holds = false;
};

ChainBoundReport chain_bound(const Space& space, const SequenceSpec& seq, int n, int m,
                             double tol = 1e-9);

/// Geometric-decay bound: when consecutive displacements contract by
/// lambda in the symmetrized sense (0 < lambda < 1/(2s)), positions n < m
/// satisfy dist(y_n, y_m) <= (2 s lambda)^n / (1 - 2 s lambda) times the
/// symmetrized first displacement over two.
struct DecayBoundReport {
  bool premise_holds = false;
  double bound = 0.0;
  double actual = 0.0;
  double actual_backward = 0.0;
  bool holds = false;
  std::optional<int> premise_violation_index;
};

DecayBoundReport decay_bound(const Space& space, const SequenceSpec& seq, double lambda,
                             int n, int m, double tol = 1e-9);

}  // namespace qpbl
