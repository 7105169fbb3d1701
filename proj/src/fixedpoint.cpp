#include "qpbl/fixedpoint.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <sstream>

namespace qpbl {

namespace {

constexpr int kSeriesTerms = 200;
constexpr int kSeriesTailWindow = 50;
constexpr double kRatioMargin = 1e-6;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// --- shared iteration machinery -------------------------------------------

struct LoopResult {
  Point z;
  int iterations = 0;
  int applications = 0;
};

LoopResult displacement_loop(const Space& space, const std::function<Point(const Point&)>& step,
                             const Point& x0, double tol, int max_iter) {
  if (!space.contains(x0))
    throw PointOutsideDomain("starting point outside the space: " + x0.to_string());
  Point x = x0;
  for (int k = 0; k <= max_iter; ++k) {
    const Point tx = step(x);
    const double disp = space.eval(x, tx) + space.eval(tx, x);
    if (disp <= tol) return {tx, k, k + 1};
    x = tx;
  }
  throw MaxIterExceeded("no fixed displacement within " + std::to_string(max_iter) +
                        " iterations");
}

std::vector<Point> seeded_restarts(const Domain& domain, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(count));
  if (const auto* fd = std::get_if<FiniteDomain>(&domain)) {
    for (int i = 0; i < count; ++i)
      out.push_back(Point::label(fd->labels[rng() % fd->labels.size()]));
  } else {
    const auto& iv = std::get<IntervalDomain>(domain);
    for (int i = 0; i < count; ++i) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      out.push_back(Point::real(iv.lower + (iv.effective_upper() - iv.lower) * u));
    }
  }
  return out;
}

FixedPointCertificate certify(const Space& space, const Mapping& map,
                              const std::function<Point(const Point&)>& step,
                              const Point& x0, const SolveOptions& opts,
                              std::vector<CheckResult> checks) {
  const LoopResult main = displacement_loop(space, step, x0, opts.tol, opts.max_iter);

  FixedPointCertificate cert;
  cert.point = main.z;
  cert.iterations = main.iterations;
  cert.map_evaluations = main.applications;
  const Point tz = map.apply(main.z);
  cert.residual_forward = space.eval(main.z, tz);
  cert.residual_backward = space.eval(tz, main.z);
  cert.self_distance = space.eval(main.z, main.z);
  cert.hypothesis_report = std::move(checks);

  std::vector<Point> certified{main.z};
  for (const Point& r : seeded_restarts(map.domain, opts.plan.seed, opts.restarts))
    certified.push_back(displacement_loop(space, step, r, opts.tol, opts.max_iter).z);
  cert.restart_points.assign(certified.begin() + 1, certified.end());
  for (std::size_t i = 0; i < certified.size() && cert.unique_among_restarts; ++i)
    for (std::size_t j = i + 1; j < certified.size(); ++j) {
      const double gap = std::max(space.eval(certified[i], certified[j]),
                                  space.eval(certified[j], certified[i]));
      if (gap > 10.0 * opts.tol) {
        cert.unique_among_restarts = false;
        break;
      }
    }
  return cert;
}

// --- hypothesis sweeps ------------------------------------------------------

std::vector<Point> pair_sample_points(const Space& space, const SamplePlan& plan) {
  std::vector<Point> pts;
  if (space.is_finite()) {
    for (const auto& l : space.finite().labels) pts.push_back(Point::label(l));
  } else {
    for (double v : plan.interval_samples(space.interval_domain()))
      pts.push_back(Point::real(v));
  }
  return pts;
}

void require(std::vector<CheckResult>& checks, CheckResult check) {
  const bool ok = check.passed;
  const std::string name = check.name;
  const std::string detail = check.detail;
  checks.push_back(std::move(check));
  if (!ok) throw HypothesisFailed(name, name + ": " + detail);
}

double max_pair_distance(const Space& space, const std::vector<Point>& pts) {
  double m = 1.0;
  for (const Point& a : pts)
    for (const Point& b : pts) m = std::max(m, space.eval(a, b));
  return m;
}

CheckResult contraction_check(const Space& space, const Mapping& map,
                              const ScalarFunction& phi, const std::vector<Point>& pts,
                              double tol) {
  CheckResult c{"contraction-inequality", true, !space.is_finite(), ""};
  std::vector<Point> images;
  images.reserve(pts.size());
  for (const Point& p : pts) images.push_back(map.apply(p));
  for (std::size_t i = 0; i < pts.size() && c.passed; ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const double lhs = space.eval(images[i], images[j]);
      const double rhs = phi(space.eval(pts[i], pts[j]));
      if (lhs > rhs + tol) {
        c.passed = false;
        c.detail = "dist(Tx,Ty) = " + fmt(lhs) + " > phi(dist(x,y)) = " + fmt(rhs) +
                   " at (" + pts[i].to_string() + ", " + pts[j].to_string() + ")";
        break;
      }
    }
  return c;
}

CheckResult phi_below_identity_check(const ScalarFunction& phi, double t_max) {
  CheckResult c{"phi-below-identity", true, true, ""};
  for (int i = 1; i <= 1000; ++i) {
    const double t = t_max * static_cast<double>(i) / 1000.0;
    if (!(phi(t) < t)) {
      c.passed = false;
      c.detail = "phi(t) = " + fmt(phi(t)) + " >= t at t = " + fmt(t);
      break;
    }
  }
  return c;
}

CheckResult series_convergence_check(const ScalarFunction& phi, double s,
                                     const std::vector<double>& t_values) {
  CheckResult c{"series-convergence", true, true, ""};
  for (double t : t_values) {
    if (!(t > 0)) continue;
    double phi_n = t;
    double prev_term = 0.0;
    bool have_prev = false;
    for (int n = 1; n <= kSeriesTerms && c.passed; ++n) {
      phi_n = phi(phi_n);  // phi^n(t)
      const double term = std::pow(s, n) * phi_n;
      if (term == 0.0) break;  // series terminates
      if (!std::isfinite(term)) {
        c.passed = false;
        c.detail = "series term overflows at n = " + std::to_string(n);
        break;
      }
      if (have_prev && n > kSeriesTerms - kSeriesTailWindow) {
        const double ratio = term / prev_term;
        if (!(ratio <= 1.0 - kRatioMargin)) {
          c.passed = false;
          c.detail = "tail ratio " + fmt(ratio) + " at n = " + std::to_string(n) +
                     " for t = " + fmt(t);
        }
      }
      prev_term = term;
      have_prev = true;
    }
    if (!c.passed) break;
  }
  return c;
}

CheckResult declared_property_check(const std::string& name, bool declared,
                                    const std::string& what) {
  CheckResult c{name, declared, true, ""};
  if (!declared) c.detail = what;
  return c;
}

}  // namespace

SequenceSpec orbit(const Mapping& map, const Point& x0, int n) {
  if (n < 1) throw BadParams("orbit length n must be >= 1");
  auto pts = std::make_shared<std::vector<Point>>();
  pts->reserve(static_cast<std::size_t>(n) + 1);
  pts->push_back(x0);
  if (!domain_contains(map.domain, x0))
    throw PointOutsideDomain("orbit start outside the mapping's domain");
  for (int k = 0; k < n; ++k) pts->push_back(map.apply(pts->back()));

  SequenceSpec seq;
  seq.generator = [pts](int i) { return (*pts)[static_cast<std::size_t>(i - 1)]; };
  seq.horizon = n + 1;
  seq.name = "orbit:" + map.name + ":" + x0.to_string();
  return seq;
}

FixedPointCertificate phi_contraction_solve(const Space& space, const Mapping& map,
                                            const ScalarFunction& phi, const Point& x0,
                                            const SolveOptions& opts) {
  opts.plan.validate();
  std::vector<CheckResult> checks;

  const std::vector<Point> pts = pair_sample_points(space, opts.plan);
  require(checks, contraction_check(space, map, phi, pts, opts.plan.tolerance));
  require(checks, phi_below_identity_check(phi, max_pair_distance(space, pts)));

  const Point tx0 = map.apply(x0);
  require(checks, series_convergence_check(phi, space.coefficient(),
                                           {space.eval(x0, tx0), 1.0}));

  return certify(space, map, [&map](const Point& p) { return map.apply(p); }, x0, opts,
                 std::move(checks));
}

FixedPointCertificate lambda_contraction_solve(const Space& space, const Mapping& map,
                                               double lambda, const Point& x0,
                                               const SolveOptions& opts) {
  if (!(lambda >= 0.0 && lambda < 1.0 / space.coefficient()))
    throw HypothesisFailed("lambda-range", "lambda must satisfy 0 <= lambda < 1/s; got " +
                                                fmt(lambda) + " with s = " +
                                                fmt(space.coefficient()));
  return phi_contraction_solve(space, map, linear_scalar(lambda), x0, opts);
}

WeightWitnessReport weight_witness(const Space& space, const Mapping& map, const Point& x0,
                                   int n_terms) {
  if (n_terms < 10) throw BadParams("n_terms must be >= 10");

  // phi(p) = truncated displacement series along the orbit of p.
  const Space sp = space;
  const Mapping mp = map;
  const auto orbit_terms = [sp, mp, n_terms](const Point& p) {
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(n_terms));
    Point cur = p;
    for (int k = 0; k < n_terms; ++k) {
      const Point nxt = mp.apply(cur);
      terms.push_back(sp.eval(cur, nxt));
      cur = nxt;
    }
    return terms;
  };

  WeightWitnessReport rep;
  const std::vector<double> terms = orbit_terms(x0);
  double sum = 0.0;
  for (double t : terms) sum += t;
  rep.series_value = sum;
  rep.phi_at_x0 = sum;

  const std::size_t tail_start =
      terms.size() > kSeriesTailWindow ? terms.size() - kSeriesTailWindow : 0;
  for (std::size_t k = tail_start; k + 1 < terms.size(); ++k) {
    if (terms[k] <= 0.0) continue;
    const double ratio = terms[k + 1] / terms[k];
    rep.observed_ratio = std::max(rep.observed_ratio, ratio);
    if (!(ratio <= 1.0 - kRatioMargin))
      throw SeriesDiverging("displacement ratio " + fmt(ratio) + " at term " +
                            std::to_string(k) + " fails the ratio test");
  }

  rep.phi_witness = [orbit_terms](const Point& p) {
    double s = 0.0;
    for (double t : orbit_terms(p)) s += t;
    return s;
  };

  // dist(x, Tx) <= phi(x) - phi(Tx) telescopes to equality up to the
  // truncation tail d_{j + n_terms}; verify along the first orbit points.
  rep.inequality_verified = true;
  Point xj = x0;
  double phi_j = rep.phi_witness(xj);
  const int verify_points = std::min(40, n_terms - 1);
  for (int j = 0; j < verify_points; ++j) {
    const Point xj1 = map.apply(xj);
    const double phi_j1 = rep.phi_witness(xj1);
    const double lhs = space.eval(xj, xj1);
    const std::vector<double> tail = orbit_terms(xj1);  // tail.back() ~ d_{j+n_terms}
    const double slack = tail.back() + 1e-9 * static_cast<double>(n_terms);
    const double err = std::abs(lhs - (phi_j - phi_j1));
    rep.max_telescope_error = std::max(rep.max_telescope_error, err - tail.back());
    if (lhs > phi_j - phi_j1 + slack) {
      rep.inequality_verified = false;
      break;
    }
    xj = xj1;
    phi_j = phi_j1;
  }
  return rep;
}

std::vector<PhiPsiRow> phi_psi_inequality_table(const Space& space, const Mapping& map,
                                                const ScalarFunction& phi,
                                                const ScalarFunction& psi) {
  if (!space.is_finite())
    throw BadParams("the inequality table is defined for finite spaces");
  const std::size_t n = space.size();
  const bool exact = space.has_exact() && phi.has_exact() && psi.has_exact() &&
                     space.coefficient_exact().has_value();
  const double s = space.coefficient();

  std::vector<PhiPsiRow> rows;
  rows.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      PhiPsiRow row;
      row.x = space.point_at(i);
      row.y = space.point_at(j);
      const std::size_t ti = space.index_of(map.apply(row.x));
      const std::size_t tj = space.index_of(map.apply(row.y));
      if (exact) {
        const Rational lhs = phi.exact(space.exact_at(ti, tj));
        const Rational rhs = phi.exact(space.exact_at(i, j)) / *space.coefficient_exact() -
                             psi.exact(space.exact_at(i, j));
        row.lhs_exact = lhs;
        row.rhs_exact = rhs;
        row.lhs = lhs.to_double();
        row.rhs = rhs.to_double();
        row.holds = lhs <= rhs;
      } else {
        row.lhs = phi(space.at(ti, tj));
        row.rhs = phi(space.at(i, j)) / s - psi(space.at(i, j));
        row.holds = row.lhs <= row.rhs + 1e-12;
      }
      rows.push_back(std::move(row));
    }
  return rows;
}

FixedPointCertificate phi_psi_solve(const Space& space, const Mapping& map,
                                    const ScalarFunction& phi, const ScalarFunction& psi,
                                    const Point& x0, const SolveOptions& opts) {
  opts.plan.validate();
  std::vector<CheckResult> checks;

  require(checks, declared_property_check("phi-linear", phi.declared.linear,
                                          "phi must be linear"));
  require(checks,
          declared_property_check("phi-monotone", phi.declared.monotone_nondecreasing,
                                  "phi must be monotone nondecreasing"));
  require(checks,
          declared_property_check("psi-monotone", psi.declared.monotone_nondecreasing,
                                  "psi must be monotone nondecreasing"));
  require(checks, declared_property_check("phi-zero-iff-zero", phi.declared.zero_iff_zero,
                                          "phi must vanish exactly at zero"));
  require(checks, declared_property_check("psi-zero-iff-zero", psi.declared.zero_iff_zero,
                                          "psi must vanish exactly at zero"));

  const std::vector<Point> pts = pair_sample_points(space, opts.plan);
  const double t_max = max_pair_distance(space, pts);
  CheckResult compat{"phi-psi-compatibility", true, true, ""};
  for (int i = 1; i <= 1000; ++i) {
    const double t = t_max * static_cast<double>(i) / 1000.0;
    if (phi(psi(t)) > psi(t) + 1e-12) {
      compat.passed = false;
      compat.detail = "phi(psi(t)) > psi(t) at t = " + fmt(t);
      break;
    }
  }
  require(checks, std::move(compat));

  CheckResult contraction{"contraction-inequality", true, !space.is_finite(), ""};
  if (space.is_finite()) {
    for (const PhiPsiRow& row : phi_psi_inequality_table(space, map, phi, psi))
      if (!row.holds) {
        contraction.passed = false;
        contraction.detail = "fails at (" + row.x.to_string() + ", " + row.y.to_string() +
                             "): " + fmt(row.lhs) + " > " + fmt(row.rhs);
        break;
      }
  } else {
    const double s = space.coefficient();
    std::vector<Point> images;
    images.reserve(pts.size());
    for (const Point& p : pts) images.push_back(map.apply(p));
    for (std::size_t i = 0; i < pts.size() && contraction.passed; ++i)
      for (std::size_t j = 0; j < pts.size(); ++j) {
        const double d = space.eval(pts[i], pts[j]);
        const double lhs = phi(space.eval(images[i], images[j]));
        const double rhs = phi(d) / s - psi(d);
        if (lhs > rhs + opts.plan.tolerance) {
          contraction.passed = false;
          contraction.detail = "fails at (" + pts[i].to_string() + ", " +
                               pts[j].to_string() + ")";
          break;
        }
      }
  }
  require(checks, std::move(contraction));

  return certify(space, map, [&map](const Point& p) { return map.apply(p); }, x0, opts,
                 std::move(checks));
}

namespace {

FixedPointCertificate expansive_run(const Space& space, const Mapping& map,
                                    const std::function<double(double, double)>& rhs_of,
                                    const Point& x0, const SolveOptions& opts,
                                    std::vector<CheckResult> checks) {
  if (!map.has_inverse())
    throw NoInverse("expansive solving iterates the inverse; none is attached");

  // expansion inequality over the evaluated pair set
  const std::vector<Point> pts = pair_sample_points(space, opts.plan);
  CheckResult expansion{"expansion-inequality", true, !space.is_finite(), ""};
  std::vector<Point> images;
  images.reserve(pts.size());
  for (const Point& p : pts) images.push_back(map.apply(p));
  for (std::size_t i = 0; i < pts.size() && expansion.passed; ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const double lhs = space.eval(images[i], images[j]);
      const double rhs = rhs_of(space.eval(pts[i], pts[j]), space.eval(pts[j], pts[i]));
      if (lhs < rhs - opts.plan.tolerance) {
        expansion.passed = false;
        expansion.detail = "dist(Tx,Ty) = " + fmt(lhs) + " < " + fmt(rhs) + " at (" +
                           pts[i].to_string() + ", " + pts[j].to_string() + ")";
        break;
      }
    }
  require(checks, std::move(expansion));

  CheckResult inv{"inverse-consistency", true, true, ""};
  for (const Point& p : pts) {
    const Point back = map.apply(map.apply_inverse(p));
    const double gap = std::max(space.eval(p, back), space.eval(back, p));
    const double direct = p.is_real() ? std::abs(p.as_real() - back.as_real()) : gap;
    if (direct > 1e-9 && !(p == back)) {
      inv.passed = false;
      inv.detail = "T(T^-1(y)) misses y by " + fmt(direct) + " at y = " + p.to_string();
      break;
    }
  }
  require(checks, std::move(inv));

  return certify(space, map, [&map](const Point& p) { return map.apply_inverse(p); }, x0,
                 opts, std::move(checks));
}

}  // namespace

FixedPointCertificate expansive_solve(const Space& space, const Mapping& map,
                                      const ExpansiveParams& params, const Point& x0,
                                      const SolveOptions& opts) {
  opts.plan.validate();
  const double s = space.coefficient();
  std::vector<CheckResult> checks;

  CheckResult pos{"parameter-positivity", params.a1 > 0 && params.a2 > 0 && params.a3 > 0 &&
                                              params.a4 > 0,
                  false, "all a_i must be positive"};
  if (pos.passed) pos.detail.clear();
  require(checks, std::move(pos));

  const bool ineq1 = 1.0 + params.a4 - params.a3 > 0.0;
  const bool ineq2 =
      s * (params.a1 + params.a2) + 2.0 * s * s * (params.a3 - params.a4) + params.a4 >
      2.0 * s * s;
  const bool ineq3 = params.a1 + params.a4 >= 1.0;
  CheckResult ineq{"parameter-inequalities", ineq1 && ineq2 && ineq3, false, ""};
  if (!ineq.passed)
    ineq.detail = std::string("violated: ") + (!ineq1 ? "1+a4-a3 > 0; " : "") +
                  (!ineq2 ? "s(a1+a2)+2s^2(a3-a4)+a4 > 2s^2; " : "") +
                  (!ineq3 ? "a1+a4 >= 1" : "");
  require(checks, std::move(ineq));

  const double lambda =
      (1.0 + params.a4 - params.a3) / (params.a1 + params.a2 + params.a4 / s);
  CheckResult lam{"derived-lambda-range", lambda > 0.0 && lambda < 1.0 / (2.0 * s), false,
                  "lambda = " + fmt(lambda) + " outside (0, 1/(2s))"};
  if (lam.passed) lam.detail = "lambda = " + fmt(lambda);
  require(checks, std::move(lam));

  // The four-term right-hand side involves the images, so this sweep is
  // written out instead of reusing the two-argument K-form helper.
  if (!map.has_inverse())
    throw NoInverse("expansive solving iterates the inverse; none is attached");
  const std::vector<Point> pts = pair_sample_points(space, opts.plan);
  CheckResult expansion{"expansion-inequality", true, !space.is_finite(), ""};
  std::vector<Point> images;
  images.reserve(pts.size());
  for (const Point& p : pts) images.push_back(map.apply(p));
  for (std::size_t i = 0; i < pts.size() && expansion.passed; ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const Point& x = pts[i];
      const Point& y = pts[j];
      const Point& tx = images[i];
      const Point& ty = images[j];
      const double lhs = space.eval(tx, ty);
      const double rhs = params.a1 * (space.eval(x, y) + space.eval(y, x)) +
                         params.a2 * (space.eval(x, tx) + space.eval(tx, x)) +
                         params.a3 * (space.eval(y, ty) + space.eval(ty, y)) +
                         params.a4 * (space.eval(x, ty) + space.eval(ty, x));
      if (lhs < rhs - opts.plan.tolerance) {
        expansion.passed = false;
        expansion.detail = "dist(Tx,Ty) = " + fmt(lhs) + " < " + fmt(rhs) + " at (" +
                           x.to_string() + ", " + y.to_string() + ")";
        break;
      }
    }
  require(checks, std::move(expansion));

  return certify(space, map, [&map](const Point& p) { return map.apply_inverse(p); }, x0,
                 opts, std::move(checks));
}

FixedPointCertificate expansive_solve_k(const Space& space, const Mapping& map, double K,
                                        const Point& x0, const SolveOptions& opts) {
  opts.plan.validate();
  const double s = space.coefficient();
  std::vector<CheckResult> checks;
  CheckResult range{"k-range", K > 2.0 * s, false,
                    "K = " + fmt(K) + " must exceed 2s = " + fmt(2.0 * s)};
  if (range.passed) range.detail = "K = " + fmt(K) + " > 2s = " + fmt(2.0 * s);
  require(checks, std::move(range));

  return expansive_run(
      space, map, [K](double dxy, double dyx) { return K * (dxy + dyx); }, x0, opts,
      std::move(checks));
}

ChainBoundReport chain_bound(const Space& space, const SequenceSpec& seq, int n, int m,
                             double tol) {
  if (!(m > n && n >= 0)) throw IndexError("chain_bound requires m > n >= 0");
  if (m + 1 > seq.horizon)
    throw IndexError("chain_bound position m exceeds the sequence horizon");

  const auto pt = [&](int k) { return seq.at(k + 1); };  // 0-based positions
  const double s = space.coefficient();

  ChainBoundReport rep;
  for (int k = n; k < m; ++k) {
    const double w = std::pow(s, k);
    rep.bound_forward += w * space.eval(pt(k), pt(k + 1));
    rep.bound_backward += w * space.eval(pt(k + 1), pt(k));
  }
  rep.actual_forward = space.eval(pt(n), pt(m));
  rep.actual_backward = space.eval(pt(m), pt(n));
  rep.holds = rep.actual_forward <= rep.bound_forward + tol &&
              rep.actual_backward <= rep.bound_backward + tol;
  return rep;
}

DecayBoundReport decay_bound(const Space& space, const SequenceSpec& seq, double lambda,
                             int n, int m, double tol) {
  const double s = space.coefficient();
  if (!(lambda > 0.0 && lambda < 1.0 / (2.0 * s)))
    throw LambdaOutOfRange("lambda must lie in (0, 1/(2s)); got " + fmt(lambda) +
                           " with s = " + fmt(s));
  if (!(m > n && n >= 0)) throw IndexError("decay_bound requires m > n >= 0");
  if (m + 1 > seq.horizon)
    throw IndexError("decay_bound position m exceeds the sequence horizon");

  const auto pt = [&](int k) { return seq.at(k + 1); };

  DecayBoundReport rep;
  rep.premise_holds = true;
  for (int k = 1; k + 1 <= m; ++k) {
    const double sym_prev = space.eval(pt(k - 1), pt(k)) + space.eval(pt(k), pt(k - 1));
    const bool fwd = space.eval(pt(k), pt(k + 1)) <= lambda * sym_prev + tol;
    const bool bwd = space.eval(pt(k + 1), pt(k)) <= lambda * sym_prev + tol;
    if (!fwd || !bwd) {
      rep.premise_holds = false;
      rep.premise_violation_index = k;
      break;
    }
  }

  const double q = 2.0 * s * lambda;
  rep.bound = std::pow(q, n) / (1.0 - q) *
              (space.eval(pt(0), pt(1)) + space.eval(pt(1), pt(0))) / 2.0;
  rep.actual = space.eval(pt(n), pt(m));
  rep.actual_backward = space.eval(pt(m), pt(n));
  rep.holds = rep.premise_holds && rep.actual <= rep.bound + tol &&
              rep.actual_backward <= rep.bound + tol;
  return rep;
}

}  // namespace qpbl
