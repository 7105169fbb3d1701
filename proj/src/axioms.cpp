#include "qpbl/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qpbl {

namespace {

// ---------------------------------------------------------------------------
// Interval sweep: sample set plus the full pairwise distance matrix.
// Grid points occupy indices [0, n_grid); random points follow.
// ---------------------------------------------------------------------------

struct IntervalSweep {
  std::vector<double> pts;
  std::size_t n_grid = 0;
  std::vector<double> dist;  // row-major pts.size() x pts.size()

  double at(std::size_t a, std::size_t b) const { return dist[a * pts.size() + b]; }
  Point point(std::size_t a) const { return Point::real(pts[a]); }
};

IntervalSweep build_interval_sweep(const Space& sp, const SamplePlan& plan) {
  IntervalSweep sw;
  const auto& dom = sp.interval_domain();
  sw.pts = plan.interval_samples(dom);
  sw.n_grid = static_cast<std::size_t>(plan.grid_points_per_axis);
  const std::size_t n = sw.pts.size();
  sw.dist.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) sw.dist[a * n + b] = sp.real_at(sw.pts[a], sw.pts[b]);
  return sw;
}

// Triple family for the triangle-type axioms on interval domains: every
// grid triple, plus each random point placed in all three slots against
// all grid pairs. The family only grows when the plan grows (finer grid or
// appended randoms), which keeps the coefficient supremum monotone under
// refinement.
template <typename Fn>
void for_each_triple(const IntervalSweep& sw, Fn&& fn) {
  const std::size_t g = sw.n_grid;
  const std::size_t n = sw.pts.size();
  for (std::size_t x = 0; x < g; ++x)
    for (std::size_t y = 0; y < g; ++y)
      for (std::size_t z = 0; z < g; ++z) fn(x, y, z);
  for (std::size_t r = g; r < n; ++r)
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) {
        fn(r, i, j);
        fn(i, r, j);
        fn(i, j, r);
      }
}

// ---------------------------------------------------------------------------
// Report assembly
// ---------------------------------------------------------------------------

AxiomReport make_report(AxiomId id, double worst, std::vector<Point> witness,
                        bool sampled, double tol) {
  AxiomReport rep;
  rep.axiom = id;
  rep.worst_violation = worst;
  rep.passed = worst <= tol;
  rep.sampled_evidence_only = sampled;
  rep.tolerance = tol;
  if (!rep.passed) rep.witness = std::move(witness);
  return rep;
}

bool identity_axiom(AxiomId id) {
  return id == AxiomId::QPbl1 || id == AxiomId::bl1 || id == AxiomId::QPb1;
}

// ---------------------------------------------------------------------------
// Exact finite sweeps
// ---------------------------------------------------------------------------

// Exhaustive double-precision sweep for finite tables whose exact check
// overflows 64-bit rationals (e.g. a coefficient with a 2^52 denominator
// against odd table denominators). Still exhaustive, just not exact.
AxiomReport check_finite_double(const Space& sp, AxiomId id, double s, double tol) {
  const std::size_t n = sp.size();
  const auto e = [&](std::size_t i, std::size_t j) { return sp.at(i, j); };

  if (identity_axiom(id)) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const bool violated = (id == AxiomId::QPb1)
                                  ? (e(i, i) == e(i, j) && e(i, j) == e(j, j))
                                  : (e(i, j) <= 0.0);
        if (violated)
          return make_report(id, 1.0, {sp.point_at(i), sp.point_at(j)}, false, tol);
      }
    return make_report(id, 0.0, {}, false, tol);
  }

  double worst = -std::numeric_limits<double>::infinity();
  std::vector<Point> witness;
  const auto consider = [&](double v, std::vector<Point> w) {
    if (v > worst) worst = v;
    if (witness.empty() && v > tol) witness = std::move(w);
  };
  switch (id) {
    case AxiomId::QPbl2:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          consider(e(i, i) - e(i, j), {sp.point_at(i), sp.point_at(j)});
      break;
    case AxiomId::QPbl3:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          consider(e(i, i) - e(j, i), {sp.point_at(i), sp.point_at(j)});
      break;
    case AxiomId::symmetric:
    case AxiomId::bl2:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          consider(std::abs(e(i, j) - e(j, i)), {sp.point_at(i), sp.point_at(j)});
      break;
    case AxiomId::QPbl4:
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z)
            consider(e(x, y) + e(z, z) - s * (e(x, z) + e(z, y)),
                     {sp.point_at(x), sp.point_at(z), sp.point_at(y)});
      break;
    case AxiomId::bl3:
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z)
            consider(e(x, y) - s * (e(x, z) + e(z, y)),
                     {sp.point_at(x), sp.point_at(z), sp.point_at(y)});
      break;
    default:
      throw BadParams("axiom not handled by the finite sweep");
  }
  return make_report(id, worst, std::move(witness), false, tol);
}

AxiomReport check_finite_exact(const Space& sp, AxiomId id, const Rational& s, double tol) {
  const std::size_t n = sp.size();
  const auto e = [&](std::size_t i, std::size_t j) { return sp.exact_at(i, j); };
  const Rational zero(0);

  if (identity_axiom(id)) {
    // QPbl1/bl1: dist(x,y) = 0 with x != y; QPb1: the three-way equality
    // dist(x,x) = dist(x,y) = dist(y,y) with x != y. Zero/equality tests
    // are exact; the tolerance never blurs identity axioms.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const bool violated = (id == AxiomId::QPb1)
                                  ? (e(i, i) == e(i, j) && e(i, j) == e(j, j))
                                  : (e(i, j) == zero);
        if (violated)
          return make_report(id, 1.0, {sp.point_at(i), sp.point_at(j)}, false, tol);
      }
    return make_report(id, 0.0, {}, false, tol);
  }

  Rational worst(-1);
  bool have = false;
  std::vector<Point> witness;  // first violating tuple in sweep order
  const auto consider = [&](const Rational& v, std::vector<Point> w) {
    if (!have || v > worst) {
      worst = v;
      have = true;
    }
    if (witness.empty() && v.to_double() > tol) witness = std::move(w);
  };

  switch (id) {
    case AxiomId::QPbl2:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          consider(e(i, i) - e(i, j), {sp.point_at(i), sp.point_at(j)});
      break;
    case AxiomId::QPbl3:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          consider(e(i, i) - e(j, i), {sp.point_at(i), sp.point_at(j)});
      break;
    case AxiomId::symmetric:
    case AxiomId::bl2:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Rational dlt = e(i, j) - e(j, i);
          if (dlt.is_negative()) dlt = -dlt;
          consider(dlt, {sp.point_at(i), sp.point_at(j)});
        }
      break;
    case AxiomId::QPbl4:
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z)
            consider(e(x, y) + e(z, z) - s * (e(x, z) + e(z, y)),
                     {sp.point_at(x), sp.point_at(z), sp.point_at(y)});
      break;
    case AxiomId::bl3:
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z)
            consider(e(x, y) - s * (e(x, z) + e(z, y)),
                     {sp.point_at(x), sp.point_at(z), sp.point_at(y)});
      break;
    default:
      throw BadParams("axiom not handled by the exact sweep");
  }
  return make_report(id, have ? worst.to_double() : 0.0, std::move(witness), false, tol);
}

// ---------------------------------------------------------------------------
// Sampled interval sweeps
// ---------------------------------------------------------------------------

AxiomReport check_interval(const IntervalSweep& sw, AxiomId id, double s,
                           double tol) {
  const std::size_t n = sw.pts.size();

  if (identity_axiom(id)) {
    // Contrapositive positivity at sampled distinct pairs: dist must be
    // strictly positive (exact float zero marks a violation).
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (sw.pts[i] == sw.pts[j]) continue;
        const bool violated = (id == AxiomId::QPb1)
                                  ? (sw.at(i, i) == sw.at(i, j) && sw.at(i, j) == sw.at(j, j))
                                  : (sw.at(i, j) <= 0.0);
        if (violated) return make_report(id, 1.0, {sw.point(i), sw.point(j)}, true, tol);
      }
    return make_report(id, 0.0, {}, true, tol);
  }

  double worst = -std::numeric_limits<double>::infinity();
  std::size_t wa = 0, wb = 0, wc = 0;
  bool have_witness = false;
  bool triple = false;
  const auto consider2 = [&](double v, std::size_t a, std::size_t b) {
    if (v > worst) worst = v;
    if (!have_witness && v > tol) {
      wa = a;
      wb = b;
      have_witness = true;
    }
  };
  const auto consider3 = [&](double v, std::size_t x, std::size_t y, std::size_t z) {
    if (v > worst) worst = v;
    if (!have_witness && v > tol) {
      wa = x;
      wb = y;
      wc = z;
      have_witness = true;
    }
  };

  switch (id) {
    case AxiomId::QPbl2:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) consider2(sw.at(i, i) - sw.at(i, j), i, j);
      break;
    case AxiomId::QPbl3:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) consider2(sw.at(i, i) - sw.at(j, i), i, j);
      break;
    case AxiomId::symmetric:
    case AxiomId::bl2:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          consider2(std::abs(sw.at(i, j) - sw.at(j, i)), i, j);
      break;
    case AxiomId::QPbl4:
      triple = true;
      for_each_triple(sw, [&](std::size_t x, std::size_t y, std::size_t z) {
        consider3(sw.at(x, y) + sw.at(z, z) - s * (sw.at(x, z) + sw.at(z, y)), x, y, z);
      });
      break;
    case AxiomId::bl3:
      triple = true;
      for_each_triple(sw, [&](std::size_t x, std::size_t y, std::size_t z) {
        consider3(sw.at(x, y) - s * (sw.at(x, z) + sw.at(z, y)), x, y, z);
      });
      break;
    default:
      throw BadParams("axiom not handled by the interval sweep");
  }

  std::vector<Point> witness;
  if (have_witness) {
    if (triple)
      witness = {sw.point(wa), sw.point(wc), sw.point(wb)};  // path order (x, z, y)
    else
      witness = {sw.point(wa), sw.point(wb)};
  }
  return make_report(id, worst, std::move(witness), true, tol);
}

AxiomReport check_finite(const Space& sp, AxiomId id, const Rational& s, double tol) {
  try {
    return check_finite_exact(sp, id, s, tol);
  } catch (const RationalOverflow&) {
    return check_finite_double(sp, id, s.to_double(), tol);
  }
}

Rational exact_coefficient(const Space& sp, double s) {
  if (sp.coefficient_exact() && sp.coefficient_exact()->to_double() == s)
    return *sp.coefficient_exact();
  const auto r = Rational::from_double(s);
  if (!r) throw InvalidCoefficient("coefficient not representable exactly");
  return *r;
}

}  // namespace

AxiomReport check_axiom(const Space& space, AxiomId id, const Rational& s,
                        const SamplePlan& plan) {
  if (s < Rational(1)) throw InvalidCoefficient("coefficient s must be >= 1");
  plan.validate();
  if (space.is_finite()) {
    if (!space.has_exact()) throw BadParams("finite space lacks an exact evaluator");
    return check_finite(space, id, s, plan.tolerance);
  }
  const IntervalSweep sw = build_interval_sweep(space, plan);
  return check_interval(sw, id, s.to_double(), plan.tolerance);
}

AxiomReport check_axiom(const Space& space, AxiomId id, double s, const SamplePlan& plan) {
  if (!(s >= 1.0)) throw InvalidCoefficient("coefficient s must be >= 1");
  if (space.is_finite()) return check_axiom(space, id, exact_coefficient(space, s), plan);
  plan.validate();
  const IntervalSweep sw = build_interval_sweep(space, plan);
  return check_interval(sw, id, s, plan.tolerance);
}

std::vector<AxiomReport> check_axioms(const Space& space, const Rational& s,
                                      const SamplePlan& plan) {
  if (s < Rational(1)) throw InvalidCoefficient("coefficient s must be >= 1");
  plan.validate();
  std::vector<AxiomReport> reports;
  const AxiomId ids[] = {AxiomId::QPbl1, AxiomId::QPbl2, AxiomId::QPbl3, AxiomId::QPbl4};
  if (space.is_finite()) {
    for (AxiomId id : ids) reports.push_back(check_finite(space, id, s, plan.tolerance));
    return reports;
  }
  const IntervalSweep sw = build_interval_sweep(space, plan);
  for (AxiomId id : ids)
    reports.push_back(check_interval(sw, id, s.to_double(), plan.tolerance));
  return reports;
}

std::vector<AxiomReport> check_axioms(const Space& space, double s, const SamplePlan& plan) {
  if (!(s >= 1.0)) throw InvalidCoefficient("coefficient s must be >= 1");
  if (space.is_finite()) return check_axioms(space, exact_coefficient(space, s), plan);
  plan.validate();
  std::vector<AxiomReport> reports;
  const IntervalSweep sw = build_interval_sweep(space, plan);
  for (AxiomId id : {AxiomId::QPbl1, AxiomId::QPbl2, AxiomId::QPbl3, AxiomId::QPbl4})
    reports.push_back(check_interval(sw, id, s, plan.tolerance));
  return reports;
}

std::vector<AxiomReport> check_axioms_claimed(const Space& space, const SamplePlan& plan) {
  if (space.is_finite() && space.coefficient_exact())
    return check_axioms(space, *space.coefficient_exact(), plan);
  return check_axioms(space, space.coefficient(), plan);
}

MinimalCoefficient minimal_coefficient(const Space& space, const SamplePlan& plan) {
  plan.validate();
  for (AxiomId id : {AxiomId::QPbl1, AxiomId::QPbl2, AxiomId::QPbl3}) {
    const AxiomReport rep = check_axiom(space, id, Rational(1), plan);
    if (!rep.passed)
      throw AxiomPrereqFailed("minimal_coefficient requires QPbl1-QPbl3; " +
                              axiom_name(id) + " fails on the evaluated set");
  }

  MinimalCoefficient result;
  if (space.is_finite()) {
    const std::size_t n = space.size();
    Rational best(1);
    std::optional<std::array<std::size_t, 3>> arg;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const Rational den = space.exact_at(x, z) + space.exact_at(z, y);
          if (den.is_zero()) continue;
          const Rational ratio = (space.exact_at(x, y) + space.exact_at(z, z)) / den;
          if (ratio > best) {
            best = ratio;
            arg = {x, y, z};
          }
        }
    result.exact = best;
    result.value = best.to_double();
    if (arg)
      result.witness = {space.point_at((*arg)[0]), space.point_at((*arg)[2]),
                        space.point_at((*arg)[1])};
    return result;
  }

  const IntervalSweep sw = build_interval_sweep(space, plan);
  double best = 1.0;
  std::size_t wx = 0, wy = 0, wz = 0;
  bool have = false;
  for_each_triple(sw, [&](std::size_t x, std::size_t y, std::size_t z) {
    const double den = sw.at(x, z) + sw.at(z, y);
    if (den == 0.0) return;
    const double ratio = (sw.at(x, y) + sw.at(z, z)) / den;
    if (ratio > best) {
      best = ratio;
      wx = x;
      wy = y;
      wz = z;
      have = true;
    }
  });
  result.value = best;
  result.lower_bound_only = true;
  if (have) result.witness = {sw.point(wx), sw.point(wz), sw.point(wy)};
  return result;
}

AxiomReport is_symmetric(const Space& space, const SamplePlan& plan) {
  return check_axiom(space, AxiomId::symmetric, Rational(1), plan);
}

SamplePlan precondition_plan() {
  SamplePlan plan;
  plan.grid_points_per_axis = 21;
  plan.random_points = 50;
  return plan;
}

Space derive_bml(const Space& space, const SamplePlan& plan) {
  for (const AxiomReport& rep : check_axioms_claimed(space, plan))
    if (!rep.passed)
      throw AxiomPrereqFailed("derive_bml requires a verified space; " +
                              axiom_name(rep.axiom) + " fails at the claimed coefficient");
  return space.symmetrized(space.name() + "-D");
}

SpaceClassification classify(const Space& space, const SamplePlan& plan) {
  SpaceClassification cls;
  const double s = space.coefficient();
  const AxiomId ids[] = {AxiomId::QPbl1, AxiomId::QPbl2, AxiomId::QPbl3, AxiomId::QPbl4,
                         AxiomId::QPb1,  AxiomId::symmetric, AxiomId::bl1, AxiomId::bl2,
                         AxiomId::bl3};
  for (AxiomId id : ids) cls.reports.push_back(check_axiom(space, id, s, plan));
  const auto passed = [&](AxiomId id) {
    for (const auto& r : cls.reports)
      if (r.axiom == id) return r.passed;
    return false;
  };
  cls.quasi_partial_b_metric_like = passed(AxiomId::QPbl1) && passed(AxiomId::QPbl2) &&
                                    passed(AxiomId::QPbl3) && passed(AxiomId::QPbl4);
  cls.quasi_partial_b_metric = passed(AxiomId::QPb1) && passed(AxiomId::QPbl2) &&
                               passed(AxiomId::QPbl3) && passed(AxiomId::QPbl4);
  cls.symmetric = passed(AxiomId::symmetric);
  cls.b_metric_like = passed(AxiomId::bl1) && passed(AxiomId::bl2) && passed(AxiomId::bl3);
  cls.sampled_evidence_only = !space.is_finite();
  return cls;
}

}  // namespace qpbl
