// Acceptance suite: runs every criterion end to end and prints one
// [PASS]/[FAIL] line each. Exit code 0 only when all criteria hold.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qpbl/axioms.hpp"
#include "qpbl/catalog.hpp"
#include "qpbl/cli.hpp"
#include "qpbl/fixedpoint.hpp"
#include "qpbl/sequences.hpp"
#include "qpbl/topology.hpp"

using namespace qpbl;

namespace {

Point lbl(const std::string& s) { return Point::label(s); }
Point re(double v) { return Point::real(v); }

int g_failures = 0;

void criterion(int number, const std::string& description, bool ok) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", number,
              description.c_str());
  if (!ok) ++g_failures;
}

void criterion_guarded(int number, const std::string& description,
                       const std::function<bool()>& body) {
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::printf("        exception: %s\n", e.what());
    ok = false;
  }
  criterion(number, description, ok);
}

std::vector<std::string> catalog_space_ids() {
  std::vector<std::string> ids;
  for (const auto& e : catalog_entries())
    if (e.kind == CatalogEntry::Kind::space) ids.push_back(e.id);
  return ids;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- criterion 9 helpers -----------------------------------------------------

struct OrbitCase {
  Space space;
  SequenceSpec seq;
};

std::vector<OrbitCase> catalog_orbits() {
  std::vector<OrbitCase> cases;
  const Space ex22 = make_space("ex2.2");
  const Space ex24 = make_space("ex2.4");
  const Space ex310 = make_space("ex3.10");
  const Space ex510 = make_space("ex5.10");
  const Space host = make_space("ex2.2", {{"upper", 10.0}, {"unbounded", 1.0}});
  const Mapping half = make_mapping("map-half");
  const Mapping quarter = make_mapping("map-quarter");
  const Mapping table = make_mapping("map-ex5.10");
  const Mapping expansive = make_mapping("map-expansive");
  Mapping contractive;  // the expansive map's inverse, iterated forward
  contractive.name = "map-expansive-inverse";
  contractive.domain = expansive.domain;
  contractive.forward = *expansive.inverse;

  cases.push_back({ex22, orbit(half, re(1.0), 20)});
  cases.push_back({ex22, orbit(half, re(0.7), 20)});
  cases.push_back({ex22, orbit(quarter, re(1.0), 20)});
  cases.push_back({ex24, orbit(half, re(1.0), 20)});
  cases.push_back({ex310, orbit(quarter, re(0.9), 20)});
  cases.push_back({ex510, orbit(table, lbl("0"), 20)});
  cases.push_back({ex510, orbit(table, lbl("1"), 20)});
  cases.push_back({ex510, orbit(table, lbl("2"), 20)});
  cases.push_back({host, orbit(expansive, re(0.0), 20)});
  cases.push_back({host, orbit(contractive, re(1.0), 20)});
  return cases;
}

bool run_chain_bound_suite(std::size_t& cases_run) {
  cases_run = 0;
  for (const auto& oc : catalog_orbits())
    for (int n = 0; n < 20; ++n)
      for (int m = n + 1; m <= 20; ++m) {
        ++cases_run;
        if (!chain_bound(oc.space, oc.seq, n, m).holds) return false;
      }
  return true;
}

bool run_sandwich_suite() {
  SamplePlan plan;
  plan.grid_points_per_axis = 201;
  plan.random_points = 200;
  plan.seed = 11;
  const double radii[] = {0.25, 0.5, 1.0, 2.0, 4.0};
  for (const auto& id : catalog_space_ids()) {
    const Space sp = make_space(id);
    std::vector<Point> centers;
    if (sp.is_finite()) {
      for (const auto& l : sp.finite().labels) centers.push_back(lbl(l));
    } else {
      const auto& dom = sp.interval_domain();
      for (int i = 0; i < 4; ++i)
        centers.push_back(
            re(dom.lower + (dom.effective_upper() - dom.lower) * i / 3.0));
    }
    int combos = 0;
    for (std::size_t ci = 0; combos < 20; ++ci) {
      const Point& x = centers[ci % centers.size()];
      const double eps = radii[(ci / centers.size()) % 5] * (1.0 + 0.1 * (ci % 3));
      ++combos;
      if (!dball_sandwich_check(sp, x, eps, plan).holds()) return false;
    }
  }
  return true;
}

bool run_bml_suite() {
  for (const auto& id : catalog_space_ids()) {
    const Space d = derive_bml(make_space(id));
    for (AxiomId ax : {AxiomId::bl1, AxiomId::bl2, AxiomId::bl3})
      if (!check_axiom(d, ax, d.coefficient()).passed) return false;
  }
  return true;
}

bool run_inner_delta_suite() {
  SamplePlan plan;
  plan.grid_points_per_axis = 101;
  plan.random_points = 0;
  const double radii[] = {0.2, 0.3, 0.5, 0.75, 1.0, 1.5, 2.0, 2.5,
                          3.0, 4.0, 5.0,  6.0, 8.0, 10.0};
  for (const auto& id : catalog_space_ids()) {
    const Space sp = make_space(id);
    std::vector<Point> candidates;
    if (sp.is_finite()) {
      for (const auto& l : sp.finite().labels) candidates.push_back(lbl(l));
    } else {
      const auto& dom = sp.interval_domain();
      for (int i = 0; i < 21; ++i)
        candidates.push_back(
            re(dom.lower + (dom.effective_upper() - dom.lower) * i / 20.0));
    }
    int triples = 0;
    for (double eps : radii) {
      for (const Point& x : candidates) {
        const Ball b = ball(sp, x, eps);
        for (const Point& y : candidates) {
          if (!b.membership(y)) continue;
          const double delta = inner_delta(sp, x, eps, y, plan);  // self-verifying
          if (!(delta > 0.0)) return false;
          if (++triples >= 50) break;
        }
        if (triples >= 50) break;
      }
      if (triples >= 50) break;
    }
    if (triples < 50) return false;
  }
  return true;
}

bool run_equivalence_suite() {
  const int horizon = 1000;
  const double tol = 1e-6;
  for (const auto& id : catalog_space_ids()) {
    const Space sp = make_space(id);
    std::vector<SequenceSpec> battery;
    if (sp.is_finite()) {
      const auto& l = sp.finite().labels;
      const auto p = [&](std::size_t i) { return lbl(l[i % l.size()]); };
      battery = {const_seq(p(0), horizon),     const_seq(p(1), horizon),
                 const_seq(p(2), horizon),     alt_seq(p(0), p(1), horizon),
                 alt_seq(p(1), p(2), horizon), alt_seq(p(0), p(2), horizon)};
    } else {
      const auto& dom = sp.interval_domain();
      const double lo = dom.lower;
      const double hi = dom.effective_upper();
      const double mid = lo + (hi - lo) / 2.0;
      battery = {const_seq(re(lo), horizon),        const_seq(re(mid), horizon),
                 const_seq(re(hi), horizon),        recip_seq(horizon),
                 alt_seq(re(lo), re(mid), horizon), alt_seq(re(mid), re(hi), horizon)};
    }
    for (const auto& seq : battery)
      if (!cauchy_equivalence_check(sp, seq, tol).agree) return false;
  }
  return true;
}

}  // namespace

int main() {
  // 1. Axiom verification at the claimed coefficient, under a second each.
  criterion_guarded(
      1,
      "all catalog spaces pass QPbl1-QPbl4 at their claimed s "
      "(exact tables; 101-grid + 1000 seeded randoms; < 1 s each)",
      [] {
        SamplePlan plan;
        plan.grid_points_per_axis = 101;
        plan.random_points = 1000;
        plan.seed = 42;
        for (const auto& id : catalog_space_ids()) {
          const auto t0 = std::chrono::steady_clock::now();
          for (const auto& rep : check_axioms_claimed(make_space(id), plan))
            if (!rep.passed) {
              std::printf("        %s fails %s\n", id.c_str(),
                          axiom_name(rep.axiom).c_str());
              return false;
            }
          const double secs = seconds_since(t0);
          if (secs >= 1.0) {
            std::printf("        %s took %.3f s\n", id.c_str(), secs);
            return false;
          }
        }
        return true;
      });

  // 2. Minimal coefficient, exact on tables, bracketed on the grid.
  criterion_guarded(
      2, "minimal coefficient: ex5.10 = 8/7 and sec2/remark1 = 1 exactly; "
         "ex2.2 grid bound in (1.9, 2.0]",
      [] {
        const MinimalCoefficient a = minimal_coefficient(make_space("ex5.10"));
        const MinimalCoefficient b =
            minimal_coefficient(make_space("sec2-counterexample"));
        const MinimalCoefficient c = minimal_coefficient(make_space("remark1"));
        const MinimalCoefficient d = minimal_coefficient(make_space("ex2.2"));
        return a.exact && *a.exact == Rational(8, 7) && b.exact &&
               *b.exact == Rational(1) && c.exact && *c.exact == Rational(1) &&
               d.value > 1.9 && d.value <= 2.0;
      });

  // 3. Strict ball boundaries.
  criterion_guarded(
      3, "ball membership: [0,1/2) boundary at 0.5 and [0,1/sqrt(2)) boundary "
         "at 0.70711, strict inequalities",
      [] {
        const Ball b39 = ball(make_space("ex3.9"), re(0.0), 1.0);
        const Ball b310 = ball(make_space("ex3.10"), re(0.0), 0.5);
        return b39.membership(re(0.499999)) && !b39.membership(re(0.5)) &&
               b310.membership(re(0.70710)) && !b310.membership(re(0.70711));
      });

  // 4. The 3-point table's topology and separation class.
  criterion_guarded(
      4, "remark1 topology is exactly {{}, {0}, X}, class not-T0 with witness (1,2)",
      [] {
        const FiniteTopology top = enumerate_topology(make_space("remark1"));
        const auto sets = top.open_sets();
        const bool sets_ok = sets.size() == 3 && sets[0].empty() &&
                             sets[1] == std::vector<std::string>{"0"} &&
                             sets[2] == std::vector<std::string>{"0", "1", "2"};
        const SeparationReport rep = separation_class(top);
        return sets_ok && rep.cls == SeparationClass::not_T0 && rep.witness &&
               rep.witness->first == "1" && rep.witness->second == "2";
      });

  // 5. Non-uniqueness of limits.
  criterion_guarded(
      5, "constant sequence 1 in remark1 converges to both 1 and 2 (tol 1e-12)",
      [] {
        const Space sp = make_space("remark1");
        const SequenceSpec seq = const_seq(lbl("1"), 100);
        return limit_profile(sp, seq, lbl("1"), 1e-12).converged &&
               limit_profile(sp, seq, lbl("2"), 1e-12).converged;
      });

  // 6. The nine-inequality table and the certified fixed point.
  criterion_guarded(
      6, "ex5.10: all 9 inequalities match their exact rationals and the "
         "solver certifies 0 from x0=2 within 3 iterations",
      [] {
        const Space sp = make_space("ex5.10");
        const Mapping map = make_mapping("map-ex5.10");
        const auto rows = phi_psi_inequality_table(
            sp, map, linear_scalar(Rational(1, 2)), quadratic_capped_scalar());
        const Rational expected[] = {Rational(0),      Rational(5, 8),
                                     Rational(19, 8),  Rational(5, 8),
                                     Rational(3, 16),  Rational(31, 16),
                                     Rational(31, 16), Rational(13, 4),
                                     Rational(5, 8)};
        if (rows.size() != 9) return false;
        for (std::size_t i = 0; i < 9; ++i)
          if (!rows[i].holds || !rows[i].rhs_exact || *rows[i].rhs_exact != expected[i])
            return false;
        const FixedPointCertificate cert =
            phi_psi_solve(sp, map, linear_scalar(Rational(1, 2)),
                          quadratic_capped_scalar(), lbl("2"));
        return cert.point.to_string() == "0" && cert.iterations <= 3 &&
               cert.residual_forward == 0.0 && cert.self_distance == 0.0;
      });

  // 7. The weight-function series.
  criterion_guarded(
      7, "halving-orbit displacement series equals 3x^2 within 1e-9 at "
         "x in {0.1, 0.5, 1.0} (200 terms)",
      [] {
        const Space sp = make_space("ex2.2");
        const Mapping map = make_mapping("map-half");
        for (double x : {0.1, 0.5, 1.0}) {
          const WeightWitnessReport rep = weight_witness(sp, map, re(x), 200);
          if (std::abs(rep.series_value - 3.0 * x * x) > 1e-9) return false;
        }
        return true;
      });

  // 8. The expansive corollary run.
  criterion_guarded(
      8, "expansion inequality with K=9/2>2s on a 50x50 pair grid over [0,10]; "
         "reverse iteration from 1 certifies 0 (residuals < 1e-8, < 200 "
         "inverse evaluations)",
      [] {
        const Space sp = make_space("ex2.2", {{"upper", 10.0}, {"unbounded", 1.0}});
        const Mapping map = make_mapping("map-expansive");
        SolveOptions opts;
        opts.plan.grid_points_per_axis = 50;
        opts.plan.random_points = 0;
        const FixedPointCertificate cert =
            expansive_solve_k(sp, map, 4.5, re(1.0), opts);
        bool expansion_checked = false;
        for (const auto& check : cert.hypothesis_report)
          if (check.name == "expansion-inequality") expansion_checked = check.passed;
        return expansion_checked && cert.residual_forward < 1e-8 &&
               cert.residual_backward < 1e-8 && cert.map_evaluations < 200 &&
               std::abs(cert.point.as_real()) < 1e-3;
      });

  // 9. Property suites.
  criterion_guarded(
      9, "property suites: chain bounds on all catalog orbits (m <= 20), "
         "D-ball sandwich at 20 (x,eps) per space, bl1-bl3 on derived spaces, "
         "50 verified inner_delta triples per space, 6-sequence Cauchy "
         "equivalence battery",
      [] {
        std::size_t chain_cases = 0;
        if (!run_chain_bound_suite(chain_cases)) {
          std::printf("        chain-bound suite failed\n");
          return false;
        }
        if (chain_cases < 1000) {
          std::printf("        chain-bound suite too small: %zu\n", chain_cases);
          return false;
        }
        if (!run_sandwich_suite()) {
          std::printf("        D-ball sandwich suite failed\n");
          return false;
        }
        if (!run_bml_suite()) {
          std::printf("        derived bl1-bl3 suite failed\n");
          return false;
        }
        if (!run_inner_delta_suite()) {
          std::printf("        inner_delta suite failed\n");
          return false;
        }
        if (!run_equivalence_suite()) {
          std::printf("        cauchy equivalence suite failed\n");
          return false;
        }
        return true;
      });

  // 10. The full reproduction registry.
  criterion_guarded(
      10, "reproduce --all exits 0 in under 30 s", [] {
        const auto t0 = std::chrono::steady_clock::now();
        const auto res = cli::run({"reproduce", "--all"});
        const double secs = seconds_since(t0);
        if (secs >= 30.0) std::printf("        took %.1f s\n", secs);
        return res.exit_code == 0 &&
               res.report.at("payload").at("all_passed").get<bool>() && secs < 30.0;
      });

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criterion(s) failed\n", g_failures);
  return 1;
}
