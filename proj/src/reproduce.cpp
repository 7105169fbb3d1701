#include <cmath>
#include <functional>
#include <map>

#include "qpbl/axioms.hpp"
#include "qpbl/catalog.hpp"
#include "qpbl/cli.hpp"
#include "qpbl/fixedpoint.hpp"
#include "qpbl/sequences.hpp"
#include "qpbl/topology.hpp"

namespace qpbl::cli {

namespace {

using nlohmann::json;

// Bases: "fixed-value" compares against a constant pinned in the registry,
// "recomputed" against a value derived independently inside the entry,
// "definition" flags identity-level facts.
constexpr const char* kFixed = "fixed-value";
constexpr const char* kRecomputed = "recomputed";
constexpr const char* kDefinition = "definition";

struct Checker {
  json checks = json::array();
  bool all_passed = true;

  void add(const std::string& name, bool passed, json expected, json actual,
           const char* basis) {
    json c;
    c["name"] = name;
    c["passed"] = passed;
    c["expected"] = std::move(expected);
    c["actual"] = std::move(actual);
    c["basis"] = basis;
    checks.push_back(std::move(c));
    all_passed = all_passed && passed;
  }

  void expect_true(const std::string& name, bool cond, const char* basis) {
    add(name, cond, true, cond, basis);
  }
  void expect_eq(const std::string& name, const std::string& actual,
                 const std::string& expected, const char* basis) {
    add(name, actual == expected, expected, actual, basis);
  }
  void expect_near(const std::string& name, double actual, double expected, double tol,
                   const char* basis) {
    add(name, std::abs(actual - expected) <= tol, expected, actual, basis);
  }
  void expect_exact(const std::string& name, double actual, double expected,
                    const char* basis) {
    add(name, actual == expected, expected, actual, basis);
  }

  json payload(const std::string& id) const {
    json j;
    j["id"] = id;
    j["passed"] = all_passed;
    j["checks"] = checks;
    return j;
  }
};

json witness_labels(const std::vector<Point>& witness) {
  json a = json::array();
  for (const auto& p : witness) a.push_back(p.to_string());
  return a;
}

bool reports_all_pass(const std::vector<AxiomReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return true;
}

// --- entries ----------------------------------------------------------------

json entry_sec2(Checker c) {
  const Space sp = make_space("sec2-counterexample");
  c.expect_true("axioms-pass-at-claimed-s", reports_all_pass(check_axioms_claimed(sp)),
                kFixed);
  const MinimalCoefficient mc = minimal_coefficient(sp);
  c.expect_eq("minimal-coefficient", mc.exact ? mc.exact->to_string() : "", "1", kFixed);
  const AxiomReport qpb1 = check_axiom(sp, AxiomId::QPb1, 1.0);
  c.expect_true("qpb1-fails", !qpb1.passed, kFixed);
  c.add("qpb1-witness", witness_labels(qpb1.witness) == json::array({"1", "2"}),
        json::array({"1", "2"}), witness_labels(qpb1.witness), kFixed);
  const AxiomReport sym = is_symmetric(sp);
  c.expect_true("symmetric-fails", !sym.passed, kFixed);
  c.add("asymmetry-witness", witness_labels(sym.witness) == json::array({"0", "1"}),
        json::array({"0", "1"}), witness_labels(sym.witness), kFixed);
  c.expect_exact("dist-0-1", sp.eval(Point::label("0"), Point::label("1")), 1.0, kFixed);
  c.expect_exact("dist-1-0", sp.eval(Point::label("1"), Point::label("0")), 2.0, kFixed);
  return c.payload("sec2-counterexample-class");
}

json entry_ex22(Checker c) {
  const Space sp = make_space("ex2.2");
  c.expect_true("axioms-pass-at-claimed-s", reports_all_pass(check_axioms_claimed(sp)),
                kFixed);
  c.expect_exact("claimed-s", sp.coefficient(), 2.0, kFixed);
  c.expect_true("symmetric", is_symmetric(sp).passed, kDefinition);
  c.expect_exact("dist-0.3-0.3", sp.eval(Point::real(0.3), Point::real(0.3)), 0.0, kFixed);
  const MinimalCoefficient mc = minimal_coefficient(sp);
  c.expect_true("grid-lower-bound-in-(1.9,2.0]", mc.value > 1.9 && mc.value <= 2.0,
                kRecomputed);
  c.expect_true("lower-bound-flagged", mc.lower_bound_only, kDefinition);
  return c.payload("ex2.2-axioms");
}

json entry_ex23(Checker c) {
  const Space sp = make_space("ex2.3");
  c.expect_exact("claimed-s", sp.coefficient(), 1.0, kFixed);
  c.expect_true("axioms-pass-at-claimed-s", reports_all_pass(check_axioms_claimed(sp)),
                kFixed);
  c.expect_exact("dist-0-0", sp.eval(Point::real(0.0), Point::real(0.0)), 0.0, kFixed);
  c.expect_true("symmetric", is_symmetric(sp).passed, kDefinition);
  return c.payload("ex2.3-axioms");
}

json entry_ex24(Checker c) {
  const Space sp = make_space("ex2.4");
  c.expect_exact("claimed-s", sp.coefficient(), 1.0, kFixed);
  c.expect_true("axioms-pass-at-claimed-s", reports_all_pass(check_axioms_claimed(sp)),
                kFixed);
  const AxiomReport sym = is_symmetric(sp);
  c.expect_true("symmetric-fails", !sym.passed, kRecomputed);
  c.expect_exact("dist-0-1", sp.eval(Point::real(0.0), Point::real(1.0)), 1.0, kRecomputed);
  c.expect_exact("dist-1-0", sp.eval(Point::real(1.0), Point::real(0.0)), 2.0, kRecomputed);
  const Space bml = derive_bml(sp);
  c.expect_exact("bml-dist-0-1", bml.eval(Point::real(0.0), Point::real(1.0)), 3.0,
                 kRecomputed);
  return c.payload("ex2.4-axioms");
}

json entry_ex25(Checker c) {
  const Space sp = make_space("ex2.5", {{"q", 2.0}});
  c.expect_exact("dist-0-1", sp.eval(Point::real(0.0), Point::real(1.0)), 1.0, kFixed);
  c.expect_exact("claimed-s-is-2^(q-1)", sp.coefficient(), 2.0, kFixed);
  c.expect_true("axioms-pass-at-claimed-s", reports_all_pass(check_axioms_claimed(sp)),
                kFixed);
  return c.payload("ex2.5-axioms");
}

json entry_ex314(Checker c) {
  const Space sp = make_space("ex3.14");
  c.expect_exact("claimed-s", sp.coefficient(), 2.0, kFixed);
  c.expect_true("axioms-pass-at-claimed-s", reports_all_pass(check_axioms_claimed(sp)),
                kFixed);
  c.expect_exact("dist-inf-inf", sp.eval(Point::label("inf"), Point::label("inf")), 0.0,
                 kFixed);
  c.expect_exact("dist-3-inf", sp.eval(Point::label("3"), Point::label("inf")), 1.0 / 3.0,
                 kFixed);
  c.expect_exact("dist-inf-3", sp.eval(Point::label("inf"), Point::label("3")), 1.0 / 6.0,
                 kFixed);
  return c.payload("ex3.14-axioms");
}

json entry_ex314_noncontinuity(Checker c) {
  const Space sp = make_space("ex3.14", {{"n_max", 20001.0}});
  const Point two = Point::label("2");
  const Point three = Point::label("3");
  bool stays_one = true;
  for (int n : {1, 10, 100, 1000, 10000}) {
    const Point xn = Point::label(std::to_string(2 * n + 1));
    stays_one = stays_one && sp.eval(xn, two) == 1.0 && sp.eval(two, xn) == 1.0;
  }
  c.expect_true("dist(x_n,2)-constant-1", stays_one, kFixed);
  c.expect_exact("dist-2-2", sp.eval(two, two), 1.0, kFixed);
  const Point far = Point::label("20001");
  c.expect_near("dist(x_n,3)-near-1/3", sp.eval(far, three), 1.0 / 3.0, 1e-3, kFixed);
  c.expect_exact("dist-2-3", sp.eval(two, three), 1.0, kFixed);
  return c.payload("ex3.14-noncontinuity");
}

json entry_remark1_topology(Checker c) {
  const Space sp = make_space("remark1");
  const FiniteTopology top = enumerate_topology(sp);
  const json expected = json::array(
      {json::array(), json::array({"0"}), json::array({"0", "1", "2"})});
  c.add("open-sets", json(top.open_sets()) == expected, expected, json(top.open_sets()),
        kFixed);
  const SeparationReport sep = separation_class(top);
  c.expect_eq("separation-class", separation_name(sep.cls), "not-T0", kFixed);
  const json w = sep.witness ? json::array({sep.witness->first, sep.witness->second})
                             : json::array();
  c.add("witness-pair", w == json::array({"1", "2"}), json::array({"1", "2"}), w, kFixed);
  return c.payload("remark1-topology");
}

json entry_remark1_limits(Checker c) {
  const Space sp = make_space("remark1");
  const SequenceSpec seq = const_seq(Point::label("1"), 100);
  const LimitProfile to1 = limit_profile(sp, seq, Point::label("1"), 1e-12);
  const LimitProfile to2 = limit_profile(sp, seq, Point::label("2"), 1e-12);
  c.expect_true("converges-to-1", to1.converged, kFixed);
  c.expect_true("converges-to-2", to2.converged, kFixed);
  const Space bml = derive_bml(sp);
  c.expect_exact("bml-dist-0-1", bml.eval(Point::label("0"), Point::label("1")), 2.0,
                 kFixed);
  return c.payload("remark1-limits");
}

json entry_ex39_ball(Checker c) {
  const Space sp = make_space("ex3.9");
  const Ball b = ball(sp, Point::real(0.0), 1.0);
  c.expect_true("member-0.49", b.membership(Point::real(0.49)), kFixed);
  c.expect_true("member-0.499999", b.membership(Point::real(0.499999)), kFixed);
  c.expect_true("boundary-0.5-excluded", !b.membership(Point::real(0.5)), kFixed);
  c.expect_true("center-member", b.membership(Point::real(0.0)), kDefinition);
  return c.payload("ex3.9-ball");
}

json entry_ex310_ball(Checker c) {
  const Space sp = make_space("ex3.10");
  const Ball b = ball(sp, Point::real(0.0), 0.5);
  c.expect_true("member-0.70710", b.membership(Point::real(0.70710)), kFixed);
  c.expect_true("non-member-0.70711", !b.membership(Point::real(0.70711)), kFixed);
  c.expect_true("boundary-1/sqrt2-excluded", !b.membership(Point::real(std::sqrt(0.5))),
                kRecomputed);
  return c.payload("ex3.10-ball");
}

json entry_ex510_space(Checker c) {
  const Space sp = make_space("ex5.10");
  c.expect_exact("dist-2-1", sp.eval(Point::label("2"), Point::label("1")), 8.0, kFixed);
  const MinimalCoefficient mc = minimal_coefficient(sp);
  c.expect_eq("minimal-coefficient", mc.exact ? mc.exact->to_string() : "", "8/7", kFixed);
  c.add("minimal-witness", witness_labels(mc.witness) == json::array({"2", "0", "1"}),
        json::array({"2", "0", "1"}), witness_labels(mc.witness), kRecomputed);
  const AxiomReport at1 = check_axiom(sp, AxiomId::QPbl4, 1.0);
  c.expect_true("qpbl4-fails-at-s-1", !at1.passed, kRecomputed);
  c.add("qpbl4-witness-at-s-1", witness_labels(at1.witness) == json::array({"2", "0", "1"}),
        json::array({"2", "0", "1"}), witness_labels(at1.witness), kRecomputed);
  c.expect_true("axioms-pass-at-8/7", reports_all_pass(check_axioms_claimed(sp)), kFixed);
  return c.payload("ex5.10-space");
}

json entry_ex510_inequalities(Checker c) {
  const Space sp = make_space("ex5.10");
  const Mapping map = make_mapping("map-ex5.10");
  const auto rows =
      phi_psi_inequality_table(sp, map, linear_scalar(Rational(1, 2)),
                               quadratic_capped_scalar());
  const std::vector<std::string> expected_rhs = {"0",    "5/8",   "19/8",  "5/8", "3/16",
                                                 "31/16", "31/16", "13/4", "5/8"};
  const std::vector<std::string> expected_lhs = {"0", "0", "1", "0", "0", "1", "1", "1",
                                                 "1/2"};
  bool rhs_ok = rows.size() == 9;
  bool lhs_ok = rows.size() == 9;
  bool all_hold = true;
  json actual_rhs = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string rhs = rows[i].rhs_exact ? rows[i].rhs_exact->to_string() : "";
    const std::string lhs = rows[i].lhs_exact ? rows[i].lhs_exact->to_string() : "";
    actual_rhs.push_back(rhs);
    rhs_ok = rhs_ok && rhs == expected_rhs[i];
    lhs_ok = lhs_ok && lhs == expected_lhs[i];
    all_hold = all_hold && rows[i].holds;
  }
  c.add("rhs-values-exact", rhs_ok, json(expected_rhs), actual_rhs, kFixed);
  c.expect_true("lhs-values-exact", lhs_ok, kFixed);
  c.expect_true("all-nine-inequalities-hold", all_hold, kFixed);
  return c.payload("ex5.10-inequalities");
}

json entry_ex510_fixed_point(Checker c) {
  const Space sp = make_space("ex5.10");
  const Mapping map = make_mapping("map-ex5.10");
  const SequenceSpec orb = orbit(map, Point::label("2"), 2);
  const json orbit_actual = json::array(
      {orb.at(1).to_string(), orb.at(2).to_string(), orb.at(3).to_string()});
  c.add("orbit-2-1-0", orbit_actual == json::array({"2", "1", "0"}),
        json::array({"2", "1", "0"}), orbit_actual, kFixed);

  const FixedPointCertificate cert =
      phi_psi_solve(sp, map, linear_scalar(Rational(1, 2)), quadratic_capped_scalar(),
                    Point::label("2"));
  c.expect_eq("fixed-point", cert.point.to_string(), "0", kFixed);
  c.expect_true("within-3-iterations", cert.iterations <= 3, kFixed);
  c.expect_exact("residual-forward", cert.residual_forward, 0.0, kFixed);
  c.expect_exact("self-distance", cert.self_distance, 0.0, kFixed);
  c.expect_true("unique-among-restarts", cert.unique_among_restarts, kFixed);
  return c.payload("ex5.10-fixed-point");
}

json entry_ex56_series(Checker c) {
  const Mapping map = make_mapping("map-half");
  c.expect_exact("map-half-at-1", map.apply(Point::real(1.0)).as_real(), 0.5, kFixed);
  const Space sp = make_space("ex2.2");
  for (double x : {0.1, 0.5, 1.0}) {
    const WeightWitnessReport rep = weight_witness(sp, map, Point::real(x), 200);
    c.expect_near("series-3x^2-at-" + std::to_string(x), rep.series_value, 3.0 * x * x,
                  1e-9, kFixed);
    c.expect_true("telescoping-at-" + std::to_string(x), rep.inequality_verified,
                  kDefinition);
  }
  return c.payload("ex5.6-series");
}

json entry_ex515_fixed_point(Checker c) {
  const Space sp = make_space("ex2.2", {{"upper", 10.0}, {"unbounded", 1.0}});
  const Mapping map = make_mapping("map-expansive");

  const double t1 = map.apply(Point::real(1.0)).as_real();
  const double t2 = map.apply(Point::real(2.0)).as_real();
  const double lhs = sp.eval(Point::real(t1), Point::real(t2));
  const double expected_lhs = std::pow(3.0 * std::sqrt(2.0) + 6.0 * std::sqrt(5.0), 2.0);
  c.expect_near("expansion-lhs-at-(1,2)", lhs, expected_lhs, 1e-9, kRecomputed);
  const double rhs = 4.5 * (sp.eval(Point::real(1.0), Point::real(2.0)) +
                            sp.eval(Point::real(2.0), Point::real(1.0)));
  c.expect_exact("expansion-rhs-at-(1,2)", rhs, 81.0, kRecomputed);
  c.expect_true("expansion-holds-at-(1,2)", lhs >= rhs, kFixed);

  SolveOptions opts;
  opts.plan.grid_points_per_axis = 50;
  opts.plan.random_points = 0;
  const FixedPointCertificate cert =
      expansive_solve_k(sp, map, 4.5, Point::real(1.0), opts);
  c.expect_true("residuals-below-1e-8",
                cert.residual_forward < 1e-8 && cert.residual_backward < 1e-8, kFixed);
  c.expect_true("under-200-inverse-evaluations", cert.map_evaluations < 200, kFixed);
  c.expect_near("fixed-point-is-0", cert.point.as_real(), 0.0, 1e-3, kFixed);
  c.expect_true("unique-among-restarts", cert.unique_among_restarts, kFixed);
  return c.payload("ex5.15-fixed-point");
}

using Entry = std::function<json(Checker)>;

const std::vector<std::pair<std::string, Entry>>& registry() {
  static const std::vector<std::pair<std::string, Entry>> entries = {
      {"sec2-counterexample-class", entry_sec2},
      {"ex2.2-axioms", entry_ex22},
      {"ex2.3-axioms", entry_ex23},
      {"ex2.4-axioms", entry_ex24},
      {"ex2.5-axioms", entry_ex25},
      {"ex3.14-axioms", entry_ex314},
      {"ex3.14-noncontinuity", entry_ex314_noncontinuity},
      {"remark1-topology", entry_remark1_topology},
      {"remark1-limits", entry_remark1_limits},
      {"ex3.9-ball", entry_ex39_ball},
      {"ex3.10-ball", entry_ex310_ball},
      {"ex5.10-space", entry_ex510_space},
      {"ex5.10-inequalities", entry_ex510_inequalities},
      {"ex5.10-fixed-point", entry_ex510_fixed_point},
      {"ex5.6-series", entry_ex56_series},
      {"ex5.15-fixed-point", entry_ex515_fixed_point},
  };
  return entries;
}

}  // namespace

std::vector<std::string> reproduce_ids() {
  std::vector<std::string> ids;
  ids.reserve(registry().size());
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  return ids;
}

nlohmann::json reproduce_example(const std::string& example_id) {
  for (const auto& [id, fn] : registry())
    if (id == example_id) return fn(Checker{});
  throw UnknownExample("no reproduction entry named '" + example_id + "'");
}

}  // namespace qpbl::cli
