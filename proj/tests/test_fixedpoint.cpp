#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qpbl/fixedpoint.hpp"

using namespace qpbl;

namespace {
Point lbl(const char* s) { return Point::label(s); }
Point re(double v) { return Point::real(v); }

Mapping identity_map() {
  Mapping m;
  m.name = "identity";
  m.domain = IntervalDomain{0.0, 1.0, 1.0};
  m.forward = [](const Point& p) { return p; };
  return m;
}
}  // namespace

TEST_CASE("orbits enumerate iterates") {
  const SequenceSpec halves = orbit(make_mapping("map-half"), re(1.0), 3);
  CHECK(halves.horizon == 4);
  CHECK(halves.at(1).as_real() == 1.0);
  CHECK(halves.at(2).as_real() == 0.5);
  CHECK(halves.at(3).as_real() == 0.25);
  CHECK(halves.at(4).as_real() == 0.125);

  const SequenceSpec tbl = orbit(make_mapping("map-ex5.10"), lbl("2"), 2);
  CHECK(tbl.at(1).as_label() == "2");
  CHECK(tbl.at(2).as_label() == "1");
  CHECK(tbl.at(3).as_label() == "0");

  const SequenceSpec zeros = orbit(make_mapping("map-quarter"), re(0.0), 5);
  for (int i = 1; i <= 6; ++i) CHECK(zeros.at(i).as_real() == 0.0);

  CHECK_THROWS_AS(orbit(make_mapping("map-half"), re(1.0), 0), BadParams);
  CHECK_THROWS_AS(orbit(make_mapping("map-expansive"), re(1.0), 20), DomainEscape);
}

TEST_CASE("phi-contraction certifies the origin for the quarter map") {
  const Space sp = make_space("ex2.2");
  const Mapping map = make_mapping("map-quarter");
  // dist(Tx,Ty) = dist(x,y)/16 exactly, so phi(t) = t/16 is tight
  const FixedPointCertificate cert =
      phi_contraction_solve(sp, map, linear_scalar(Rational(1, 16)), re(1.0));
  CHECK(cert.iterations >= 1);
  CHECK(cert.residual_forward <= 1e-10);
  CHECK(cert.residual_backward <= 1e-10);
  CHECK(cert.self_distance <= 1e-10);
  CHECK(sp.eval(cert.point, re(0.0)) <= 1e-10);  // analytic fixed point 0
  CHECK(cert.unique_among_restarts);
  for (const auto& check : cert.hypothesis_report) CHECK(check.passed);
}

TEST_CASE("the linear corollary gives the same fixed point") {
  const Space sp = make_space("ex2.2");
  const FixedPointCertificate cert =
      lambda_contraction_solve(sp, make_mapping("map-quarter"), 1.0 / 16.0, re(1.0));
  CHECK(sp.eval(cert.point, re(0.0)) <= 1e-10);
  CHECK_THROWS_AS(
      lambda_contraction_solve(sp, make_mapping("map-quarter"), 0.75, re(1.0)),
      HypothesisFailed);  // 0.75 >= 1/s = 1/2
}

TEST_CASE("an already-fixed start certifies in zero iterations") {
  const FixedPointCertificate cert = phi_contraction_solve(
      make_space("ex2.2"), make_mapping("map-quarter"), linear_scalar(Rational(1, 16)),
      re(0.0));
  CHECK(cert.iterations == 0);
  CHECK(cert.point.as_real() == 0.0);
}

TEST_CASE("hypothesis failures name the failed check") {
  const Space sp = make_space("ex2.2");
  const Mapping map = make_mapping("map-quarter");
  try {
    phi_contraction_solve(sp, map, linear_scalar(Rational(1, 1)), re(1.0));
    FAIL("expected HypothesisFailed");
  } catch (const HypothesisFailed& e) {
    CHECK(e.check() == "phi-below-identity");
  }
  try {
    // contraction and phi(t) < t hold, but sum s^n (0.6)^n t diverges (s=2)
    phi_contraction_solve(sp, map, linear_scalar(0.6), re(1.0));
    FAIL("expected HypothesisFailed");
  } catch (const HypothesisFailed& e) {
    CHECK(e.check() == "series-convergence");
  }
}

TEST_CASE("iteration cap raises MaxIterExceeded") {
  SolveOptions opts;
  opts.max_iter = 2;
  CHECK_THROWS_AS(phi_contraction_solve(make_space("ex2.2"), make_mapping("map-quarter"),
                                        linear_scalar(Rational(1, 16)), re(1.0), opts),
                  MaxIterExceeded);
}

TEST_CASE("weight witness sums the displacement series to 3x^2") {
  const Space sp = make_space("ex2.2");
  const Mapping map = make_mapping("map-half");
  for (double x : {1.0, 0.5, 0.1}) {
    const WeightWitnessReport rep = weight_witness(sp, map, re(x), 200);
    CHECK(rep.series_value == doctest::Approx(3.0 * x * x).epsilon(1e-9));
    CHECK(rep.inequality_verified);
  }
  const WeightWitnessReport fixed = weight_witness(sp, map, re(0.0), 200);
  CHECK(fixed.series_value == 0.0);
  CHECK(fixed.phi_at_x0 == 0.0);
}

TEST_CASE("weight witness telescopes exactly up to truncation") {
  const Space sp = make_space("ex2.2");
  const Mapping map = make_mapping("map-half");
  const int n_terms = 200;
  const WeightWitnessReport rep = weight_witness(sp, map, re(1.0), n_terms);
  // oracle: partial sums vs phi(x0) - phi(x_{K+1})
  const SequenceSpec orb = orbit(map, re(1.0), 60);
  double partial = 0.0;
  for (int k = 0; k <= 20; ++k) {
    partial += sp.eval(orb.at(k + 1), orb.at(k + 2));
    const double diff = rep.phi_witness(re(1.0)) - rep.phi_witness(orb.at(k + 2));
    CHECK(partial == doctest::Approx(diff).epsilon(1e-9));
  }
  CHECK(rep.max_telescope_error <= 1e-9 * n_terms);
}

TEST_CASE("weight witness rejects non-summable displacement series") {
  // identity on ex2.4: qp(x, x) = x stays at 0.5 forever
  CHECK_THROWS_AS(weight_witness(make_space("ex2.4"), identity_map(), re(0.5), 50),
                  SeriesDiverging);
  // short runs must apply the ratio test too
  CHECK_THROWS_AS(weight_witness(make_space("ex2.4"), identity_map(), re(0.5), 20),
                  SeriesDiverging);
}

TEST_CASE("the nine (phi,psi) inequalities reproduce their exact values") {
  const auto rows = phi_psi_inequality_table(make_space("ex5.10"),
                                             make_mapping("map-ex5.10"),
                                             linear_scalar(Rational(1, 2)),
                                             quadratic_capped_scalar());
  REQUIRE(rows.size() == 9);
  const char* expected_rhs[] = {"0",     "5/8",   "19/8", "5/8", "3/16",
                                "31/16", "31/16", "13/4", "5/8"};
  const char* expected_lhs[] = {"0", "0", "1", "0", "0", "1", "1", "1", "1/2"};
  for (std::size_t i = 0; i < 9; ++i) {
    CAPTURE(i);
    REQUIRE(rows[i].rhs_exact.has_value());
    CHECK(rows[i].rhs_exact->to_string() == expected_rhs[i]);
    CHECK(rows[i].lhs_exact->to_string() == expected_lhs[i]);
    CHECK(rows[i].holds);
  }
}

TEST_CASE("phi-psi solver certifies 0 from x0=2 within three steps") {
  const FixedPointCertificate cert = phi_psi_solve(
      make_space("ex5.10"), make_mapping("map-ex5.10"), linear_scalar(Rational(1, 2)),
      quadratic_capped_scalar(), lbl("2"));
  CHECK(cert.point.as_label() == "0");
  CHECK(cert.iterations <= 3);
  CHECK(cert.residual_forward == 0.0);
  CHECK(cert.residual_backward == 0.0);
  CHECK(cert.self_distance == 0.0);
  CHECK(cert.unique_among_restarts);
}

TEST_CASE("displacements decrease monotonically along the certified orbit") {
  const Space sp = make_space("ex5.10");
  const Mapping map = make_mapping("map-ex5.10");
  const SequenceSpec orb = orbit(map, lbl("2"), 5);
  double prev = 1e300;
  for (int k = 1; k < 6; ++k) {
    const double d = sp.eval(orb.at(k), orb.at(k + 1));
    CHECK(d <= prev);
    prev = d;
  }
}

TEST_CASE("phi-psi solver enforces the declared properties") {
  const Space sp = make_space("ex5.10");
  const Mapping map = make_mapping("map-ex5.10");
  try {
    // linear_scalar(0) declares zero_iff_zero = false
    phi_psi_solve(sp, map, linear_scalar(Rational(1, 2)), linear_scalar(Rational(0)),
                  lbl("2"));
    FAIL("expected HypothesisFailed");
  } catch (const HypothesisFailed& e) {
    CHECK(e.check() == "psi-zero-iff-zero");
  }
  try {
    phi_psi_solve(sp, map, quadratic_capped_scalar(), quadratic_capped_scalar(), lbl("2"));
    FAIL("expected HypothesisFailed");
  } catch (const HypothesisFailed& e) {
    CHECK(e.check() == "phi-linear");
  }
}

TEST_CASE("expansion inequality at (1,2) with K = 9/2") {
  const Space sp = make_space("ex2.2", {{"upper", 10.0}, {"unbounded", 1.0}});
  const Mapping map = make_mapping("map-expansive");
  const Point t1 = map.apply(re(1.0));
  const Point t2 = map.apply(re(2.0));
  const double lhs = sp.eval(t1, t2);
  CHECK(lhs == doctest::Approx(std::pow(3.0 * std::sqrt(2.0) + 6.0 * std::sqrt(5.0), 2))
                   .epsilon(1e-12));
  const double rhs = 4.5 * (sp.eval(re(1.0), re(2.0)) + sp.eval(re(2.0), re(1.0)));
  CHECK(rhs == 81.0);
  CHECK(lhs >= rhs);
}

TEST_CASE("reverse iteration certifies the expansive fixed point") {
  const Space sp = make_space("ex2.2", {{"upper", 10.0}, {"unbounded", 1.0}});
  const Mapping map = make_mapping("map-expansive");
  SolveOptions opts;
  opts.plan.grid_points_per_axis = 50;
  opts.plan.random_points = 0;
  const FixedPointCertificate cert = expansive_solve_k(sp, map, 4.5, re(1.0), opts);
  CHECK(cert.residual_forward < 1e-8);
  CHECK(cert.residual_backward < 1e-8);
  CHECK(cert.map_evaluations < 200);
  CHECK(std::abs(cert.point.as_real()) < 1e-3);
  CHECK(cert.unique_among_restarts);

  const FixedPointCertificate at0 = expansive_solve_k(sp, map, 4.5, re(0.0), opts);
  CHECK(at0.iterations == 0);
  CHECK(at0.point.as_real() == 0.0);
}

TEST_CASE("expansive solving validates K, the inverse, and the a-parameters") {
  const Space sp = make_space("ex2.2", {{"upper", 10.0}, {"unbounded", 1.0}});
  const Mapping map = make_mapping("map-expansive");
  try {
    expansive_solve_k(sp, map, 3.0, re(1.0));  // 3 <= 2s = 4
    FAIL("expected HypothesisFailed");
  } catch (const HypothesisFailed& e) {
    CHECK(e.check() == "k-range");
  }
  CHECK_THROWS_AS(expansive_solve_k(make_space("ex2.2"), make_mapping("map-half"), 9.0,
                                    re(0.5)),
                  NoInverse);

  // parameter screens: positivity, the stated inequalities, derived lambda
  try {
    expansive_solve(sp, map, ExpansiveParams{1.0, 1.0, -1.0, 1.0}, re(1.0));
    FAIL("expected HypothesisFailed");
  } catch (const HypothesisFailed& e) {
    CHECK(e.check() == "parameter-positivity");
  }
  try {
    expansive_solve(sp, map, ExpansiveParams{0.4, 0.1, 0.1, 0.4}, re(1.0));
    FAIL("expected HypothesisFailed");
  } catch (const HypothesisFailed& e) {
    CHECK(e.check() == "parameter-inequalities");
  }
  // a-form with admissible parameters still fails the four-term inequality
  // on this space: at x = y it demands dist(Tx,Tx) >= positive image terms.
  try {
    expansive_solve(sp, map, ExpansiveParams{4.6, 0.01, 0.01, 0.01}, re(1.0));
    FAIL("expected HypothesisFailed");
  } catch (const HypothesisFailed& e) {
    CHECK(e.check() == "expansion-inequality");
  }
}

TEST_CASE("chain bounds hold along orbits") {
  const Space sp = make_space("ex2.2");
  const SequenceSpec orb = orbit(make_mapping("map-half"), re(1.0), 4);
  const ChainBoundReport rep = chain_bound(sp, orb, 0, 4);
  CHECK(rep.holds);
  // oracle: direct recomputation of the forward side
  double bound = 0.0;
  for (int k = 0; k < 4; ++k)
    bound += std::pow(2.0, k) * sp.eval(orb.at(k + 1), orb.at(k + 2));
  CHECK(rep.bound_forward == doctest::Approx(bound).epsilon(1e-14));
  CHECK(rep.actual_forward == sp.eval(orb.at(1), orb.at(5)));

  // single-step bound is s^n times the displacement
  const ChainBoundReport one = chain_bound(sp, orb, 2, 3);
  CHECK(one.bound_forward ==
        doctest::Approx(4.0 * sp.eval(orb.at(3), orb.at(4))).epsilon(1e-14));
  CHECK(one.holds);
}

TEST_CASE("chain bound on the 3-point table reproduces 6 <= 5 + (8/7) 2") {
  const Space sp = make_space("ex5.10");
  const SequenceSpec orb = orbit(make_mapping("map-ex5.10"), lbl("2"), 2);  // 2,1,0
  const ChainBoundReport rep = chain_bound(sp, orb, 0, 2);
  CHECK(rep.actual_backward == 6.0);  // dist(0, 2)
  CHECK(rep.bound_backward == doctest::Approx(5.0 + (8.0 / 7.0) * 2.0).epsilon(1e-14));
  CHECK(rep.holds);
}

TEST_CASE("chain bound index preconditions") {
  const Space sp = make_space("ex2.2");
  const SequenceSpec orb = orbit(make_mapping("map-half"), re(1.0), 4);
  CHECK_THROWS_AS(chain_bound(sp, orb, 3, 3), IndexError);
  CHECK_THROWS_AS(chain_bound(sp, orb, -1, 2), IndexError);
  CHECK_THROWS_AS(chain_bound(sp, orb, 0, 5), IndexError);
}

TEST_CASE("geometric decay bound for the quarter-map orbit") {
  const Space sp = make_space("ex2.2");  // s = 2
  const SequenceSpec orb = orbit(make_mapping("map-quarter"), re(1.0), 6);
  const DecayBoundReport rep = decay_bound(sp, orb, 0.125, 2, 6);
  CHECK(rep.premise_holds);
  CHECK(rep.bound == doctest::Approx(0.78125).epsilon(1e-14));  // (1/2)^2/(1/2) * 25/16
  CHECK(rep.actual <= rep.bound);
  CHECK(rep.holds);

  const SequenceSpec zeros = orbit(make_mapping("map-quarter"), re(0.0), 6);
  const DecayBoundReport trivial = decay_bound(sp, zeros, 0.125, 1, 5);
  CHECK(trivial.premise_holds);
  CHECK(trivial.actual == 0.0);
  CHECK(trivial.holds);

  CHECK_THROWS_AS(decay_bound(sp, orb, 0.3, 2, 6), LambdaOutOfRange);  // 0.3 >= 1/4
}

TEST_CASE("weight witness enforces its term-count precondition") {
  CHECK_THROWS_AS(
      weight_witness(make_space("ex2.2"), make_mapping("map-half"), re(1.0), 5),
      BadParams);
}

TEST_CASE("scalar declarations are spot-verified at construction") {
  ScalarProperties props;
  props.linear = true;
  CHECK_THROWS_AS(
      make_scalar_function("sq", [](double t) { return t * t; }, props),
      BadParams);
  props = ScalarProperties{};
  props.monotone_nondecreasing = true;
  CHECK_THROWS_AS(
      make_scalar_function("down", [](double t) { return 10.0 - t; }, props),
      BadParams);
  props = ScalarProperties{};
  props.zero_iff_zero = true;
  CHECK_THROWS_AS(
      make_scalar_function("offset", [](double t) { return t + 1.0; }, props),
      BadParams);
  CHECK_THROWS_AS(parse_scalar("mystery"), BadParams);
  CHECK(parse_scalar("linear:1/2").exact(Rational(3)).to_string() == "3/2");
}
