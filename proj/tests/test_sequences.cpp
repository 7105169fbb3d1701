#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qpbl/axioms.hpp"
#include "qpbl/catalog.hpp"
#include "qpbl/sequences.hpp"

using namespace qpbl;

namespace {
Point lbl(const char* s) { return Point::label(s); }
Point re(double v) { return Point::real(v); }
}  // namespace

TEST_CASE("sequence builtins generate what their names say") {
  const SequenceSpec c = const_seq(lbl("1"), 50);
  CHECK(c.at(1).as_label() == "1");
  CHECK(c.at(50).as_label() == "1");
  CHECK_THROWS_AS(c.at(0), IndexError);
  CHECK_THROWS_AS(c.at(51), IndexError);

  const SequenceSpec r = recip_seq(100);
  CHECK(r.at(1).as_real() == 1.0);
  CHECK(r.at(4).as_real() == 0.25);

  const SequenceSpec a = alt_seq(re(0.0), re(1.0), 10);
  CHECK(a.at(1).as_real() == 0.0);
  CHECK(a.at(2).as_real() == 1.0);
  CHECK(a.at(3).as_real() == 0.0);
}

TEST_CASE("limits are not unique: the constant sequence reaches both 1 and 2") {
  const Space r1 = make_space("remark1");
  const SequenceSpec seq = const_seq(lbl("1"), 100);
  CHECK(limit_profile(r1, seq, lbl("1"), 1e-12).converged);
  CHECK(limit_profile(r1, seq, lbl("2"), 1e-12).converged);
  // but not to 0: dist(1,0) = 1 while dist(0,0) = 0
  CHECK(!limit_profile(r1, seq, lbl("0"), 1e-12).converged);
}

TEST_CASE("reciprocal sequence converges to 0 in the squared-sum space") {
  const Space sp = make_space("ex2.2");
  const LimitProfile prof = limit_profile(sp, recip_seq(10000), re(0.0), 1e-3);
  CHECK(prof.converged);
  CHECK(prof.self_distance == 0.0);
  CHECK(prof.forward_tail == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("limit_profile enforces its horizon precondition") {
  const Space sp = make_space("ex2.2");
  CHECK_THROWS_AS(limit_profile(sp, recip_seq(5), re(0.0), 1e-3), BadParams);
}

TEST_CASE("cauchy profiles separate zero-limits from positive ones") {
  const Space r1 = make_space("remark1");
  const CauchyProfile const1 = cauchy_profile(r1, const_seq(lbl("1"), 200), 1e-9);
  CHECK(const1.is_cauchy);
  CHECK(!const1.is_zero_cauchy);
  CHECK(const1.qpbl_forward_limit == 1.0);
  CHECK(const1.qpbl_backward_limit == 1.0);

  const CauchyProfile const0 = cauchy_profile(r1, const_seq(lbl("0"), 200), 1e-9);
  CHECK(const0.is_zero_cauchy);

  const Space sp = make_space("ex2.2");
  const CauchyProfile rec = cauchy_profile(sp, recip_seq(10000), 1e-3);
  CHECK(rec.is_cauchy);
  CHECK(rec.is_zero_cauchy);
}

TEST_CASE("zero-cauchy orbits land on zero-self-distance limits") {
  const Space sp = make_space("ex2.2");
  const SequenceSpec seq = recip_seq(10000);
  const CauchyProfile prof = cauchy_profile(sp, seq, 1e-3);
  REQUIRE(prof.is_zero_cauchy);
  const LimitProfile lim = limit_profile(sp, seq, re(0.0), 1e-3);
  REQUIRE(lim.converged);
  CHECK(lim.self_distance <= 1e-3);
}

TEST_CASE("cauchy equivalence between the space and its symmetrization") {
  const Space sp = make_space("ex2.2");
  const CauchyEquivalenceReport rec = cauchy_equivalence_check(sp, recip_seq(2000), 1e-3);
  CHECK(rec.agree);
  CHECK(rec.in_space.is_cauchy);
  CHECK(rec.in_bml.is_cauchy);

  const Space r1 = make_space("remark1");
  CHECK(cauchy_equivalence_check(r1, const_seq(lbl("1"), 200), 1e-9).agree);

  const Space ex24 = make_space("ex2.4");
  const CauchyEquivalenceReport alt =
      cauchy_equivalence_check(ex24, alt_seq(re(0.0), re(1.0), 2000), 1e-6);
  CHECK(alt.agree);
  CHECK(!alt.in_space.is_cauchy);
  CHECK(!alt.in_bml.is_cauchy);
}

TEST_CASE("equivalence battery across the catalog") {
  const int horizon = 1000;
  const double tol = 1e-6;
  for (const auto& entry : catalog_entries()) {
    if (entry.kind != CatalogEntry::Kind::space) continue;
    CAPTURE(entry.id);
    const Space sp = make_space(entry.id);
    std::vector<SequenceSpec> battery;
    if (sp.is_finite()) {
      const auto& l = sp.finite().labels;
      const auto p = [&](std::size_t i) { return Point::label(l[i % l.size()]); };
      battery = {const_seq(p(0), horizon),       const_seq(p(1), horizon),
                 const_seq(p(2), horizon),       alt_seq(p(0), p(1), horizon),
                 alt_seq(p(1), p(2), horizon),   alt_seq(p(0), p(2), horizon)};
    } else {
      const auto& dom = sp.interval_domain();
      const double lo = dom.lower;
      const double hi = dom.effective_upper();
      const double mid = lo + (hi - lo) / 2.0;
      battery = {const_seq(re(lo), horizon),      const_seq(re(mid), horizon),
                 const_seq(re(hi), horizon),      recip_seq(horizon),
                 alt_seq(re(lo), re(mid), horizon), alt_seq(re(mid), re(hi), horizon)};
    }
    for (const auto& seq : battery) {
      CAPTURE(seq.name);
      CHECK(cauchy_equivalence_check(sp, seq, tol).agree);
    }
  }
}

TEST_CASE("two-sided tail bound at y") {
  const Space sp = make_space("ex2.2");  // s = 2
  const SequenceSpec seq = recip_seq(10000);
  const LimitSandwichReport rep =
      limit_sandwich_check(sp, seq, re(0.0), re(0.5), 1e-6);
  CHECK(rep.tail_limit == doctest::Approx(0.25).epsilon(1e-3));
  CHECK(rep.lower_bound == doctest::Approx(0.125));
  CHECK(rep.upper_bound == doctest::Approx(0.5));
  CHECK(rep.bound_holds);
  CHECK(rep.unique_limit);

  // y = x: zero tail against zero bounds
  const LimitSandwichReport self =
      limit_sandwich_check(sp, seq, re(0.0), re(0.0), 1e-6);
  CHECK(self.tail_limit <= 1e-6);
  CHECK(self.lower_bound == 0.0);
  CHECK(self.upper_bound == 0.0);
  CHECK(self.bound_holds);

  // s = 1 variant: |1/n - 1| + 1/n -> 1 = dist(0,1), bounds collapse
  const Space ex24 = make_space("ex2.4");
  const LimitSandwichReport unit =
      limit_sandwich_check(ex24, recip_seq(10000), re(0.0), re(1.0), 1e-3);
  CHECK(unit.tail_limit == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(unit.lower_bound == doctest::Approx(1.0));
  CHECK(unit.upper_bound == doctest::Approx(1.0));
  CHECK(unit.bound_holds);
}

TEST_CASE("sandwich requires the vanishing-tail hypothesis") {
  const Space r1 = make_space("remark1");
  CHECK_THROWS_AS(
      limit_sandwich_check(r1, const_seq(lbl("1"), 100), lbl("1"), lbl("2"), 1e-9),
      HypothesisNotMet);
}

TEST_CASE("constant sequences converge to their own point everywhere") {
  for (const auto& entry : catalog_entries()) {
    if (entry.kind != CatalogEntry::Kind::space) continue;
    CAPTURE(entry.id);
    const Space sp = make_space(entry.id);
    std::vector<Point> pts;
    if (sp.is_finite()) {
      for (const auto& l : sp.finite().labels) pts.push_back(Point::label(l));
    } else {
      const auto& dom = sp.interval_domain();
      pts = {re(dom.lower), re(dom.lower + (dom.effective_upper() - dom.lower) / 3.0)};
    }
    for (const auto& p : pts)
      CHECK(limit_profile(sp, const_seq(p, 50), p, 1e-12).converged);
  }
}
