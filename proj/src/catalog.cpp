#include "qpbl/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace qpbl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double get_param(const CatalogParams& params, const std::string& key, double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void reject_unknown_params(const CatalogParams& params,
                           std::initializer_list<const char*> known) {
  for (const auto& [key, value] : params) {
    (void)value;
    if (std::none_of(known.begin(), known.end(),
                     [&](const char* k) { return key == k; }))
      throw BadParams("unknown parameter '" + key + "'");
  }
}

// --- spaces ---------------------------------------------------------------

Space make_ex22(const CatalogParams& params) {
  reject_unknown_params(params, {"upper", "unbounded"});
  const double upper = get_param(params, "upper", 1.0);
  if (!(upper > 0)) throw BadParams("upper must be positive");
  // unbounded=1 hosts the same distance on [0, inf) sampled up to upper;
  // the expansive worked example needs the whole half-line for its images.
  const bool unbounded = get_param(params, "unbounded", 0.0) != 0.0;
  const IntervalDomain dom =
      unbounded ? IntervalDomain{0.0, kInf, upper} : IntervalDomain{0.0, upper, upper};
  return Space::interval(
      "ex2.2", dom,
      [](double x, double y) { return x == y ? 0.0 : (x + y) * (x + y); }, 2.0);
}

Space make_ex23(const CatalogParams& params) {
  reject_unknown_params(params, {"upper"});
  const double upper = get_param(params, "upper", 10.0);
  if (!(upper > 0)) throw BadParams("upper must be positive");
  return Space::interval(
      "ex2.3", IntervalDomain{0.0, kInf, upper},
      [](double x, double y) { return std::max(x, y) + std::abs(x - y); }, 1.0);
}

Space make_ex24(const CatalogParams& params) {
  reject_unknown_params(params, {});
  return Space::interval(
      "ex2.4", IntervalDomain{0.0, 1.0, 1.0},
      [](double x, double y) { return std::abs(x - y) + x; }, 1.0);
}

Space make_ex25(const CatalogParams& params) {
  reject_unknown_params(params, {"q"});
  const double q = get_param(params, "q", 2.0);
  return power_of_metric("ex2.5", IntervalDomain{0.0, 1.0, 1.0},
                         [](double x, double y) { return std::abs(x - y); }, q);
}

Space make_sec2_counterexample(const CatalogParams& params) {
  reject_unknown_params(params, {});
  const Rational h(1, 2);
  return Space::finite_table("sec2-counterexample", {"0", "1", "2"},
                             {{0, 1, 1}, {2, h, h}, {3, 3, h}}, Rational(1));
}

Space make_remark1(const CatalogParams& params) {
  reject_unknown_params(params, {});
  return Space::finite_table("remark1", {"0", "1", "2"},
                             {{0, 1, 1}, {1, 1, 1}, {1, 1, 1}}, Rational(1));
}

Space make_ex39(const CatalogParams& params) {
  reject_unknown_params(params, {});
  return Space::interval(
      "ex3.9", IntervalDomain{0.0, 1.0, 1.0},
      [](double x, double y) { return std::max(x, y) + std::abs(x - y); }, 1.0);
}

Space make_ex310(const CatalogParams& params) {
  reject_unknown_params(params, {});
  return Space::interval(
      "ex3.10", IntervalDomain{0.0, 1.0, 1.0},
      [](double x, double y) { return x == y ? 0.0 : (x + y) * (x + y); }, 2.0);
}

// Naturals-with-infinity space. Labels "1".."n_max" plus "inf"; the last
// index is the infinity point. Distances are exact rationals:
//   0 when both infinite, |1/x - 1/y| when both odd, 1/x from odd x to
//   infinity, 1/(2y) from infinity to odd y, and 1 otherwise.
Space make_ex314(const CatalogParams& params) {
  reject_unknown_params(params, {"n_max"});
  const double n_param = get_param(params, "n_max", 25.0);
  if (!(n_param >= 2) || n_param != std::floor(n_param) || n_param > 5e7)
    throw BadParams("n_max must be an integer >= 2 (and desk-scale)");
  const auto n_max = static_cast<std::int64_t>(n_param);

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t v = 1; v <= n_max; ++v) labels.push_back(std::to_string(v));
  labels.push_back("inf");
  const auto inf_index = static_cast<std::size_t>(n_max);

  auto exact = [inf_index](std::size_t i, std::size_t j) -> Rational {
    const bool xi = i == inf_index;
    const bool yi = j == inf_index;
    const auto x = static_cast<std::int64_t>(i) + 1;
    const auto y = static_cast<std::int64_t>(j) + 1;
    if (xi && yi) return Rational(0);
    if (!xi && !yi && x % 2 == 1 && y % 2 == 1) {
      Rational d = Rational(1, x) - Rational(1, y);
      return d.is_negative() ? -d : d;
    }
    if (!xi && yi && x % 2 == 1) return Rational(1, x);
    if (xi && !yi && y % 2 == 1) return Rational(1, 2 * y);
    return Rational(1);
  };
  return Space::finite_formula("ex3.14", std::move(labels), exact, Rational(2));
}

Space make_ex510(const CatalogParams& params) {
  reject_unknown_params(params, {});
  return Space::finite_table("ex5.10", {"0", "1", "2"},
                             {{0, 2, 6}, {2, 1, 5}, {5, 8, 2}}, Rational(8, 7));
}

// --- mappings --------------------------------------------------------------

Point interval_image(double v, const IntervalDomain& dom, const std::string& who) {
  if (!std::isfinite(v) || !dom.contains(v))
    throw DomainEscape(who + ": image leaves the domain");
  return Point::real(v);
}

Mapping make_scaling_map(std::string name, double factor, IntervalDomain dom) {
  Mapping m;
  m.name = std::move(name);
  m.domain = dom;
  const std::string who = m.name;
  m.forward = [factor, dom, who](const Point& x) {
    return interval_image(factor * x.as_real(), dom, who);
  };
  return m;
}

Mapping make_map_ex510(const CatalogParams& params) {
  reject_unknown_params(params, {});
  Mapping m;
  m.name = "map-ex5.10";
  m.domain = FiniteDomain{{"0", "1", "2"}};
  m.forward = [](const Point& x) {
    const std::string& l = x.as_label();
    if (l == "0" || l == "1") return Point::label("0");
    if (l == "2") return Point::label("1");
    throw PointOutsideDomain("map-ex5.10 is defined on {0,1,2}");
  };
  return m;
}

// Tx = 3x sqrt(1 + x^2): a strictly increasing bijection of [0, inf).
// Hosted unbounded with sampling truncated to [0, upper]; the inverse is
// bracketed bisection on [0, y/3] (T(x) >= 3x pins the root below y/3).
Mapping make_map_expansive(const CatalogParams& params) {
  reject_unknown_params(params, {"upper"});
  const double upper = get_param(params, "upper", 10.0);
  if (!(upper > 0)) throw BadParams("upper must be positive");
  Mapping m;
  m.name = "map-expansive";
  m.domain = IntervalDomain{0.0, kInf, upper};
  const auto t = [](double x) { return 3.0 * x * std::sqrt(1.0 + x * x); };
  const IntervalDomain dom = std::get<IntervalDomain>(m.domain);
  m.forward = [t, dom](const Point& x) {
    return interval_image(t(x.as_real()), dom, "map-expansive");
  };
  m.inverse = [t, dom](const Point& y) {
    const double yv = y.as_real();
    if (yv == 0.0) return Point::real(0.0);
    const double x = bisect_increasing(t, 0.0, yv / 3.0, yv, 1e-12);
    return interval_image(x, dom, "map-expansive inverse");
  };
  return m;
}

}  // namespace

Point Mapping::apply(const Point& x) const {
  if (!domain_contains(domain, x))
    throw PointOutsideDomain(name + ": argument outside domain: " + x.to_string());
  const Point y = forward(x);
  if (!domain_contains(domain, y))
    throw DomainEscape(name + ": image leaves the domain: " + y.to_string());
  return y;
}

Point Mapping::apply_inverse(const Point& y) const {
  if (!inverse) throw NoInverse(name + " has no inverse evaluator");
  if (!domain_contains(domain, y))
    throw PointOutsideDomain(name + ": argument outside domain: " + y.to_string());
  return (*inverse)(y);
}

Space power_of_metric(std::string name, IntervalDomain dom,
                      std::function<double(double, double)> base, double q) {
  if (!(q > 1.0)) throw BadParams("power exponent q must exceed 1");
  return Space::interval(
      std::move(name), dom,
      [base, q](double x, double y) { return std::pow(base(x, y), q); },
      std::pow(2.0, q - 1.0));
}

double bisect_increasing(const std::function<double(double)>& f, double lo, double hi,
                         double target, double tol) {
  if (!(lo <= hi)) throw BadParams("bisection bracket is empty");
  double flo = f(lo);
  double fhi = f(hi);
  // widen the bracket if the caller's guess undershoots
  int widen = 0;
  while (fhi < target && widen++ < 128) {
    hi = hi == 0.0 ? 1.0 : hi * 2.0;
    fhi = f(hi);
  }
  if (flo > target || fhi < target)
    throw BadParams("bisection target not bracketed by a monotone function");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at float resolution
    if (f(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<Point> mapping_domain_violations(const Mapping& m, const SamplePlan& plan) {
  std::vector<Point> bad;
  const auto probe = [&](const Point& p) {
    try {
      m.apply(p);
    } catch (const DomainEscape&) {
      bad.push_back(p);
    }
  };
  if (const auto* fd = std::get_if<FiniteDomain>(&m.domain)) {
    for (const auto& l : fd->labels) probe(Point::label(l));
  } else {
    for (double v : plan.interval_samples(std::get<IntervalDomain>(m.domain)))
      probe(Point::real(v));
  }
  return bad;
}

std::vector<CatalogEntry> catalog_entries() {
  using Kind = CatalogEntry::Kind;
  return {
      {"ex2.2", Kind::space,
       "squared-sum distance on [0,upper]: 0 on the diagonal, (x+y)^2 off it; s = 2",
       "upper (default 1), unbounded (0/1)"},
      {"ex2.3", Kind::space,
       "max{x,y} + |x-y| on [0,inf), sampled on [0,upper]; s = 1", "upper (default 10)"},
      {"ex2.4", Kind::space, "|x-y| + x on [0,1]; asymmetric with positive self-distance; s = 1",
       ""},
      {"ex2.5", Kind::space, "q-th power of the base metric |x-y| on [0,1]; s = 2^(q-1)",
       "q (> 1, default 2)"},
      {"sec2-counterexample", Kind::space,
       "3-point table that satisfies QPbl1-QPbl4 at s = 1 but fails QPb1", ""},
      {"remark1", Kind::space,
       "3-point table whose ball topology is {{}, {0}, X}; limits are non-unique", ""},
      {"ex3.9", Kind::space, "max{x,y} + |x-y| restricted to [0,1]; B(0;1) = [0,1/2)", ""},
      {"ex3.10", Kind::space, "squared-sum distance on [0,1]; B(0;1/2) = [0,1/sqrt(2))", ""},
      {"ex3.14", Kind::space,
       "naturals 1..n_max plus an infinity point; reciprocal distances between odds; s = 2",
       "n_max (default 25)"},
      {"ex5.10", Kind::space, "3-point table with minimal coefficient exactly 8/7", ""},
      {"map-half", Kind::mapping, "T x = x/2 on [0,1]", ""},
      {"map-quarter", Kind::mapping, "T x = x/4 on [0,1]", ""},
      {"map-ex5.10", Kind::mapping, "T: 0 -> 0, 1 -> 0, 2 -> 1 on the 3-point tables", ""},
      {"map-expansive", Kind::mapping,
       "T x = 3x sqrt(1+x^2) on [0,inf), invertible by bisection to 1e-12",
       "upper (default 10)"},
  };
}

Space make_space(const std::string& id, const CatalogParams& params) {
  if (id == "ex2.2") return make_ex22(params);
  if (id == "ex2.3") return make_ex23(params);
  if (id == "ex2.4") return make_ex24(params);
  if (id == "ex2.5") return make_ex25(params);
  if (id == "sec2-counterexample") return make_sec2_counterexample(params);
  if (id == "remark1") return make_remark1(params);
  if (id == "ex3.9") return make_ex39(params);
  if (id == "ex3.10") return make_ex310(params);
  if (id == "ex3.14") return make_ex314(params);
  if (id == "ex5.10") return make_ex510(params);
  throw UnknownId("unknown space id: " + id);
}

Mapping make_mapping(const std::string& id, const CatalogParams& params) {
  if (id == "map-half") {
    reject_unknown_params(params, {});
    return make_scaling_map("map-half", 0.5, IntervalDomain{0.0, 1.0, 1.0});
  }
  if (id == "map-quarter") {
    reject_unknown_params(params, {});
    return make_scaling_map("map-quarter", 0.25, IntervalDomain{0.0, 1.0, 1.0});
  }
  if (id == "map-ex5.10") return make_map_ex510(params);
  if (id == "map-expansive") return make_map_expansive(params);
  throw UnknownId("unknown mapping id: " + id);
}

}  // namespace qpbl
