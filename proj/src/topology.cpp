#include "qpbl/topology.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qpbl {

namespace {

constexpr int kLeastIndexCap = 1000000;

std::vector<Point> evaluation_points(const Space& space, const SamplePlan& plan) {
  std::vector<Point> pts;
  if (space.is_finite()) {
    for (const auto& l : space.finite().labels) pts.push_back(Point::label(l));
  } else {
    for (double v : plan.interval_samples(space.interval_domain()))
      pts.push_back(Point::real(v));
  }
  return pts;
}

}  // namespace

Ball ball(const Space& space, const Point& x0, double eps) {
  if (!space.contains(x0))
    throw PointOutsideDomain("ball center outside domain: " + x0.to_string());
  if (!(eps > 0)) throw NonpositiveRadius("ball radius must be positive");

  Ball b;
  b.center = x0;
  b.radius = eps;

  if (space.is_finite() && space.has_exact()) {
    const std::size_t c = space.index_of(x0);
    const auto eps_r = Rational::from_double(eps);
    if (eps_r) {
      const Rational bound = space.exact_at(c, c) + *eps_r;
      const Space sp = space;  // shared immutable internals
      b.membership = [sp, c, bound](const Point& y) {
        if (!sp.contains(y)) throw PointOutsideDomain("ball query outside domain");
        const std::size_t j = sp.index_of(y);
        return sp.exact_at(c, j) < bound && sp.exact_at(j, c) < bound;
      };
      std::vector<std::string> members;
      for (std::size_t j = 0; j < space.size(); ++j)
        if (space.exact_at(c, j) < bound && space.exact_at(j, c) < bound)
          members.push_back(space.finite().labels[j]);
      b.explicit_set = std::move(members);
      return b;
    }
  }

  const Space sp = space;
  const double self = sp.eval(x0, x0);
  const double bound = self + eps;
  b.membership = [sp, x0, bound](const Point& y) {
    return sp.eval(x0, y) < bound && sp.eval(y, x0) < bound;
  };
  if (space.is_finite()) {
    std::vector<std::string> members;
    for (const auto& l : space.finite().labels)
      if (b.membership(Point::label(l))) members.push_back(l);
    b.explicit_set = std::move(members);
  }
  return b;
}

namespace {

// Least n >= 1 with quantity > threshold(n), where threshold(n) shrinks
// geometrically; 0 signals an empty index set (quantity <= 0).
int least_index(double quantity, const std::function<double(int)>& threshold) {
  if (!(quantity > 0)) return 0;
  for (int n = 1; n <= kLeastIndexCap; ++n)
    if (quantity > threshold(n)) return n;
  throw ContainmentUnverified("least-index search exceeded the iteration cap");
}

}  // namespace

double inner_delta(const Space& space, const Point& x, double eps, const Point& y,
                   const SamplePlan& plan) {
  const Ball outer = ball(space, x, eps);
  if (!outer.membership(y))
    throw NotInBall("inner_delta: y is not a member of ball(x, eps)");

  double delta;
  if (y == x) {
    delta = eps;
  } else {
    const double s = space.coefficient();
    const double dxx = space.eval(x, x);
    const double dxy = space.eval(x, y);
    const double dyx = space.eval(y, x);
    const double dyy = space.eval(y, y);
    const bool equal_case = dxx == dxy && dxy == dyy;

    if (equal_case) {
      if (s == 1.0) {
        delta = eps;
      } else {
        const int m = least_index(
            dxx, [&](int n) { return eps / (2.0 * std::pow(s, n + 1) * (2.0 * s - 1.0)); });
        delta = m == 0 ? eps / (2.0 * s) : eps / (2.0 * std::pow(s, m + 1));
      }
    } else if (s == 1.0) {
      const double q = dxy + dyx - dxx;
      const int p = least_index(q, [&](int n) { return eps / std::pow(2.0, n + 2); });
      delta = p == 0 ? eps / 2.0 : eps / std::pow(2.0, p + 1);
    } else {
      const double q = dxy + dyx - dxx / s;
      const int r =
          least_index(q, [&](int n) { return eps / (2.0 * std::pow(s, n + 2)); });
      delta = r == 0 ? eps / (2.0 * s) : eps / (2.0 * std::pow(s, r + 1));
    }
  }
  if (!(delta > 0)) throw ContainmentUnverified("inner_delta produced a nonpositive radius");

  // The case formulas assume the least index is at least 2; for points
  // near the rim (index 1) the bound over-covers, so keep walking the same
  // geometric ladder until the containment sweep verifies. Fail loudly
  // rather than hand back an unverified radius.
  const std::vector<Point> eval_set = evaluation_points(space, plan);
  const auto contained = [&](double d) {
    const Ball inner = ball(space, y, d);
    for (const Point& z : eval_set)
      if (inner.membership(z) && !outer.membership(z)) return false;
    return true;
  };
  for (int step = 0; step < 64; ++step) {
    if (contained(delta)) return delta;
    delta /= 2.0;
  }
  throw ContainmentUnverified("inner_delta: no ladder radius yields verified containment");
}

std::vector<std::vector<std::string>> FiniteTopology::open_sets() const {
  std::vector<std::uint64_t> masks(open_masks.begin(), open_masks.end());
  std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    const int ca = std::popcount(a);
    const int cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<std::vector<std::string>> sets;
  sets.reserve(masks.size());
  for (const std::uint64_t m : masks) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < ground.size(); ++i)
      if (m & (std::uint64_t{1} << i)) labels.push_back(ground[i]);
    sets.push_back(std::move(labels));
  }
  return sets;
}

bool FiniteTopology::is_topology() const {
  if (!contains_mask(0) || !contains_mask(full_mask())) return false;
  for (const std::uint64_t a : open_masks)
    for (const std::uint64_t b : open_masks) {
      if (!contains_mask(a | b)) return false;
      if (!contains_mask(a & b)) return false;
    }
  return true;
}

FiniteTopology enumerate_topology(const Space& space) {
  if (!space.is_finite())
    throw InfiniteDomain("topology enumeration requires a finite domain");
  const std::size_t n = space.size();
  if (n > 64) throw BadParams("topology enumeration supports up to 64 points");

  FiniteTopology top;
  top.ground = space.finite().labels;

  const bool exact = space.has_exact();
  for (std::size_t c = 0; c < n; ++c) {
    if (exact) {
      std::vector<Rational> t(n);
      for (std::size_t j = 0; j < n; ++j)
        t[j] = std::max(space.exact_at(c, j), space.exact_at(j, c)) - space.exact_at(c, c);
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t mask = 0;
        for (std::size_t k = 0; k < n; ++k)
          if (t[k] <= t[j]) mask |= std::uint64_t{1} << k;
        top.open_masks.insert(mask);
      }
    } else {
      std::vector<double> t(n);
      for (std::size_t j = 0; j < n; ++j)
        t[j] = std::max(space.at(c, j), space.at(j, c)) - space.at(c, c);
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t mask = 0;
        for (std::size_t k = 0; k < n; ++k)
          if (t[k] <= t[j]) mask |= std::uint64_t{1} << k;
        top.open_masks.insert(mask);
      }
    }
  }

  // Intersection closure reduces to the basis criterion: every point of a
  // pairwise ball intersection must sit inside a ball within it. Checking
  // it on the (at most n^2) balls is exhaustive and stays cheap even when
  // the union closure below is exponentially larger.
  const std::vector<std::uint64_t> basis(top.open_masks.begin(), top.open_masks.end());
  for (const std::uint64_t a : basis)
    for (const std::uint64_t b : basis) {
      const std::uint64_t inter = a & b;
      std::uint64_t covered = 0;
      for (const std::uint64_t c : basis)
        if ((c & ~inter) == 0) covered |= c;
      if ((inter & ~covered) != 0)
        throw Error("topology_not_closed",
                    "ball family does not generate a topology on " + space.name());
    }

  // Close the basis under union (worklist; each new set is combined with
  // everything already present); the empty set joins unconditionally.
  top.open_masks.insert(0);
  std::vector<std::uint64_t> queue(top.open_masks.begin(), top.open_masks.end());
  while (!queue.empty()) {
    const std::uint64_t m = queue.back();
    queue.pop_back();
    const std::vector<std::uint64_t> current(top.open_masks.begin(), top.open_masks.end());
    for (const std::uint64_t o : current) {
      const std::uint64_t u = m | o;
      if (top.open_masks.insert(u).second) queue.push_back(u);
    }
  }
  return top;
}

std::string separation_name(SeparationClass cls) {
  switch (cls) {
    case SeparationClass::not_T0: return "not-T0";
    case SeparationClass::T0_only: return "T0-only";
    case SeparationClass::T1_only: return "T1-only";
    case SeparationClass::T2: return "T2";
  }
  return "unknown";
}

SeparationReport separation_class(const FiniteTopology& top) {
  const std::size_t n = top.ground.size();
  const auto bit = [](std::size_t i) { return std::uint64_t{1} << i; };

  const auto pair_t0 = [&](std::size_t i, std::size_t j) {
    for (const std::uint64_t u : top.open_masks) {
      const bool has_i = u & bit(i);
      const bool has_j = u & bit(j);
      if (has_i != has_j) return true;
    }
    return false;
  };
  const auto separates = [&](std::size_t i, std::size_t j) {
    for (const std::uint64_t u : top.open_masks)
      if ((u & bit(i)) && !(u & bit(j))) return true;
    return false;
  };
  const auto pair_t2 = [&](std::size_t i, std::size_t j) {
    for (const std::uint64_t u : top.open_masks) {
      if (!(u & bit(i))) continue;
      for (const std::uint64_t v : top.open_masks)
        if ((v & bit(j)) && (u & v) == 0) return true;
    }
    return false;
  };

  std::optional<std::pair<std::string, std::string>> t0_w, t1_w, t2_w;
  for (std::size_t i = 0; i < n && !t0_w; ++i)
    for (std::size_t j = i + 1; j < n && !t0_w; ++j)
      if (!pair_t0(i, j)) t0_w = {top.ground[i], top.ground[j]};
  for (std::size_t i = 0; i < n && !t1_w; ++i)
    for (std::size_t j = i + 1; j < n && !t1_w; ++j)
      if (!separates(i, j) || !separates(j, i)) t1_w = {top.ground[i], top.ground[j]};
  for (std::size_t i = 0; i < n && !t2_w; ++i)
    for (std::size_t j = i + 1; j < n && !t2_w; ++j)
      if (!pair_t2(i, j)) t2_w = {top.ground[i], top.ground[j]};

  if (t0_w) return {SeparationClass::not_T0, t0_w};
  if (t1_w) return {SeparationClass::T0_only, t1_w};
  if (t2_w) return {SeparationClass::T1_only, t2_w};
  return {SeparationClass::T2, std::nullopt};
}

DballSandwichReport dball_sandwich_check(const Space& space, const Point& x, double eps,
                                         const SamplePlan& plan) {
  if (!(eps > 0)) throw NonpositiveRadius("sandwich check requires a positive radius");
  if (!space.contains(x)) throw PointOutsideDomain("sandwich center outside domain");

  DballSandwichReport rep;
  rep.sampled_evidence_only = !space.is_finite();
  const double s = space.coefficient();
  const double dxx = space.eval(x, x);
  rep.delta = s * (eps + 2.0 * dxx);

  const Ball inner = ball(space, x, eps / 2.0);
  const Ball outer = ball(space, x, rep.delta);
  const double dself = 2.0 * dxx;  // D(x,x)

  const auto in_dball = [&](const Point& z) {
    const double d = space.eval(x, z) + space.eval(z, x);
    return std::abs(d - dself) < eps;
  };

  rep.lower_holds = true;
  rep.upper_holds = true;
  for (const Point& z : evaluation_points(space, plan)) {
    ++rep.points_checked;
    if (inner.membership(z) && !in_dball(z)) {
      rep.lower_holds = false;
      if (!rep.lower_counterexample) rep.lower_counterexample = z;
    }
    if (in_dball(z) && !outer.membership(z)) {
      rep.upper_holds = false;
      if (!rep.upper_counterexample) rep.upper_counterexample = z;
    }
  }
  return rep;
}

}  // namespace qpbl
