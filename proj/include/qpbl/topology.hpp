#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qpbl/axioms.hpp"
#include "qpbl/space.hpp"

namespace qpbl {

/// Open ball B(x0; eps) = { y : dist(x0,y) < dist(x0,x0) + eps and
/// dist(y,x0) < dist(x0,x0) + eps }. Both inequalities are strict and
/// compared exactly (rational on exact finite tables, raw doubles
/// otherwise); ball membership never applies a tolerance, so boundary
/// points are excluded by construction. The center always belongs.
struct Ball {
  Point center;
  double radius;
  std::function<bool(const Point&)> membership;
  std::optional<std::vector<std::string>> explicit_set;  // finite domains, domain order
};

Ball ball(const Space& space, const Point& x0, double eps);

/// Inner radius delta > 0 with ball(y, delta) contained in ball(x, eps),
/// computed by the constructive case split:
///   y = x                         -> delta = eps
///   dist(x,x) = dist(x,y) = dist(y,y):
///     s = 1                       -> delta = eps
///     s > 1                       -> delta = eps / (2 s^(m+1)), m least n >= 1
///                                    with dist(x,x) > eps / (2 s^(n+1) (2s-1))
///   otherwise:
///     s = 1                       -> delta = eps / 2^(p+1), p least n >= 1 with
///                                    dist(x,y)+dist(y,x)-dist(x,x) > eps / 2^(n+2)
///     s > 1                       -> delta = eps / (2 s^(r+1)), r least n >= 1 with
///                                    dist(x,y)+dist(y,x)-dist(x,x)/s > eps / (2 s^(n+2))
/// When the defining quantity is zero the index set is empty and delta
/// falls back to eps / (2s). The returned delta is then verified by a
/// containment sweep over the evaluation set (exhaustive on finite
/// domains, plan samples on intervals). The case formulas are only tight
/// when the least index is >= 2; near the rim of the outer ball they can
/// over-cover, in which case the same geometric ladder continues (delta
/// halves) until the sweep verifies. An unverifiable delta raises
/// ContainmentUnverified rather than being returned.
double inner_delta(const Space& space, const Point& x, double eps, const Point& y,
                   const SamplePlan& plan = {});

/// Finite topology as bitmasks over the ground set (bit i <-> ground[i]).
struct FiniteTopology {
  std::vector<std::string> ground;
  std::set<std::uint64_t> open_masks;

  bool contains_mask(std::uint64_t m) const { return open_masks.count(m) != 0; }
  std::uint64_t full_mask() const {
    return ground.size() == 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << ground.size()) - 1;
  }
  /// Open sets as label lists in domain order; sets ordered by size then mask.
  std::vector<std::vector<std::string>> open_sets() const;
  /// Exhaustive validation: contains {} and X, closed under pairwise
  /// union and intersection (which covers arbitrary unions on a finite set).
  bool is_topology() const;
};

/// Generates the ball topology of a finite space: for every center, the
/// ball family changes only at the thresholds
///   t(x0, y) = max(dist(x0,y), dist(y,x0)) - dist(x0,x0),
/// so one radius just above each distinct threshold (plus one beyond the
/// largest) yields every distinct ball; the basis is then closed under
/// union and the empty set is added. Thresholds are compared exactly on
/// rational tables. Throws InfiniteDomain on interval spaces; ground sets
/// beyond 64 points are rejected (desk scale).
FiniteTopology enumerate_topology(const Space& space);

enum class SeparationClass { not_T0, T0_only, T1_only, T2 };

std::string separation_name(SeparationClass cls);

struct SeparationReport {
  SeparationClass cls;
  /// Pair witnessing failure of the next-stronger axiom (absent for T2).
  std::optional<std::pair<std::string, std::string>> witness;
};

/// Exhaustive T0/T1/T2 check over all point pairs; returns the strongest
/// class every pair satisfies.
SeparationReport separation_class(const FiniteTopology& top);

/// Pointwise verification of the two inclusions
///   B(x; eps/2)  subset of  B_D(x; eps)  subset of  B(x; delta),
/// with D(x,y) = dist(x,y) + dist(y,x), B_D(x;eps) = { y : |D(x,y) -
/// D(x,x)| < eps } and delta = s (eps + 2 dist(x,x)); checked over the
/// evaluation set.
struct DballSandwichReport {
  bool lower_holds = false;
  bool upper_holds = false;
  double delta = 0.0;
  std::optional<Point> lower_counterexample;
  std::optional<Point> upper_counterexample;
  std::size_t points_checked = 0;
  bool sampled_evidence_only = false;

  bool holds() const { return lower_holds && upper_holds; }
};

DballSandwichReport dball_sandwich_check(const Space& space, const Point& x, double eps,
                                         const SamplePlan& plan = {});

}  // namespace qpbl
