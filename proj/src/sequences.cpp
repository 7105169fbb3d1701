#include "qpbl/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qpbl {

Point SequenceSpec::at(int index) const {
  if (index < 1 || index > horizon)
    throw IndexError("sequence index " + std::to_string(index) + " outside [1, " +
                     std::to_string(horizon) + "]");
  return generator(index);
}

SequenceSpec const_seq(Point p, int horizon) {
  SequenceSpec s;
  s.generator = [p](int) { return p; };
  s.horizon = horizon;
  s.name = "const:" + p.to_string();
  return s;
}

SequenceSpec recip_seq(int horizon) {
  SequenceSpec s;
  s.generator = [](int n) { return Point::real(1.0 / static_cast<double>(n)); };
  s.horizon = horizon;
  s.name = "recip";
  return s;
}

SequenceSpec alt_seq(Point p, Point q, int horizon) {
  SequenceSpec s;
  s.generator = [p, q](int n) { return n % 2 == 1 ? p : q; };
  s.horizon = horizon;
  s.name = "alt:" + p.to_string() + ":" + q.to_string();
  return s;
}

namespace {

int window_start(int horizon) { return horizon - std::max(1, horizon / 10) + 1; }

void require_horizon(const SequenceSpec& seq, int minimum) {
  if (seq.horizon < minimum)
    throw BadParams("sequence horizon must be at least " + std::to_string(minimum));
}

}  // namespace

LimitProfile limit_profile(const Space& space, const SequenceSpec& seq, const Point& x,
                           double tol) {
  require_horizon(seq, 10);
  if (!space.contains(x))
    throw PointOutsideDomain("limit target outside domain: " + x.to_string());

  LimitProfile prof;
  prof.target = x;
  prof.tol = tol;
  prof.self_distance = space.eval(x, x);

  const int start = window_start(seq.horizon);
  double worst = 0.0;
  for (int n = start; n <= seq.horizon; ++n) {
    const Point xn = seq.at(n);
    prof.forward_tail = space.eval(xn, x);
    prof.backward_tail = space.eval(x, xn);
    worst = std::max({worst, std::abs(prof.forward_tail - prof.self_distance),
                      std::abs(prof.backward_tail - prof.self_distance)});
  }
  prof.converged = worst <= tol;
  return prof;
}

CauchyProfile cauchy_profile(const Space& space, const SequenceSpec& seq, double tol) {
  require_horizon(seq, 10);

  CauchyProfile prof;
  const int start = window_start(seq.horizon);
  const int count = seq.horizon - start + 1;
  std::vector<Point> window;
  window.reserve(static_cast<std::size_t>(count));
  for (int n = start; n <= seq.horizon; ++n) window.push_back(seq.at(n));

  double fw_min = std::numeric_limits<double>::infinity(), fw_max = 0.0, fw_sum = 0.0;
  double bw_min = std::numeric_limits<double>::infinity(), bw_max = 0.0, bw_sum = 0.0;
  std::size_t pairs = 0;
  for (int i = 0; i < count; ++i)
    for (int j = i; j < count; ++j) {
      const double f = space.eval(window[static_cast<std::size_t>(i)],
                                  window[static_cast<std::size_t>(j)]);
      const double b = space.eval(window[static_cast<std::size_t>(j)],
                                  window[static_cast<std::size_t>(i)]);
      fw_min = std::min(fw_min, f);
      fw_max = std::max(fw_max, f);
      fw_sum += f;
      bw_min = std::min(bw_min, b);
      bw_max = std::max(bw_max, b);
      bw_sum += b;
      ++pairs;
    }

  prof.forward_spread = fw_max - fw_min;
  prof.backward_spread = bw_max - bw_min;
  prof.qpbl_forward_limit = fw_sum / static_cast<double>(pairs);
  prof.qpbl_backward_limit = bw_sum / static_cast<double>(pairs);
  prof.is_cauchy = prof.forward_spread <= tol && prof.backward_spread <= tol;
  prof.is_zero_cauchy = prof.is_cauchy && std::abs(prof.qpbl_forward_limit) <= tol &&
                        std::abs(prof.qpbl_backward_limit) <= tol;
  return prof;
}

CauchyEquivalenceReport cauchy_equivalence_check(const Space& space, const SequenceSpec& seq,
                                                 double tol) {
  CauchyEquivalenceReport rep;
  rep.in_space = cauchy_profile(space, seq, tol);
  // The symmetrized distance is taken directly; this check has no
  // precondition and must not reject unverified spaces.
  const Space bml = space.symmetrized(space.name() + "-D");
  rep.in_bml = cauchy_profile(bml, seq, tol);
  rep.agree = rep.in_space.is_cauchy == rep.in_bml.is_cauchy;
  return rep;
}

LimitSandwichReport limit_sandwich_check(const Space& space, const SequenceSpec& seq,
                                         const Point& x, const Point& y, double tol,
                                         const SamplePlan& plan) {
  require_horizon(seq, 10);
  if (!space.contains(x) || !space.contains(y))
    throw PointOutsideDomain("sandwich points must lie in the domain");

  const int start = window_start(seq.horizon);
  const auto vanishing_at = [&](const Point& p) {
    double worst = 0.0;
    for (int n = start; n <= seq.horizon; ++n) {
      const Point xn = seq.at(n);
      worst = std::max({worst, space.eval(xn, p), space.eval(p, xn)});
    }
    return worst <= tol;
  };

  if (!vanishing_at(x))
    throw HypothesisNotMet("limit_sandwich_check requires dist(x_n, x) and dist(x, x_n) "
                           "to vanish along the tail");

  LimitSandwichReport rep;
  rep.x = x;
  rep.y = y;

  double sum = 0.0;
  int count = 0;
  for (int n = start; n <= seq.horizon; ++n) {
    sum += space.eval(seq.at(n), y);
    ++count;
  }
  rep.tail_limit = sum / static_cast<double>(count);

  const double dxy = space.eval(x, y);
  const double s = space.coefficient();
  rep.lower_bound = dxy / s;
  rep.upper_bound = s * dxy;
  rep.bound_holds =
      rep.tail_limit >= rep.lower_bound - tol && rep.tail_limit <= rep.upper_bound + tol;

  // Uniqueness clause: no other evaluated point may share the vanishing
  // tails (on intervals the candidates are the plan's grid points).
  std::vector<Point> candidates;
  if (space.is_finite()) {
    for (const auto& l : space.finite().labels) candidates.push_back(Point::label(l));
  } else {
    for (double v : plan.interval_grid(space.interval_domain()))
      candidates.push_back(Point::real(v));
  }
  for (const Point& z : candidates) {
    if (z == x) continue;
    if (vanishing_at(z)) {
      rep.unique_limit = false;
      rep.competing_limits.push_back(z);
    }
  }
  return rep;
}

}  // namespace qpbl
