#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qpbl/space.hpp"

namespace qpbl {

/// A lazily generated sequence x_1, x_2, ..., x_horizon. Generators are
/// pure: the same index always yields the same point.
struct SequenceSpec {
  std::function<Point(int)> generator;  // 1-based index
  int horizon = 10000;
  std::string name;

  Point at(int index) const;  // IndexError outside [1, horizon]
};

SequenceSpec const_seq(Point p, int horizon);
SequenceSpec recip_seq(int horizon);  // x_n = 1/n on interval domains
SequenceSpec alt_seq(Point p, Point q, int horizon);

/// Directed-tail convergence profile against a candidate limit x:
/// x_n converges to x when both dist(x_n, x) and dist(x, x_n) settle at
/// dist(x, x). The tails are the final-index values; convergence demands
/// stability over the last horizon/10 indices within tol.
struct LimitProfile {
  Point target;
  double forward_tail = 0.0;   // dist(x_N, x)
  double backward_tail = 0.0;  // dist(x, x_N)
  double self_distance = 0.0;  // dist(x, x)
  bool converged = false;
  double tol = 0.0;
};

LimitProfile limit_profile(const Space& space, const SequenceSpec& seq, const Point& x,
                           double tol);

/// Finite surrogate for the double limits lim_{n,m} dist(x_n, x_m) and
/// lim_{n,m} dist(x_m, x_n): both are scanned over all index pairs
/// n <= m in the final horizon/10 window (forward reads later-from-earlier,
/// backward the reverse; the diagonal participates in both). A direction
/// counts as settled when its window spread (max - min) is within tol;
/// the reported limit is the window mean.
struct CauchyProfile {
  double qpbl_forward_limit = 0.0;
  double qpbl_backward_limit = 0.0;
  double forward_spread = 0.0;
  double backward_spread = 0.0;
  bool is_cauchy = false;
  bool is_zero_cauchy = false;
};

CauchyProfile cauchy_profile(const Space& space, const SequenceSpec& seq, double tol);

/// Runs cauchy_profile in the space and in its symmetrized companion
/// D(x,y) = dist(x,y) + dist(y,x); passes when the two verdicts agree.
struct CauchyEquivalenceReport {
  CauchyProfile in_space;
  CauchyProfile in_bml;
  bool agree = false;
};

CauchyEquivalenceReport cauchy_equivalence_check(const Space& space, const SequenceSpec& seq,
                                                 double tol);

/// Two-sided tail bound at y for a sequence with both directed distances
/// to x vanishing:  dist(x,y)/s <= lim dist(x_n, y) <= s dist(x,y).
/// Also confirms no second evaluated point shares the vanishing-distance
/// property (the limit-uniqueness clause). HypothesisNotMet when the
/// sequence does not exhibit the vanishing tails.
struct LimitSandwichReport {
  Point x;
  Point y;
  double tail_limit = 0.0;  // window mean of dist(x_n, y)
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  bool bound_holds = false;
  bool unique_limit = true;
  std::vector<Point> competing_limits;

  bool passed() const { return bound_holds && unique_limit; }
};

LimitSandwichReport limit_sandwich_check(const Space& space, const SequenceSpec& seq,
                                         const Point& x, const Point& y, double tol,
                                         const SamplePlan& plan = {});

}  // namespace qpbl
