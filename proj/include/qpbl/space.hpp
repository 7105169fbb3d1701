#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "qpbl/errors.hpp"
#include "qpbl/rational.hpp"

namespace qpbl {

/// A point is either a real coordinate (interval domains) or a label
/// (finite domains). Labels compare lexicographically, reals numerically;
/// reals order before labels so mixed witness tuples still sort stably.
class Point {
public:
  Point() : v_(0.0) {}  // default: the real origin

  static Point real(double x) { return Point(x); }
  static Point label(std::string s) { return Point(std::move(s)); }

  bool is_real() const noexcept { return std::holds_alternative<double>(v_); }
  double as_real() const { return std::get<double>(v_); }
  const std::string& as_label() const { return std::get<std::string>(v_); }

  std::string to_string() const;

  friend bool operator==(const Point& a, const Point& b) { return a.v_ == b.v_; }
  friend bool operator<(const Point& a, const Point& b) { return a.v_ < b.v_; }

private:
  explicit Point(double x) : v_(x) {}
  explicit Point(std::string s) : v_(std::move(s)) {}
  std::variant<double, std::string> v_;
};

struct FiniteDomain {
  std::vector<std::string> labels;

  bool contains(const std::string& label) const {
    return index_of(label).has_value();
  }
  std::optional<std::size_t> index_of(const std::string& label) const;
};

struct IntervalDomain {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  /// Sampling truncation used when upper is +inf. Desk-scale stand-in for
  /// an unbounded domain; every sampled statement is reported as evidence.
  double sampling_upper = 10.0;

  bool unbounded() const noexcept { return !std::isfinite(upper); }
  double effective_upper() const noexcept { return unbounded() ? sampling_upper : upper; }
  bool contains(double x) const noexcept { return x >= lower && x <= upper; }
};

using Domain = std::variant<FiniteDomain, IntervalDomain>;

bool domain_contains(const Domain& d, const Point& p);

/// Deterministic sampling policy: a uniform grid including both finite
/// endpoints plus seeded uniform draws. Equal plans generate equal sample
/// sets; the random stream is generated explicitly (not through
/// distribution objects) so results match across standard libraries.
struct SamplePlan {
  int grid_points_per_axis = 101;
  int random_points = 1000;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;

  std::vector<double> interval_grid(const IntervalDomain& dom) const;
  std::vector<double> interval_randoms(const IntervalDomain& dom) const;
  /// Grid followed by randoms. Extending the plan (finer grid with the
  /// same endpoints, or more random points at the same seed) only appends
  /// or refines; it never drops previously generated samples.
  std::vector<double> interval_samples(const IntervalDomain& dom) const;

  void validate() const;
};

enum class AxiomId {
  QPbl1,
  QPbl2,
  QPbl3,
  QPbl4,
  symmetric,
  bl1,
  bl2,
  bl3,
  QPb1,
};

std::string axiom_name(AxiomId id);

/// Verdict for a single axiom over the evaluated point set.
///
/// worst_violation is the signed maximum of (LHS - RHS) across the swept
/// inequality instances, so negative values report slack. Identity-style
/// axioms (QPbl1, bl1, QPb1) have no violation magnitude; they report 1.0
/// with a witness when a violating tuple exists and 0.0 otherwise, keeping
/// the invariant passed <=> worst_violation <= tolerance.
///
/// The witness is the first violating tuple in sweep order (domain order
/// on finite spaces), which makes it the lexicographically smallest
/// counterexample; triangle-type witnesses are reported in path order
/// (x, z, y).
struct AxiomReport {
  AxiomId axiom;
  bool passed = true;
  double worst_violation = 0.0;
  std::vector<Point> witness;  // empty when passed
  bool sampled_evidence_only = false;
  double tolerance = 1e-9;
};

/// An asymmetric nonnegative distance on a finite or interval domain,
/// with a claimed relaxation coefficient s >= 1. Values are immutable
/// after construction and safe to share across threads.
///
/// Finite spaces carry an exact rational evaluator whenever every entry
/// fits a 64-bit ratio; axiom checks and the minimal coefficient then run
/// in exact arithmetic. Small finite spaces additionally store the full
/// table (the JSON file format round-trips through it).
class Space {
public:
  using DistFn = std::function<double(const Point&, const Point&)>;
  using RealFn = std::function<double(double, double)>;
  using ExactFn = std::function<Rational(std::size_t, std::size_t)>;

  static Space finite_table(std::string name, std::vector<std::string> labels,
                            std::vector<std::vector<Rational>> matrix, Rational s);
  /// Finite domain whose distances come from a closed form; the table is
  /// materialized only up to `table_limit` points (large truncations stay lazy).
  static Space finite_formula(std::string name, std::vector<std::string> labels,
                              ExactFn exact, Rational s, std::size_t table_limit = 256);
  static Space interval(std::string name, IntervalDomain dom, RealFn dist, double s);

  const std::string& name() const noexcept { return name_; }
  const Domain& domain() const noexcept { return domain_; }
  double coefficient() const noexcept { return s_; }
  const std::optional<Rational>& coefficient_exact() const noexcept { return s_exact_; }

  bool is_finite() const noexcept { return std::holds_alternative<FiniteDomain>(domain_); }
  const FiniteDomain& finite() const { return std::get<FiniteDomain>(domain_); }
  const IntervalDomain& interval_domain() const { return std::get<IntervalDomain>(domain_); }

  bool contains(const Point& p) const { return domain_contains(domain_, p); }

  /// Distance evaluation; pure, deterministic, throws PointOutsideDomain.
  double eval(const Point& x, const Point& y) const;

  /// Unchecked fast path for interval domains (no Point boxing, no domain
  /// test); sweeps go through this.
  double real_at(double x, double y) const { return real_fn_(x, y); }
  bool has_real_fn() const noexcept { return static_cast<bool>(real_fn_); }

  // Finite fast paths (indices into finite().labels).
  std::size_t size() const { return finite().labels.size(); }
  std::size_t index_of(const Point& p) const;
  double at(std::size_t i, std::size_t j) const;
  bool has_exact() const noexcept { return static_cast<bool>(exact_); }
  Rational exact_at(std::size_t i, std::size_t j) const { return exact_(i, j); }
  Point point_at(std::size_t i) const { return Point::label(finite().labels[i]); }

  const std::optional<std::vector<std::vector<Rational>>>& table() const noexcept {
    return table_;
  }

  /// The derived symmetric distance D(x,y) = dist(x,y) + dist(y,x) on the
  /// same domain with the same coefficient. Exactness is preserved.
  Space symmetrized(std::string name) const;

private:
  Space() = default;

  std::string name_;
  Domain domain_;
  DistFn dist_;
  RealFn real_fn_;  // interval domains only
  ExactFn exact_;   // finite domains only; may be empty
  std::optional<std::vector<std::vector<Rational>>> table_;
  double s_ = 1.0;
  std::optional<Rational> s_exact_;
};

}  // namespace qpbl
