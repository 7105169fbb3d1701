#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpbl/space.hpp"

namespace qpbl {

/// A self-map on a space's domain, optionally invertible. Values are
/// immutable; apply/apply_inverse are pure.
struct Mapping {
  std::string name;
  Domain domain;
  std::function<Point(const Point&)> forward;
  std::optional<std::function<Point(const Point&)>> inverse;

  /// Applies the map; throws PointOutsideDomain for arguments outside the
  /// domain and DomainEscape when the image leaves it (a non-finite image
  /// counts as escaping).
  Point apply(const Point& x) const;
  /// Applies the inverse; NoInverse when none is attached.
  Point apply_inverse(const Point& y) const;
  bool has_inverse() const noexcept { return inverse.has_value(); }
};

/// Optional parameters for catalog constructors (q for the power space,
/// upper for interval truncation, n_max for the odd/infinity table size).
using CatalogParams = std::map<std::string, double>;

struct CatalogEntry {
  std::string id;
  enum class Kind { space, mapping } kind;
  std::string summary;
  std::string params_help;
};

/// All built-in identifiers, spaces first.
std::vector<CatalogEntry> catalog_entries();

/// Constructs a built-in space. Throws UnknownId / BadParams.
Space make_space(const std::string& id, const CatalogParams& params = {});

/// Constructs a built-in mapping. Throws UnknownId / BadParams.
Mapping make_mapping(const std::string& id, const CatalogParams& params = {});

/// Power-of-metric construction: dist(x,y) = base(x,y)^q with q > 1,
/// hosted on the given interval; claimed coefficient 2^(q-1). The catalog's
/// ex2.5 entry uses |x - y| on [0,1]; other base metrics go through here.
Space power_of_metric(std::string name, IntervalDomain dom,
                      std::function<double(double, double)> base, double q);

/// Sample points where forward(x) leaves the mapping's domain.
std::vector<Point> mapping_domain_violations(const Mapping& m, const SamplePlan& plan);

/// Monotone-increasing 1-D root bracketing: returns x in [lo, hi] with
/// f(x) = target to absolute tolerance tol on x. Requires f(lo) <= target
/// <= f(hi).
double bisect_increasing(const std::function<double(double)>& f, double lo, double hi,
                         double target, double tol);

}  // namespace qpbl
