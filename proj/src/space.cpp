#include "qpbl/space.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <unordered_set>

namespace qpbl {

std::string Point::to_string() const {
  if (is_real()) {
    std::ostringstream os;
    os.precision(17);
    os << as_real();
    return os.str();
  }
  return as_label();
}

std::optional<std::size_t> FiniteDomain::index_of(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

bool domain_contains(const Domain& d, const Point& p) {
  if (const auto* fd = std::get_if<FiniteDomain>(&d))
    return !p.is_real() && fd->contains(p.as_label());
  const auto& iv = std::get<IntervalDomain>(d);
  return p.is_real() && iv.contains(p.as_real());
}

void SamplePlan::validate() const {
  if (grid_points_per_axis < 2) throw BadParams("grid_points_per_axis must be >= 2");
  if (random_points < 0) throw BadParams("random_points must be >= 0");
  if (!(tolerance > 0)) throw BadParams("tolerance must be positive");
}

std::vector<double> SamplePlan::interval_grid(const IntervalDomain& dom) const {
  validate();
  const double lo = dom.lower;
  const double hi = dom.effective_upper();
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(grid_points_per_axis));
  const int g = grid_points_per_axis;
  for (int i = 0; i < g; ++i)
    pts.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(g - 1));
  pts.front() = lo;
  pts.back() = hi;
  return pts;
}

std::vector<double> SamplePlan::interval_randoms(const IntervalDomain& dom) const {
  validate();
  const double lo = dom.lower;
  const double hi = dom.effective_upper();
  std::mt19937_64 rng(seed);
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(random_points));
  for (int i = 0; i < random_points; ++i) {
    // 53 uniform bits -> [0,1); bypasses the implementation-defined
    // std::uniform_real_distribution for cross-library determinism.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    pts.push_back(lo + (hi - lo) * u);
  }
  return pts;
}

std::vector<double> SamplePlan::interval_samples(const IntervalDomain& dom) const {
  std::vector<double> pts = interval_grid(dom);
  const std::vector<double> rnd = interval_randoms(dom);
  pts.insert(pts.end(), rnd.begin(), rnd.end());
  return pts;
}

std::string axiom_name(AxiomId id) {
  switch (id) {
    case AxiomId::QPbl1: return "QPbl1";
    case AxiomId::QPbl2: return "QPbl2";
    case AxiomId::QPbl3: return "QPbl3";
    case AxiomId::QPbl4: return "QPbl4";
    case AxiomId::symmetric: return "symmetric";
    case AxiomId::bl1: return "bl1";
    case AxiomId::bl2: return "bl2";
    case AxiomId::bl3: return "bl3";
    case AxiomId::QPb1: return "QPb1";
  }
  return "unknown";
}

namespace {

void check_labels_unique(const std::vector<std::string>& labels) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw FileFormatError("duplicate point label: " + l);
}

void check_coefficient(double s) {
  if (!(s >= 1.0)) throw InvalidCoefficient("coefficient s must be >= 1");
}

}  // namespace

Space Space::finite_table(std::string name, std::vector<std::string> labels,
                          std::vector<std::vector<Rational>> matrix, Rational s) {
  check_labels_unique(labels);
  if (s < Rational(1)) throw InvalidCoefficient("coefficient s must be >= 1");
  const std::size_t n = labels.size();
  if (matrix.size() != n) throw FileFormatError("matrix must be square (rows)");
  for (const auto& row : matrix) {
    if (row.size() != n) throw FileFormatError("matrix must be square (columns)");
    for (const auto& v : row)
      if (v.is_negative()) throw FileFormatError("distances must be nonnegative");
  }

  Space sp;
  sp.name_ = std::move(name);
  sp.domain_ = FiniteDomain{std::move(labels)};
  auto tbl = std::make_shared<std::vector<std::vector<Rational>>>(std::move(matrix));
  sp.table_ = *tbl;
  sp.exact_ = [tbl](std::size_t i, std::size_t j) { return (*tbl)[i][j]; };
  const auto& fd = std::get<FiniteDomain>(sp.domain_);
  auto labels_ptr = std::make_shared<std::vector<std::string>>(fd.labels);
  sp.dist_ = [tbl, labels_ptr](const Point& x, const Point& y) {
    const auto find = [&](const Point& p) -> std::size_t {
      if (p.is_real()) throw PointOutsideDomain("expected a label on a finite domain");
      const auto it = std::find(labels_ptr->begin(), labels_ptr->end(), p.as_label());
      if (it == labels_ptr->end())
        throw PointOutsideDomain("label not in domain: " + p.as_label());
      return static_cast<std::size_t>(it - labels_ptr->begin());
    };
    return (*tbl)[find(x)][find(y)].to_double();
  };
  sp.s_ = s.to_double();
  sp.s_exact_ = s;
  return sp;
}

Space Space::finite_formula(std::string name, std::vector<std::string> labels,
                            ExactFn exact, Rational s, std::size_t table_limit) {
  check_labels_unique(labels);
  if (s < Rational(1)) throw InvalidCoefficient("coefficient s must be >= 1");
  const std::size_t n = labels.size();
  if (n <= table_limit) {
    std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) matrix[i][j] = exact(i, j);
    return finite_table(std::move(name), std::move(labels), std::move(matrix), s);
  }

  Space sp;
  sp.name_ = std::move(name);
  sp.domain_ = FiniteDomain{std::move(labels)};
  sp.exact_ = exact;
  auto labels_ptr =
      std::make_shared<std::vector<std::string>>(std::get<FiniteDomain>(sp.domain_).labels);
  auto index_ptr = std::make_shared<std::unordered_map<std::string, std::size_t>>();
  for (std::size_t i = 0; i < labels_ptr->size(); ++i) (*index_ptr)[(*labels_ptr)[i]] = i;
  sp.dist_ = [exact, index_ptr](const Point& x, const Point& y) {
    const auto find = [&](const Point& p) -> std::size_t {
      if (p.is_real()) throw PointOutsideDomain("expected a label on a finite domain");
      const auto it = index_ptr->find(p.as_label());
      if (it == index_ptr->end())
        throw PointOutsideDomain("label not in domain: " + p.as_label());
      return it->second;
    };
    return exact(find(x), find(y)).to_double();
  };
  sp.s_ = s.to_double();
  sp.s_exact_ = s;
  return sp;
}

Space Space::interval(std::string name, IntervalDomain dom, RealFn dist, double s) {
  check_coefficient(s);
  if (!(dom.lower < dom.effective_upper()))
    throw BadParams("interval domain must have lower < upper");
  Space sp;
  sp.name_ = std::move(name);
  sp.domain_ = dom;
  sp.real_fn_ = std::move(dist);
  auto f = sp.real_fn_;
  sp.dist_ = [f](const Point& x, const Point& y) {
    if (!x.is_real() || !y.is_real())
      throw PointOutsideDomain("expected real coordinates on an interval domain");
    return f(x.as_real(), y.as_real());
  };
  sp.s_ = s;
  sp.s_exact_ = Rational::from_double(s);
  return sp;
}

double Space::eval(const Point& x, const Point& y) const {
  if (!contains(x)) throw PointOutsideDomain("first point outside domain: " + x.to_string());
  if (!contains(y)) throw PointOutsideDomain("second point outside domain: " + y.to_string());
  return dist_(x, y);
}

std::size_t Space::index_of(const Point& p) const {
  if (p.is_real()) throw PointOutsideDomain("expected a label on a finite domain");
  const auto idx = finite().index_of(p.as_label());
  if (!idx) throw PointOutsideDomain("label not in domain: " + p.as_label());
  return *idx;
}

double Space::at(std::size_t i, std::size_t j) const {
  if (exact_) return exact_(i, j).to_double();
  return dist_(point_at(i), point_at(j));
}

Space Space::symmetrized(std::string name) const {
  Space sp;
  sp.name_ = std::move(name);
  sp.domain_ = domain_;
  sp.s_ = s_;
  sp.s_exact_ = s_exact_;
  if (exact_) {
    auto e = exact_;
    sp.exact_ = [e](std::size_t i, std::size_t j) { return e(i, j) + e(j, i); };
  }
  if (real_fn_) {
    auto f = real_fn_;
    sp.real_fn_ = [f](double x, double y) { return f(x, y) + f(y, x); };
  }
  auto base = dist_;
  sp.dist_ = [base](const Point& x, const Point& y) { return base(x, y) + base(y, x); };
  if (table_ && sp.exact_) {
    const std::size_t n = table_->size();
    std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) matrix[i][j] = sp.exact_(i, j);
    sp.table_ = std::move(matrix);
  }
  return sp;
}

}  // namespace qpbl
