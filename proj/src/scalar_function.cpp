#include "qpbl/scalar_function.hpp"

#include <cmath>

#include "qpbl/errors.hpp"

namespace qpbl {

namespace {

constexpr int kGridPoints = 1000;

void spot_verify(const ScalarFunction& f, double grid_max) {
  const auto& d = f.declared;
  if (d.zero_iff_zero && f.fn(0.0) != 0.0)
    throw BadParams(f.name + ": declared zero-iff-zero but fn(0) != 0");

  double prev_v = f.fn(0.0);
  for (int i = 0; i <= kGridPoints; ++i) {
    const double t = grid_max * static_cast<double>(i) / kGridPoints;
    const double v = f.fn(t);
    if (!(v >= 0.0)) throw BadParams(f.name + ": negative value at t = " + std::to_string(t));
    if (d.monotone_nondecreasing && i > 0 && v + 1e-12 < prev_v)
      throw BadParams(f.name + ": declared monotone but decreases near t = " +
                      std::to_string(t));
    if (d.zero_iff_zero && t > 0.0 && v == 0.0)
      throw BadParams(f.name + ": declared zero-iff-zero but vanishes at t = " +
                      std::to_string(t));
    if (d.linear && i > 0) {
      // phi(a t) = a phi(t) against a reference point
      const double ref = f.fn(1.0);
      if (std::abs(v - t * ref) > 1e-9 * (1.0 + std::abs(v)))
        throw BadParams(f.name + ": declared linear but phi(t) != t phi(1) at t = " +
                        std::to_string(t));
    }
    if (d.subadditive && i > 0) {
      const double half = f.fn(t / 2.0);
      if (v > 2.0 * half + 1e-9)
        throw BadParams(f.name + ": declared subadditive but fails at t = " +
                        std::to_string(t));
    }
    prev_v = v;
  }
}

}  // namespace

ScalarFunction make_scalar_function(std::string name, std::function<double(double)> fn,
                                    ScalarProperties declared,
                                    std::function<Rational(const Rational&)> exact,
                                    double grid_max) {
  ScalarFunction f;
  f.name = std::move(name);
  f.fn = std::move(fn);
  f.declared = declared;
  f.exact = std::move(exact);
  spot_verify(f, grid_max);
  return f;
}

ScalarFunction linear_scalar(double c) {
  if (!(c >= 0.0)) throw BadParams("linear scalar needs a nonnegative slope");
  const auto cr = Rational::from_double(c);
  ScalarProperties props;
  props.continuous = true;
  props.monotone_nondecreasing = true;
  props.linear = true;
  props.zero_iff_zero = c > 0.0;
  props.subadditive = true;
  std::function<Rational(const Rational&)> exact;
  if (cr) exact = [cv = *cr](const Rational& t) { return cv * t; };
  return make_scalar_function("linear:" + std::to_string(c),
                              [c](double t) { return c * t; }, props, exact);
}

ScalarFunction linear_scalar(const Rational& c) {
  if (c.is_negative()) throw BadParams("linear scalar needs a nonnegative slope");
  ScalarProperties props;
  props.continuous = true;
  props.monotone_nondecreasing = true;
  props.linear = true;
  props.zero_iff_zero = !c.is_zero();
  props.subadditive = true;
  return make_scalar_function(
      "linear:" + c.to_string(), [cd = c.to_double()](double t) { return cd * t; }, props,
      [cv = c](const Rational& t) { return cv * t; });
}

ScalarFunction quadratic_capped_scalar() {
  ScalarProperties props;
  props.continuous = true;
  props.monotone_nondecreasing = true;
  props.zero_iff_zero = true;
  return make_scalar_function(
      "quad-capped", [](double t) { return t <= 1.0 ? t * t / 4.0 : 0.25; }, props,
      [](const Rational& t) {
        return t <= Rational(1) ? t * t / Rational(4) : Rational(1, 4);
      });
}

ScalarFunction parse_scalar(const std::string& text) {
  if (text == "quad-capped") return quadratic_capped_scalar();
  if (text.rfind("linear:", 0) == 0) {
    const std::string arg = text.substr(7);
    const auto r = Rational::parse(arg);
    if (r) return linear_scalar(*r);
    try {
      return linear_scalar(std::stod(arg));
    } catch (const std::exception&) {
      throw BadParams("cannot parse scalar slope: " + arg);
    }
  }
  throw BadParams("unknown scalar function '" + text + "' (use linear:<c> or quad-capped)");
}

}  // namespace qpbl
