#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "qpbl/errors.hpp"

namespace qpbl {

/// Exact rational with 64-bit numerator/denominator, normalized so that
/// den > 0 and gcd(num, den) = 1. All operations use 128-bit intermediates
/// and throw RationalOverflow instead of wrapping. This covers every table
/// that fits "ratios of 64-bit integers"; callers fall back to doubles
/// beyond that.
class Rational {
public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw RationalOverflow("rational with zero denominator");
    if (den < 0) {
      if (num == std::numeric_limits<std::int64_t>::min() ||
          den == std::numeric_limits<std::int64_t>::min())
        throw RationalOverflow("rational normalization overflow");
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  /// Exact value of a finite double (every finite double is m * 2^e).
  /// Returns nullopt when numerator or denominator would not fit in 64 bits.
  static std::optional<Rational> from_double(double x) {
    if (!std::isfinite(x)) return std::nullopt;
    if (x == 0.0) return Rational(0);
    int exp = 0;
    const double frac = std::frexp(x, &exp);  // x = frac * 2^exp, |frac| in [0.5, 1)
    const auto mant = static_cast<std::int64_t>(std::ldexp(frac, 53));
    exp -= 53;
    // value = mant * 2^exp
    if (exp >= 0) {
      if (exp > 62) return std::nullopt;
      const __int128 v = static_cast<__int128>(mant) << exp;
      if (v > std::numeric_limits<std::int64_t>::max() ||
          v < std::numeric_limits<std::int64_t>::min())
        return std::nullopt;
      return Rational(static_cast<std::int64_t>(v), 1);
    }
    if (-exp > 62) {
      // strip common factors of two first
      std::int64_t m = mant;
      int e = exp;
      while (e < 0 && m % 2 == 0) {
        m /= 2;
        ++e;
      }
      if (-e > 62) return std::nullopt;
      return Rational(m, std::int64_t{1} << -e);
    }
    return Rational(mant, std::int64_t{1} << -exp);
  }

  /// Parses "8/7", "-3/4", "5", or a decimal literal such as "0.25"
  /// (decimals are read as value/10^k, exactly).
  static std::optional<Rational> parse(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const auto slash = text.find('/');
    try {
      if (slash != std::string::npos) {
        std::size_t p1 = 0, p2 = 0;
        const std::int64_t n = std::stoll(text.substr(0, slash), &p1);
        const std::int64_t d = std::stoll(text.substr(slash + 1), &p2);
        if (p1 != slash || p2 != text.size() - slash - 1 || d == 0) return std::nullopt;
        return Rational(n, d);
      }
      const auto dot = text.find('.');
      if (dot == std::string::npos) {
        std::size_t p = 0;
        const std::int64_t n = std::stoll(text, &p);
        if (p != text.size()) return std::nullopt;
        return Rational(n);
      }
      const bool neg = text[0] == '-';
      const std::string ipart = text.substr(neg ? 1 : 0, dot - (neg ? 1 : 0));
      const std::string fpart = text.substr(dot + 1);
      if (fpart.empty() || fpart.size() > 18) return std::nullopt;
      for (char c : ipart)
        if (c < '0' || c > '9') return std::nullopt;
      for (char c : fpart)
        if (c < '0' || c > '9') return std::nullopt;
      std::int64_t den = 1;
      for (std::size_t i = 0; i < fpart.size(); ++i) den *= 10;
      const std::int64_t ival = ipart.empty() ? 0 : std::stoll(ipart);
      const std::int64_t fval = std::stoll(fpart);
      Rational r = Rational(ival) + Rational(fval, den);
      return neg ? -r : r;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_negative() const noexcept { return num_ < 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    const __int128 d = i128(a.den_) * b.den_;
    return make_checked(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    const __int128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
    const __int128 d = i128(a.den_) * b.den_;
    return make_checked(n, d);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make_checked(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw RationalOverflow("rational division by zero");
    return make_checked(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const __int128 lhs = i128(a.num_) * b.den_;
    const __int128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  static constexpr __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

  static Rational make_checked(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g != 0) {
      n /= g;
      d /= g;
    }
    if (n > std::numeric_limits<std::int64_t>::max() ||
        n < std::numeric_limits<std::int64_t>::min() ||
        d > std::numeric_limits<std::int64_t>::max() || d <= 0)
      throw RationalOverflow("rational arithmetic overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace qpbl
