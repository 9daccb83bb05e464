#pragma once

#include <mpfr.h>

#include <string>

#include "treeot/rational.hpp"

namespace treeot {

/// Closed interval [lo, hi] with MPFR endpoints rounded outward, so every
/// operation encloses the exact real result.
class Interval {
 public:
  static constexpr mpfr_prec_t kPrecision = 256;

  Interval();
  explicit Interval(const Rational& value);
  explicit Interval(long value);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(Interval other) noexcept;
  ~Interval();

  static Interval pi();

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Errors: InvalidParams when b contains 0.
  friend Interval operator/(const Interval& a, const Interval& b);

  /// Errors: InvalidParams when the interval reaches below 0.
  Interval sqrt() const;
  Interval pow(unsigned long exponent) const;

  bool contains(const Rational& value) const;
  bool lower_than(const Rational& value) const;   // hi < value
  bool greater_than(const Rational& value) const; // lo > value
  double lower() const;
  double upper() const;
  double midpoint() const;
  /// Midpoint rendered with `digits` significant digits.
  std::string to_string(int digits = 50) const;
  /// Relative width (hi - lo) / |mid| as a double, for reporting.
  double relative_width() const;

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace treeot
