#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "treeot/rational.hpp"

namespace treeot {

/// Truncated power series a_0 + a_1 y + ... + a_N y^N over the rationals.
/// Binary operations truncate to the smaller order of the two operands.
class Series1 {
 public:
  Series1() = default;
  explicit Series1(std::size_t order) : coeffs_(order + 1, Rational(0)) {}
  Series1(std::size_t order, std::initializer_list<Rational> leading);
  Series1(std::size_t order, std::vector<Rational> coeffs);

  static Series1 constant(std::size_t order, const Rational& c);
  /// The series y (zero when order == 0).
  static Series1 variable(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  /// Coefficient of y^n; 0 beyond the truncation order.
  Rational coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Rational(0); }
  Rational& operator[](std::size_t n) { return coeffs_.at(n); }
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  Series1& operator+=(const Series1& other);
  Series1& operator-=(const Series1& other);
  Series1& operator*=(const Rational& c);

  /// 1/a. Errors: NonUnitDivisor when a_0 == 0.
  Series1 inverse() const;
  /// Principal square root (positive constant term).
  /// Errors: NonSquareConstantTerm unless a_0 is the square of a positive rational.
  Series1 sqrt() const;
  Series1 derivative() const;
  /// a(c y).
  Series1 scale_argument(const Rational& c) const;
  /// Same series at a different truncation order (zero-padded when growing).
  Series1 truncated(std::size_t order) const;

  friend bool operator==(const Series1&, const Series1&) = default;

 private:
  std::vector<Rational> coeffs_;
};

Series1 operator+(Series1 a, const Series1& b);
Series1 operator-(Series1 a, const Series1& b);
Series1 operator-(const Series1& a);
Series1 operator*(const Series1& a, const Series1& b);
Series1 operator*(Series1 a, const Rational& c);
Series1 operator*(const Rational& c, Series1 a);
/// Errors: NonUnitDivisor.
Series1 operator/(const Series1& a, const Series1& b);

}  // namespace treeot
