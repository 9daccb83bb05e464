#include "treeot/interval.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "treeot/error.hpp"

namespace treeot {

Interval::Interval() {
  mpfr_init2(lo_, kPrecision);
  mpfr_init2(hi_, kPrecision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& value) : Interval() {
  mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(long value) : Interval(Rational(value)) {}

Interval::Interval(const Interval& other) : Interval() {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval() {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(Interval other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::pi() {
  Interval out;
  mpfr_const_pi(out.lo_, MPFR_RNDD);
  mpfr_const_pi(out.hi_, MPFR_RNDU);
  return out;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval out;
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out;
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval out;
  mpfr_t t;
  mpfr_init2(t, Interval::kPrecision);
  bool first = true;
  for (auto x : {a.lo_, a.hi_}) {
    for (auto y : {b.lo_, b.hi_}) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, out.lo_)) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, out.hi_)) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return out;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) {
    throw Error(ErrorCode::InvalidParams, "interval division by an interval containing 0");
  }
  Interval inv;
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw Error(ErrorCode::InvalidParams, "square root of a negative interval");
  Interval out;
  mpfr_sqrt(out.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(out.hi_, hi_, MPFR_RNDU);
  return out;
}

Interval Interval::pow(unsigned long exponent) const {
  Interval result(1L);
  Interval base = *this;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool Interval::contains(const Rational& value) const {
  return mpfr_cmp_q(lo_, value.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, value.get_mpq_t()) >= 0;
}

bool Interval::lower_than(const Rational& value) const { return mpfr_cmp_q(hi_, value.get_mpq_t()) < 0; }

bool Interval::greater_than(const Rational& value) const { return mpfr_cmp_q(lo_, value.get_mpq_t()) > 0; }

double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::midpoint() const {
  mpfr_t m;
  mpfr_init2(m, kPrecision + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  const double out = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return out;
}

std::string Interval::to_string(int digits) const {
  mpfr_t m;
  mpfr_init2(m, kPrecision + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  const int size = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, m);
  std::vector<char> buffer(static_cast<std::size_t>(size) + 1);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Rg", digits, m);
  mpfr_clear(m);
  return std::string(buffer.data());
}

double Interval::relative_width() const {
  mpfr_t width, mid;
  mpfr_init2(width, kPrecision);
  mpfr_init2(mid, kPrecision);
  mpfr_sub(width, hi_, lo_, MPFR_RNDU);
  mpfr_add(mid, hi_, lo_, MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  mpfr_abs(mid, mid, MPFR_RNDN);
  if (!mpfr_zero_p(mid)) mpfr_div(width, width, mid, MPFR_RNDU);
  const double out = mpfr_get_d(width, MPFR_RNDU);
  mpfr_clear(width);
  mpfr_clear(mid);
  return out;
}

}  // namespace treeot
