#include "treeot/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <vector>

#include "treeot/error.hpp"

namespace treeot {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    Integer n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    out = Rational(n, d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      bad(text);
    }
    Integer n(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    Integer d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    out = Rational(n, d);
  } else {
    if (!all_digits(body)) bad(text);
    out = Rational(Integer(std::string(body), 10));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& value) {
  Rational copy = value;
  copy.canonicalize();
  return copy.get_str();
}

std::string to_decimal(const Rational& value, int significant_digits) {
  if (value == 0) return "0";
  mpfr_t x;
  mpfr_init2(x, 256);
  mpfr_set_q(x, value.get_mpq_t(), MPFR_RNDN);
  std::vector<char> buffer(static_cast<std::size_t>(significant_digits) + 64);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Rg", significant_digits, x);
  mpfr_clear(x);
  return std::string(buffer.data());
}

Rational power(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorCode::InvalidParams, "zero raised to a negative power");
    Rational inv = 1 / base;
    return power(inv, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

double to_double(const Rational& value) { return value.get_d(); }

Rational ratio(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidParams, "zero denominator");
  Rational out{Integer(num), Integer(den)};
  out.canonicalize();
  return out;
}

}  // namespace treeot
