#include "treeot/series.hpp"

#include <algorithm>

#include "treeot/error.hpp"

namespace treeot {

Series1::Series1(std::size_t order, std::initializer_list<Rational> leading) : coeffs_(order + 1, Rational(0)) {
  std::size_t n = 0;
  for (const auto& c : leading) {
    if (n > order) break;
    coeffs_[n++] = c;
  }
}

Series1::Series1(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1, Rational(0));
}

Series1 Series1::constant(std::size_t order, const Rational& c) { return Series1(order, {c}); }

Series1 Series1::variable(std::size_t order) { return Series1(order, {Rational(0), Rational(1)}); }

Series1& Series1::operator+=(const Series1& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

Series1& Series1::operator-=(const Series1& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

Series1& Series1::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Series1 operator+(Series1 a, const Series1& b) { return a += b; }
Series1 operator-(Series1 a, const Series1& b) { return a -= b; }
Series1 operator-(const Series1& a) { return a * Rational(-1); }
Series1 operator*(Series1 a, const Rational& c) { return a *= c; }
Series1 operator*(const Rational& c, Series1 a) { return a *= c; }

Series1 operator*(const Series1& a, const Series1& b) {
  const std::size_t order = std::min(a.order(), b.order());
  Series1 out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Series1 Series1::inverse() const {
  if (coeffs_.empty() || coeffs_[0] == 0) throw Error(ErrorCode::NonUnitDivisor, "constant term is zero");
  const std::size_t N = order();
  Series1 out(N);
  const Rational inv0 = 1 / coeffs_[0];
  out[0] = inv0;
  for (std::size_t n = 1; n <= N; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (coeffs_[k] != 0) acc += coeffs_[k] * out[n - k];
    }
    out[n] = -acc * inv0;
  }
  return out;
}

Series1 operator/(const Series1& a, const Series1& b) {
  const std::size_t order = std::min(a.order(), b.order());
  if (b.coeffs().empty() || b[0] == 0) throw Error(ErrorCode::NonUnitDivisor, "divisor has zero constant term");
  // Long division: b * out = a.
  Series1 out(order);
  const Rational inv0 = 1 / b[0];
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc = a[n];
    for (std::size_t k = 1; k <= n; ++k) {
      if (b[k] != 0) acc -= b[k] * out[n - k];
    }
    out[n] = acc * inv0;
  }
  return out;
}

Series1 Series1::sqrt() const {
  if (coeffs_.empty() || sign(coeffs_[0]) <= 0) {
    throw Error(ErrorCode::NonSquareConstantTerm, "constant term must be a positive rational square");
  }
  const Rational& a0 = coeffs_[0];
  Integer num_root, den_root;
  mpz_sqrt(num_root.get_mpz_t(), a0.get_num_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), a0.get_den_mpz_t());
  if (num_root * num_root != a0.get_num() || den_root * den_root != a0.get_den()) {
    throw Error(ErrorCode::NonSquareConstantTerm, "constant term " + to_string(a0) + " is not a rational square");
  }
  const std::size_t N = order();
  Series1 out(N);
  out[0] = Rational(num_root, den_root);
  out[0].canonicalize();
  const Rational inv_2b0 = 1 / (2 * out[0]);
  // (sum b_k y^k)^2 = a gives 2 b_0 b_n = a_n - sum_{k=1}^{n-1} b_k b_{n-k}.
  for (std::size_t n = 1; n <= N; ++n) {
    Rational acc = coeffs_[n];
    for (std::size_t k = 1; k < n; ++k) acc -= out[k] * out[n - k];
    out[n] = acc * inv_2b0;
  }
  return out;
}

Series1 Series1::derivative() const {
  const std::size_t N = order();
  Series1 out(N == 0 ? 0 : N - 1);
  for (std::size_t n = 1; n <= N; ++n) out[n - 1] = coeffs_[n] * static_cast<unsigned long>(n);
  return out;
}

Series1 Series1::scale_argument(const Rational& c) const {
  Series1 out(order());
  Rational factor = 1;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    out[n] = coeffs_[n] * factor;
    factor *= c;
  }
  return out;
}

Series1 Series1::truncated(std::size_t order) const {
  std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + static_cast<long>(std::min(order + 1, coeffs_.size())));
  return Series1(order, std::move(c));
}

}  // namespace treeot
