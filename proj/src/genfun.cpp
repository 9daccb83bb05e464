#include "treeot/genfun.hpp"

#include <string>

#include "treeot/error.hpp"

namespace treeot {

GTable::GTable(long q, std::size_t order)
    : q_(q), order_(order), g_(order + 1, std::vector<Rational>(order + 1, Rational(0))) {}

Rational GTable::at(long l, long n) const {
  if (l < 0 || n < 0 || l > static_cast<long>(order_) || n > static_cast<long>(order_)) return 0;
  return g_[static_cast<std::size_t>(l)][static_cast<std::size_t>(n)];
}

void GTable::set(std::size_t l, std::size_t n, Rational value) { g_.at(l).at(n) = std::move(value); }

RadialProfile GTable::column(std::size_t n) const {
  RadialProfile p;
  p.s.reserve(order_ + 1);
  for (std::size_t l = 0; l <= order_; ++l) p.s.push_back(g_[l].at(n));
  return p;
}

Rational GTable::column_mass(std::size_t n) const {
  Rational total = 0;
  for (std::size_t l = 0; l <= order_; ++l) {
    if (g_[l][n] != 0) total += Rational(sphere_size(q_, static_cast<long>(l))) * g_[l][n];
  }
  return total;
}

void check_alpha(const Rational& alpha) {
  if (sign(alpha) < 0 || alpha >= 1) {
    throw Error(ErrorCode::InvalidAlpha, "alpha must lie in [0,1), got " + to_string(alpha));
  }
}

GTable srw_g_table(const Rational& alpha, long q, std::size_t order) {
  check_alpha(alpha);
  make_geometry(q, 1);
  GTable table(q, order);
  const Rational stay = alpha;
  const Rational out_prob = (1 - alpha) * q / (q + 1);
  const Rational in_prob = (1 - alpha) / (q + 1);
  table.set(0, 0, 1);
  for (std::size_t n = 0; n < order; ++n) {
    const long nn = static_cast<long>(n);
    table.set(0, n + 1, stay * table.at(0, nn) + (1 - alpha) * table.at(1, nn));
    for (std::size_t l = 1; l <= n + 1; ++l) {
      const long ll = static_cast<long>(l);
      table.set(l, n + 1, stay * table.at(ll, nn) + out_prob * table.at(ll + 1, nn) + in_prob * table.at(ll - 1, nn));
    }
  }
  return table;
}

GTable sphere_g_table(long q, std::size_t order) {
  make_geometry(q, 1);
  GTable table(q, order);
  for (std::size_t n = 0; n <= order; ++n) {
    table.set(n, n, Rational(1) / Rational(sphere_size(q, static_cast<long>(n))));
  }
  return table;
}

GTable ball_g_table(long q, std::size_t order) {
  make_geometry(q, 1);
  GTable table(q, order);
  for (std::size_t n = 0; n <= order; ++n) {
    const Rational c = Rational(1) / Rational(ball_size(q, static_cast<long>(n)));
    for (std::size_t l = 0; l <= n; ++l) table.set(l, n, c);
  }
  return table;
}

GFBundle bundle_from_table(const GTable& table, std::size_t gamma_count) {
  const std::size_t N = table.order();
  const long q = table.q();
  GFBundle b{q, Series1(N), Series1(N), {}};
  for (std::size_t n = 0; n <= N; ++n) {
    Rational g_sum = 0, g1_sum = 0;
    for (std::size_t l = 0; l <= N; ++l) {
      const Rational v = table.at(static_cast<long>(l), static_cast<long>(n));
      if (v == 0) continue;
      g_sum += v * power(q, static_cast<long>(l));
      if (l > 0) g1_sum += v * static_cast<unsigned long>(l) * power(q, static_cast<long>(l) - 1);
    }
    b.G_at_q[n] = g_sum;
    b.G1_at_q[n] = g1_sum;
  }
  for (std::size_t i = 0; i < gamma_count; ++i) {
    Series1 s(N);
    for (std::size_t n = 0; n <= N; ++n) s[n] = table.at(static_cast<long>(i), static_cast<long>(n));
    b.gammas.push_back(std::move(s));
  }
  return b;
}

Series1 srw_discriminant(const Rational& alpha, long q, std::size_t order) {
  const Series1 lazy = Series1(order, {Rational(1), Rational(-alpha)});
  const Rational half = ratio(q + 1, 2);
  const Series1 y2 = Series1::variable(order) * Series1::variable(order);
  return (half * half) * (lazy * lazy) - (q * (1 - alpha) * (1 - alpha)) * y2;
}

GFBundle srw_closed_form(const Rational& alpha, long q, std::size_t order, std::size_t gamma_count) {
  check_alpha(alpha);
  make_geometry(q, 1);
  const Series1 y = Series1::variable(order);
  const Series1 lazy = Series1(order, {Rational(1), Rational(-alpha)});
  const Series1 root = srw_discriminant(alpha, q, order).sqrt();

  const Series1 phi1 = ratio(q - 1, 2) * lazy + root;
  const Series1 phi2 = ratio(q + 1, 2) * lazy + root;
  const Series1 phi3 = phi2 - (Rational(q) * (1 - alpha)) * y;
  const Series1 gamma = Series1::constant(order, q) / phi1;

  GFBundle b;
  b.q = q;
  b.G_at_q = (phi2 * gamma) / phi3;
  b.G1_at_q = (Rational(1 - alpha) * y * b.G_at_q) / phi3;
  // gamma_i = gamma * ((1-alpha) y / phi2)^i
  const Series1 step = (Rational(1 - alpha) * y) / phi2;
  Series1 current = gamma;
  for (std::size_t i = 0; i < gamma_count; ++i) {
    b.gammas.push_back(current);
    current = current * step;
  }
  return b;
}

GFBundle sphere_gf(long q, std::size_t order, std::size_t gamma_count) {
  make_geometry(q, 1);
  GFBundle b{q, Series1(order), Series1(order), {}};
  b.G_at_q[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    b.G_at_q[n] = ratio(q, q + 1);
    b.G1_at_q[n] = ratio(static_cast<long>(n), q + 1);
  }
  for (std::size_t i = 0; i < gamma_count; ++i) {
    Series1 s(order);
    if (i <= order) s[i] = Rational(1) / Rational(sphere_size(q, static_cast<long>(i)));
    b.gammas.push_back(std::move(s));
  }
  return b;
}

GFBundle ball_gf(long q, std::size_t order, std::size_t gamma_count) {
  make_geometry(q, 1);
  GFBundle b{q, Series1(order), Series1(order), {}};
  std::vector<Rational> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    const long nn = static_cast<long>(n);
    c[n] = Rational(q - 1) / (power(q, nn + 1) + power(q, nn) - 2);
    // sum_{l<=n} q^l and sum_{l<=n} l q^{l-1} as closed geometric sums
    b.G_at_q[n] = c[n] * (power(q, nn + 1) - 1) / (q - 1);
    b.G1_at_q[n] = c[n] * (nn * power(q, nn + 1) - (nn + 1) * power(q, nn) + 1) / ((q - 1) * (q - 1));
  }
  for (std::size_t i = 0; i < gamma_count; ++i) {
    Series1 s(order);
    for (std::size_t n = i; n <= order; ++n) s[n] = c[n];
    b.gammas.push_back(std::move(s));
  }
  return b;
}

bool check_functional_equation(const GTable& table, const Rational& alpha) {
  const long q = table.q();
  const long N = static_cast<long>(table.order());
  auto g = [&](long l, long n) { return table.at(l, n); };
  for (long k = 0; k <= N + 1; ++k) {
    for (long j = 0; j <= N; ++j) {
      Rational rhs = (q + 1) * g(k - 1, j) - (q + 1) * alpha * g(k - 1, j - 1) - q * (1 - alpha) * g(k, j - 1) -
                     (1 - alpha) * g(k - 2, j - 1);
      if (k == 1) rhs += -g(0, j) + alpha * g(0, j - 1);
      if (k == 0) rhs += q * (1 - alpha) * g(0, j - 1);
      const Rational lhs = (k == 1 && j == 0) ? Rational(q) : Rational(0);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool check_functional_equation(const GFBundle& bundle, const Rational& alpha) {
  if (bundle.gammas.empty()) return false;
  const std::size_t N = bundle.order();
  const long q = bundle.q;
  const Series1 y = Series1::variable(N);
  const Series1 one = Series1::constant(N, 1);
  const Series1 lazy = one - alpha * y;
  const Series1& G = bundle.G_at_q;
  const Series1& G1 = bundle.G1_at_q;
  const Series1& gamma = bundle.gammas[0];

  // Coefficients of G and gamma at x = q, and their x-derivatives.
  const Series1 a = Rational(q * (q + 1)) * lazy - Rational(q) * (1 - alpha) * y - Rational(q * q) * (1 - alpha) * y;
  const Series1 b = Rational(-q) * lazy + Rational(q) * (1 - alpha) * y;
  const Series1 da = Rational(q + 1) * lazy - Rational(2 * q) * (1 - alpha) * y;
  const Series1 db = -lazy;

  const Series1 slice = Series1::constant(N, q * q) - (a * G + b * gamma);
  const Series1 slope = Series1::constant(N, q) - (da * G + a * G1 + db * gamma);
  const Series1 zero(N);
  return slice == zero && slope == zero;
}

Rational w1_via_genfun(const GFBundle& bundle, const PairGeometry& geometry, std::size_t n) {
  if (n > bundle.order()) {
    throw Error(ErrorCode::OrderExceeded,
                "n = " + std::to_string(n) + " exceeds series order " + std::to_string(bundle.order()));
  }
  if (bundle.q != geometry.q) throw Error(ErrorCode::InvalidParams, "bundle built for a different q");
  const long q = geometry.q;
  const long d = geometry.d;
  const long dl = geometry.delta();
  const long dp = geometry.delta_prime();
  if (bundle.gammas.size() < static_cast<std::size_t>(dl + 1)) {
    throw Error(ErrorCode::InvalidParams, "bundle carries " + std::to_string(bundle.gammas.size()) +
                                              " gamma series, need " + std::to_string(dl + 1));
  }
  const Rational inv_qm1 = ratio(1, q - 1);

  const Rational c_g1 = 2 * q + 2 - 2 * power(q, 1 - dp) - 2 * power(q, -dl);
  const Rational c_g = d + ratio(d, q) - 4 * inv_qm1 + 2 * dp * power(q, -dp) + 2 * inv_qm1 * power(q, -dp) +
                       2 * dl * power(q, -1 - dl) + 2 * inv_qm1 * power(q, -dl);

  Rational w = c_g1 * bundle.G1_at_q[n] + c_g * bundle.G_at_q[n] - ratio(d, q) * bundle.gammas[0][n];
  for (long i = 0; i <= dl; ++i) {
    const Rational c_i = 4 * inv_qm1 + (2 * i - 2 * dp - 2 * inv_qm1) * power(q, i - dp) +
                         (ratio(2 * i, q) - ratio(2 * dl, q) - 2 * inv_qm1) * power(q, i - dl);
    w += c_i * bundle.gammas[static_cast<std::size_t>(i)][n];
  }
  return w;
}

}  // namespace treeot
