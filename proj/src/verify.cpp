#include "treeot/verify.hpp"

#include <random>

#include "treeot/asymptotics.hpp"
#include "treeot/error.hpp"
#include "treeot/genfun.hpp"
#include "treeot/lp_oracle.hpp"
#include "treeot/radial.hpp"
#include "treeot/series.hpp"
#include "treeot/tree_core.hpp"

namespace treeot {

bool SuiteReport::pass() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : cases) n += c.pass ? 0 : 1;
  return n;
}

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_rational(Rng& rng, long max_num, long max_den) {
  return ratio(uniform(rng, 0, max_num), uniform(rng, 1, max_den));
}

Tree random_tree(Rng& rng, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(v) - 1)), v);
  return validate_tree(n, edges);
}

Measure random_measure(Rng& rng, std::size_t n) {
  Measure m{std::vector<Rational>(n, Rational(0))};
  while (m.total() == 0) {
    for (auto& x : m.mass) x = uniform(rng, 0, 2) == 0 ? Rational(0) : random_rational(rng, 9, 6);
  }
  return m;
}

RadialProfile random_profile(Rng& rng, long max_radius) {
  RadialProfile p;
  const long top = uniform(rng, 0, max_radius);
  p.s.assign(static_cast<std::size_t>(top + 1), Rational(0));
  if (uniform(rng, 0, 2) == 0) {
    // Annulus: a constant band [inner, top].
    const long inner = uniform(rng, 0, top);
    const Rational v = ratio(1, uniform(rng, 1, 9));
    for (long l = inner; l <= top; ++l) p.s[static_cast<std::size_t>(l)] = v;
  } else {
    for (auto& x : p.s) x = random_rational(rng, 5, 7);
  }
  p.s.back() += ratio(1, uniform(rng, 1, 5));
  return p;
}

std::string str(const Rational& r) { return to_string(r); }

void add(SuiteReport& report, std::string name, bool pass, std::string detail = {}) {
  report.cases.push_back({std::move(name), pass, std::move(detail)});
}

}  // namespace

SuiteReport verify_duality_suite(const VerifyOptions& options) {
  SuiteReport report{"duality", {}};
  Rng rng(options.seed);
  for (int k = 0; k < options.duality_instances; ++k) {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 12));
    const auto tree = random_tree(rng, n);
    const auto graph = graph_from_tree(tree);
    auto mu = random_measure(rng, n);
    auto nu = random_measure(rng, n);
    const Rational scale = mu.total() / nu.total();
    for (auto& x : nu.mass) x *= scale;

    const auto rho = assignment_from(mu, nu);
    const auto flow = unique_flow(tree, rho);
    const auto phi = good_potential(tree, flow);
    const Rational tree_value = flow_cost(flow);
    const auto lp = w1_lp(graph, mu, nu);
    const auto dual = verify_duality(graph, mu, nu, phi);
    const bool ok = tree_value == lp.cost && dual.certificate && dual.primal == tree_value &&
                    plan_marginals_hold(lp.plan, mu, nu) && check_complementary_slackness(graph, lp.plan, phi) &&
                    divergence(tree, flow) == rho.charge;
    add(report, "instance " + std::to_string(k) + " (" + std::to_string(n) + " vertices)", ok,
        "tree=" + str(tree_value) + " lp=" + str(lp.cost) + " dual=" + str(dual.dual));
  }
  return report;
}

SuiteReport verify_triple_suite(const VerifyOptions& options) {
  SuiteReport report{"triple", {}};
  Rng rng(options.seed + 1);
  for (long q : {2L, 3L}) {
    for (long d = 1; d <= 4; ++d) {
      const auto geometry = make_geometry(q, d);
      const long max_radius = q == 2 ? 5 : 4;
      int passed = 0;
      std::string first_failure;
      for (int k = 0; k < options.triple_profiles; ++k) {
        const auto profile = random_profile(rng, max_radius);
        const auto a = w1_radial_formula(profile, geometry);
        const auto b = w1_radial_flow_formula(profile, geometry);
        const auto c = w1_radial_tree(profile, geometry);
        if (a == b && b == c) {
          ++passed;
        } else if (first_failure.empty()) {
          first_failure = "formula=" + str(a) + " flow=" + str(b) + " tree=" + str(c);
        }
      }
      add(report, "q=" + std::to_string(q) + " d=" + std::to_string(d), passed == options.triple_profiles,
          std::to_string(passed) + "/" + std::to_string(options.triple_profiles) + " agree" +
              (first_failure.empty() ? "" : "; " + first_failure));
    }
  }
  return report;
}

SuiteReport verify_series_suite(const VerifyOptions&) {
  SuiteReport report{"series", {}};
  constexpr std::size_t kOrder = 30;
  for (const auto& alpha : {Rational(0), ratio(1, 5), ratio(1, 2), ratio(9, 10)}) {
    for (long q : {2L, 3L, 5L}) {
      const auto table = srw_g_table(alpha, q, kOrder);
      const auto from_table = bundle_from_table(table, 4);
      const auto closed = srw_closed_form(alpha, q, kOrder, 4);
      const std::string tag = "alpha=" + str(alpha) + " q=" + std::to_string(q);
      bool normalized = true;
      for (std::size_t n = 0; n <= kOrder; ++n) normalized = normalized && table.column_mass(n) == 1;
      add(report, tag + " closed form == recurrence",
          closed.G_at_q == from_table.G_at_q && closed.G1_at_q == from_table.G1_at_q &&
              closed.gammas == from_table.gammas);
      add(report, tag + " functional equation (table)", check_functional_equation(table, alpha));
      add(report, tag + " functional equation (closed form)", check_functional_equation(closed, alpha));
      add(report, tag + " columns sum to 1", normalized);
    }
  }
  return report;
}

SuiteReport verify_inequalities_suite(const VerifyOptions&) {
  SuiteReport report{"inequalities", {}};
  for (const auto& alpha : {Rational(0), ratio(1, 4), ratio(1, 2), ratio(9, 10)}) {
    for (long d = 1; d <= 6; ++d) {
      for (long q = 2; q <= 10; ++q) {
        const auto r = verify_inequalities(alpha, d, q);
        std::string failed;
        for (const auto& c : r.checks) {
          if (!c.pass) failed += (failed.empty() ? "" : "; ") + c.name;
        }
        add(report, "alpha=" + str(alpha) + " d=" + std::to_string(d) + " q=" + std::to_string(q), r.all_pass(),
            failed);
      }
    }
  }
  return report;
}

SuiteReport verify_oeis_suite(const VerifyOptions&) {
  SuiteReport report{"oeis", {}};
  auto scaled_returns = [](const Rational& alpha, long q, long scale, std::size_t count) {
    const auto table = srw_g_table(alpha, q, count - 1);
    std::vector<Rational> out;
    for (std::size_t n = 0; n < count; ++n) out.push_back(power(scale, static_cast<long>(n)) * table.at(0, static_cast<long>(n)));
    return out;
  };
  auto render = [](const std::vector<Rational>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + str(x);
    return s;
  };
  {
    const auto got = scaled_returns(ratio(1, 5), 3, 5, 5);
    const std::vector<Rational> want{1, 1, 5, 13, 53};
    add(report, "alpha=1/5 q=3 scaled returns", got == want, render(got));
  }
  {
    const auto got = scaled_returns(ratio(1, 7), 5, 7, 7);
    const std::vector<Rational> want{1, 1, 7, 19, 103, 391, 1957};
    add(report, "alpha=1/7 q=5 scaled returns", got == want, render(got));
  }
  {
    constexpr std::size_t kTerms = 16;
    const auto got = scaled_returns(Rational(0), 2, 3, 2 * kTerms);
    const Series1 inner = Series1(kTerms - 1, {Rational(1), Rational(-8)}).sqrt();
    const Series1 target = Series1::constant(kTerms - 1, 4) / (Series1::constant(kTerms - 1, 1) + Rational(3) * inner);
    bool ok = true;
    for (std::size_t n = 0; n < kTerms; ++n) {
      ok = ok && got[2 * n] == target[n] && got[2 * n + 1] == 0;
    }
    add(report, "alpha=0 q=2 against 4/(1+3 sqrt(1-8x))", ok, render(std::vector<Rational>(got.begin(), got.begin() + 10)));
  }
  return report;
}

SuiteReport verify_gamma_suite(const VerifyOptions&) {
  SuiteReport report{"gamma", {}};
  constexpr std::size_t kOrder = 400;
  const Rational tolerance = ratio(1, 10);
  for (const auto& alpha : {Rational(0), ratio(1, 5), ratio(1, 2)}) {
    for (long q : {2L, 3L}) {
      const auto bundle = srw_closed_form(alpha, q, kOrder, 1);
      const auto asym = gamma_asymptotic(alpha, q);
      const auto& gamma = bundle.gammas[0];
      const std::string tag = "alpha=" + str(alpha) + " q=" + std::to_string(q);
      auto ratio_at = [&](std::size_t m) { return Interval(gamma[m]) / asym.leading_term(m); };
      const auto early = ratio_at(100);
      const auto late = ratio_at(400);
      const double dev_early = std::abs(early.midpoint() - 1);
      const double dev_late = std::abs(late.midpoint() - 1);
      const bool within = late.greater_than(1 - tolerance) && late.lower_than(1 + tolerance);
      add(report, tag + " ratio within 10% at 400 and shrinking", within && dev_late < dev_early,
          "ratio@100=" + early.to_string(8) + " ratio@400=" + late.to_string(8));
      if (asym.period == 2) {
        bool odd_zero = true;
        for (std::size_t m = 1; m <= kOrder; m += 2) odd_zero = odd_zero && gamma[m] == 0;
        add(report, tag + " odd coefficients vanish", odd_zero);
      }
    }
  }
  return report;
}

std::vector<SuiteReport> run_verify(std::string_view suite, const VerifyOptions& options) {
  std::vector<SuiteReport> out;
  const bool all = suite == "all";
  bool matched = all;
  auto maybe = [&](std::string_view name, SuiteReport (*fn)(const VerifyOptions&)) {
    if (all || suite == name) {
      matched = true;
      out.push_back(fn(options));
    }
  };
  maybe("duality", verify_duality_suite);
  maybe("triple", verify_triple_suite);
  maybe("series", verify_series_suite);
  maybe("inequalities", verify_inequalities_suite);
  maybe("oeis", verify_oeis_suite);
  maybe("gamma", verify_gamma_suite);
  if (!matched) throw Error(ErrorCode::InvalidParams, "unknown suite '" + std::string(suite) + "'");
  return out;
}

}  // namespace treeot
