#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treeot/asymptotics.hpp"
#include "treeot/error.hpp"
#include "treeot/genfun.hpp"
#include "treeot/instance_io.hpp"
#include "treeot/lp_oracle.hpp"
#include "treeot/sweep.hpp"
#include "treeot/tree_core.hpp"
#include "treeot/verify.hpp"

using namespace treeot;
using nlohmann::json;

namespace {

// "a..b", "a,b,c" or "a".
std::vector<long> parse_int_range(const std::string& text) {
  std::vector<long> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const long lo = std::stol(text.substr(0, dots));
    const long hi = std::stol(text.substr(dots + 2));
    if (hi < lo) throw Error(ErrorCode::InvalidParams, "empty range '" + text + "'");
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stol(item));
  if (out.empty()) throw Error(ErrorCode::InvalidParams, "empty list '" + text + "'");
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_rational(item));
  if (out.empty()) throw Error(ErrorCode::InvalidParams, "empty list '" + text + "'");
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidParams, "cannot write " + path);
  out << text;
}

int cmd_w1(const std::string& path, bool as_json) {
  const auto inst = load_instance(path);
  const auto rho = assignment_from(inst.mu, inst.nu);
  const auto flow = unique_flow(inst.tree, rho);
  const auto phi = good_potential(inst.tree, flow);
  const Rational via_flow = flow_cost(flow);
  const Rational via_potential = potential_value(rho, phi);
  bool agree = via_flow == via_potential && is_good_potential(inst.tree, flow, phi);

  json report{{"instance", path},
              {"w1", to_string(via_flow)},
              {"w1_decimal", to_decimal(via_flow)},
              {"flow", to_string(via_flow)},
              {"potential", to_string(via_potential)}};
  try {
    const auto graph = graph_from_tree(inst.tree);
    const auto lp = w1_lp(graph, inst.mu, inst.nu);
    report["lp"] = to_string(lp.cost);
    report["lp_certificate"] = check_complementary_slackness(graph, lp.plan, phi);
    agree = agree && lp.cost == via_flow && report["lp_certificate"].get<bool>();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
    report["lp"] = nullptr;
    report["lp_skipped"] = e.what();
  }
  report["agree"] = agree;

  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "W1 = " << to_string(via_flow) << " (~" << to_decimal(via_flow) << ")\n";
    std::cout << "  flow:      " << to_string(via_flow) << "\n";
    std::cout << "  potential: " << to_string(via_potential) << "\n";
    if (report["lp"].is_null()) {
      std::cout << "  lp:        skipped (" << report["lp_skipped"].get<std::string>() << ")\n";
    } else {
      std::cout << "  lp:        " << report["lp"].get<std::string>() << "\n";
    }
    std::cout << (agree ? "all paths agree\n" : "MISMATCH between computation paths\n");
  }
  return agree ? 0 : 1;
}

int cmd_series(const std::string& family_name, const std::string& alpha_text, long q, std::size_t order,
               const std::string& emit, const std::string& source) {
  const auto family = parse_family(family_name);
  const Rational alpha = parse_rational(alpha_text);
  GFBundle bundle;
  if (family == Family::Srw) {
    bundle = source == "table" ? bundle_from_table(srw_g_table(alpha, q, order), 1) : srw_closed_form(alpha, q, order, 1);
  } else if (family == Family::Sphere) {
    bundle = source == "table" ? bundle_from_table(sphere_g_table(q, order), 1) : sphere_gf(q, order, 1);
  } else {
    bundle = source == "table" ? bundle_from_table(ball_g_table(q, order), 1) : ball_gf(q, order, 1);
  }
  if (emit == "json") {
    json rows = json::array();
    for (std::size_t n = 0; n <= order; ++n) {
      rows.push_back({{"n", n},
                      {"gamma", to_string(bundle.gammas[0][n])},
                      {"G", to_string(bundle.G_at_q[n])},
                      {"G1", to_string(bundle.G1_at_q[n])}});
    }
    std::cout << rows.dump(2) << "\n";
  } else {
    std::cout << "n,gamma,G,G1\n";
    for (std::size_t n = 0; n <= order; ++n) {
      std::cout << n << "," << to_string(bundle.gammas[0][n]) << "," << to_string(bundle.G_at_q[n]) << ","
                << to_string(bundle.G1_at_q[n]) << "\n";
    }
  }
  return 0;
}

int cmd_verify_ineq(const std::vector<std::string>& grid, const std::string& output) {
  std::vector<Rational> alphas{Rational(0), ratio(1, 4), ratio(1, 2), ratio(9, 10)};
  std::vector<long> ds = parse_int_range("1..6");
  std::vector<long> qs = parse_int_range("2..10");
  for (const auto& item : grid) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "grid entry '" + item + "' must be key=values");
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    if (key == "alpha") {
      alphas = parse_rational_list(value);
    } else if (key == "d") {
      ds = parse_int_range(value);
    } else if (key == "q") {
      qs = parse_int_range(value);
    } else {
      throw Error(ErrorCode::ParseError, "unknown grid key '" + key + "'");
    }
  }
  std::ostringstream csv;
  csv << "alpha,d,q,A_srw,A_sphere,A_ball,B_srw,B_sphere,B_ball,ball_equality,pass,failed\n";
  bool all = true;
  for (const auto& a : alphas) {
    for (long d : ds) {
      for (long q : qs) {
        const auto r = verify_inequalities(a, d, q);
        std::string failed;
        for (const auto& c : r.checks) {
          if (!c.pass) failed += (failed.empty() ? "" : "; ") + c.name;
        }
        all = all && r.all_pass();
        csv << to_string(a) << "," << d << "," << q << "," << to_string(r.srw.A) << "," << to_string(r.sphere.A)
            << "," << to_string(r.ball.A) << "," << to_string(r.srw.B) << "," << to_string(r.sphere.B) << ","
            << to_string(r.ball.B) << "," << (r.ball_equality ? "true" : "false") << ","
            << (r.all_pass() ? "pass" : "fail") << ",\"" << failed << "\"\n";
      }
    }
  }
  write_output(csv.str(), output);
  return all ? 0 : 1;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, bool as_json, bool verbose) {
  VerifyOptions options;
  options.seed = seed;
  const auto reports = run_verify(suite, options);
  bool all = true;
  json doc{{"seed", seed}, {"suites", json::array()}};
  for (const auto& r : reports) {
    all = all && r.pass();
    json cases = json::array();
    for (const auto& c : r.cases) cases.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    doc["suites"].push_back({{"suite", r.name},
                             {"pass", r.pass()},
                             {"cases", r.cases.size()},
                             {"failures", r.failures()},
                             {"results", std::move(cases)}});
  }
  doc["pass"] = all;
  if (as_json) {
    std::cout << doc.dump(2) << "\n";
    return all ? 0 : 1;
  }
  for (const auto& r : reports) {
    std::cout << (r.pass() ? "PASS " : "FAIL ") << r.name << "  " << (r.cases.size() - r.failures()) << "/"
              << r.cases.size() << "\n";
    for (const auto& c : r.cases) {
      if (verbose || !c.pass) {
        std::cout << "  " << (c.pass ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
      }
    }
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 1-Wasserstein distances on trees and radial families on regular trees"};
  app.require_subcommand(1);

  auto* w1 = app.add_subcommand("w1", "W1 of a JSON tree instance via flow, potential and LP");
  std::string instance_path;
  bool w1_json = false;
  w1->add_option("instance", instance_path, "instance file")->required()->check(CLI::ExistingFile);
  w1->add_flag("--json", w1_json, "emit a JSON report");

  auto* sweep = app.add_subcommand("sweep", "W1(n), asymptote and residual over a parameter grid");
  std::string sweep_family = "srw", sweep_alpha = "0", sweep_d = "1", sweep_q = "2", sweep_n = "0..20";
  std::string sweep_format = "csv", sweep_output;
  std::size_t sweep_order = kDefaultOrder;
  unsigned sweep_threads = 0;
  sweep->add_option("--family", sweep_family, "srw | sphere | ball");
  sweep->add_option("--alpha", sweep_alpha, "comma-separated laziness values (srw only)");
  sweep->add_option("--d", sweep_d, "d range, e.g. 1..4");
  sweep->add_option("--q", sweep_q, "q range, e.g. 2..3");
  sweep->add_option("--n", sweep_n, "n range, e.g. 0..60");
  sweep->add_option("--order", sweep_order, "series truncation order");
  sweep->add_option("--format", sweep_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--output,-o", sweep_output, "output path (stdout when omitted)");
  sweep->add_option("--threads", sweep_threads, "worker threads (0 = all cores)");
  sweep->add_option("--seed", "accepted for interface symmetry; sweeps are deterministic");

  auto* series = app.add_subcommand("series", "coefficients of gamma, G(q,y), G1(q,y)");
  std::string series_family = "srw", series_alpha = "0", series_emit = "csv", series_source = "closed";
  long series_q = 2;
  std::size_t series_order = kDefaultOrder;
  series->add_option("--family", series_family, "srw | sphere | ball");
  series->add_option("--alpha", series_alpha, "laziness (srw only)");
  series->add_option("--q", series_q, "branching number");
  series->add_option("--order", series_order, "truncation order");
  series->add_option("--emit", series_emit, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  series->add_option("--source", series_source, "closed | table")->check(CLI::IsMember({"closed", "table"}));

  auto* asym = app.add_subcommand("asym", "linear asymptotic coefficients A, B");
  std::string asym_family = "srw", asym_alpha = "0";
  long asym_d = 1, asym_q = 2;
  asym->add_option("--family", asym_family, "srw | sphere | ball");
  asym->add_option("--alpha", asym_alpha, "laziness (srw only)");
  asym->add_option("--d", asym_d, "dist(X,Y)");
  asym->add_option("--q", asym_q, "branching number");

  auto* ineq = app.add_subcommand("verify-ineq", "check the coefficient inequalities over a grid (CSV)");
  std::vector<std::string> ineq_grid;
  std::string ineq_output;
  ineq->add_option("--grid", ineq_grid, "alpha=0,1/4 d=1..6 q=2..10");
  ineq->add_option("--output,-o", ineq_output, "output path (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "run a self-check suite");
  std::string verify_suite = "all";
  std::uint64_t verify_seed = kDefaultSeed;
  bool verify_json = false, verify_verbose = false;
  verify->add_option("suite", verify_suite, "all | duality | triple | series | inequalities | oeis | gamma")
      ->check(CLI::IsMember({"all", "duality", "triple", "series", "inequalities", "oeis", "gamma"}));
  verify->add_option("--seed", verify_seed, "seed for randomized suites");
  verify->add_flag("--json", verify_json, "emit a JSON report");
  verify->add_flag("--verbose,-v", verify_verbose, "list passing cases too");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*w1) return cmd_w1(instance_path, w1_json);
    if (*sweep) {
      SweepSpec spec;
      spec.family = parse_family(sweep_family);
      spec.alphas = parse_rational_list(sweep_alpha);
      const auto ds = parse_int_range(sweep_d);
      const auto qs = parse_int_range(sweep_q);
      const auto ns = parse_int_range(sweep_n);
      spec.d_min = ds.front();
      spec.d_max = ds.back();
      spec.q_min = qs.front();
      spec.q_max = qs.back();
      spec.n_min = ns.front();
      spec.n_max = ns.back();
      spec.order = sweep_order;
      spec.threads = sweep_threads;
      const auto rows = run_sweep(spec);
      write_output(sweep_format == "json" ? sweep_json(rows) : sweep_csv(rows), sweep_output);
      return 0;
    }
    if (*series) return cmd_series(series_family, series_alpha, series_q, series_order, series_emit, series_source);
    if (*asym) {
      const auto ab = family_AB(parse_family(asym_family), parse_rational(asym_alpha), asym_d, asym_q);
      json out{{"A", to_string(ab.A)}, {"B", to_string(ab.B)}, {"exact_for_large_n", ab.exact_for_large_n}};
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (*ineq) return cmd_verify_ineq(ineq_grid, ineq_output);
    if (*verify) return cmd_verify(verify_suite, verify_seed, verify_json, verify_verbose);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
