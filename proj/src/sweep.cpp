#include "treeot/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "treeot/error.hpp"

namespace treeot {

namespace {

struct Task {
  Rational alpha;
  long q;
};

GTable table_for(Family family, const Rational& alpha, long q, std::size_t order) {
  switch (family) {
    case Family::Srw:
      return srw_g_table(alpha, q, order);
    case Family::Sphere:
      return sphere_g_table(q, order);
    case Family::Ball:
      return ball_g_table(q, order);
  }
  throw Error(ErrorCode::InvalidParams, "unknown family");
}

std::vector<SweepRow> rows_for(const SweepSpec& spec, const Task& task) {
  const auto n_top = static_cast<std::size_t>(spec.n_max);
  const auto table = table_for(spec.family, task.alpha, task.q, n_top);
  const auto gamma_count = static_cast<std::size_t>(spec.d_max / 2 + 1);
  const auto bundle = bundle_from_table(table, gamma_count);
  std::vector<SweepRow> rows;
  for (long d = spec.d_min; d <= spec.d_max; ++d) {
    const auto geometry = make_geometry(task.q, d);
    const auto asym = family_AB(spec.family, task.alpha, d, task.q);
    for (long n = spec.n_min; n <= spec.n_max; ++n) {
      SweepRow row;
      row.family = spec.family;
      row.alpha = task.alpha;
      row.d = d;
      row.q = task.q;
      row.n = n;
      row.w1 = w1_via_genfun(bundle, geometry, static_cast<std::size_t>(n));
      if (row.w1 != w1_radial_formula(table.column(static_cast<std::size_t>(n)), geometry)) {
        throw Error(ErrorCode::InvalidParams, "generating-function and potential sums disagree at d=" +
                                                  std::to_string(d) + ", q=" + std::to_string(task.q) +
                                                  ", n=" + std::to_string(n));
      }
      row.asym = asym.at(n);
      row.provenance = "genfun";
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (spec.d_min < 1 || spec.d_max < spec.d_min) throw Error(ErrorCode::InvalidParams, "empty or invalid d range");
  if (spec.q_min < 2 || spec.q_max < spec.q_min) throw Error(ErrorCode::InvalidParams, "empty or invalid q range");
  if (spec.n_min < 0 || spec.n_max < spec.n_min) throw Error(ErrorCode::InvalidParams, "empty or invalid n range");
  if (static_cast<std::size_t>(spec.n_max) > spec.order) {
    throw Error(ErrorCode::OrderExceeded, "n_max = " + std::to_string(spec.n_max) + " exceeds series order " +
                                              std::to_string(spec.order));
  }
  std::vector<Rational> alphas = spec.alphas;
  if (spec.family != Family::Srw || alphas.empty()) alphas = {Rational(0)};
  for (const auto& a : alphas) check_alpha(a);

  std::vector<Task> tasks;
  for (const auto& a : alphas) {
    for (long q = spec.q_min; q <= spec.q_max; ++q) tasks.push_back({a, q});
  }

  std::vector<std::vector<SweepRow>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      try {
        results[t] = rows_for(spec, tasks[t]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<SweepRow> rows;
  for (auto& chunk : results) {
    for (auto& r : chunk) rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return std::tie(a.d, a.q, a.n) < std::tie(b.d, b.q, b.n);
  });
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kSweepCsvHeader << "\n";
  for (const auto& r : rows) {
    out << to_string(r.family) << "," << (r.family == Family::Srw ? to_string(r.alpha) : std::string()) << ","
        << r.d << "," << r.q << "," << r.n << "," << to_string(r.w1) << "," << to_decimal(r.w1) << ","
        << to_string(r.asym) << "," << to_decimal(r.residual()) << "\n";
  }
  return out.str();
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row{{"family", to_string(r.family)},
                       {"d", r.d},
                       {"q", r.q},
                       {"n", r.n},
                       {"w1_exact", to_string(r.w1)},
                       {"w1_decimal", to_decimal(r.w1)},
                       {"asym", to_string(r.asym)},
                       {"residual", to_string(r.residual())},
                       {"residual_decimal", to_decimal(r.residual())},
                       {"provenance", r.provenance},
                       {"checked_against", "formula"}};
    if (r.family == Family::Srw) row["alpha"] = to_string(r.alpha);
    doc.push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

}  // namespace treeot
