#include "treeot/radial.hpp"

#include <algorithm>
#include <string>

#include "treeot/error.hpp"

namespace treeot {

PairGeometry make_geometry(long q, long d) {
  if (q == 1) {
    throw Error(ErrorCode::InvalidParams,
                "q = 1 is the integer line, where W1 equals dist(X,Y) for every radial family; use q >= 2");
  }
  if (q < 2) throw Error(ErrorCode::InvalidParams, "q must be >= 2, got " + std::to_string(q));
  if (d < 1) throw Error(ErrorCode::InvalidParams, "d must be >= 1, got " + std::to_string(d));
  return PairGeometry{q, d};
}

Rational RadialProfile::at(long l) const {
  if (l < 0 || l >= static_cast<long>(s.size())) return 0;
  return s[static_cast<std::size_t>(l)];
}

long RadialProfile::support_radius() const {
  for (long l = static_cast<long>(s.size()) - 1; l > 0; --l) {
    if (s[static_cast<std::size_t>(l)] != 0) return l;
  }
  return 0;
}

void validate_profile(const RadialProfile& profile) {
  bool positive = false;
  for (std::size_t l = 0; l < profile.s.size(); ++l) {
    if (sign(profile.s[l]) < 0) throw Error(ErrorCode::NegativeMass, "s(" + std::to_string(l) + ") < 0");
    positive = positive || sign(profile.s[l]) > 0;
  }
  if (!positive) throw Error(ErrorCode::InvalidParams, "profile is identically zero");
}

Integer sphere_size(long q, long r) {
  if (r == 0) return 1;
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(r - 1));
  return out * (q + 1);
}

Integer ball_size(long q, long r) {
  Integer out = 0;
  for (long l = 0; l <= r; ++l) out += sphere_size(q, l);
  return out;
}

Integer peer_count(const PairGeometry& geometry, BasepointCoord coord) {
  if (coord.h == 0) return 1;
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(geometry.q), static_cast<unsigned long>(coord.h - 1));
  const bool end = coord.i == 0 || coord.i == geometry.d;
  return end ? Integer(out * geometry.q) : Integer(out * (geometry.q - 1));
}

TruncatedTree build_truncated_tree(long q, long d, long radius) {
  if (radius < 0) throw Error(ErrorCode::InvalidParams, "radius must be >= 0");
  TruncatedTree out;
  out.geometry = make_geometry(q, d);
  out.radius = radius;

  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto add_vertex = [&](std::string label, BasepointCoord c) {
    labels.push_back(std::move(label));
    out.coords.push_back(c);
    return labels.size() - 1;
  };

  for (long i = 0; i <= d; ++i) {
    std::string label = i == 0 ? "X" : i == d ? "Y" : "Z" + std::to_string(i);
    add_vertex(std::move(label), {i, 0});
    if (i > 0) edges.emplace_back(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i));
  }
  out.x = 0;
  out.y = static_cast<std::size_t>(d);

  for (long i = 0; i <= d; ++i) {
    const long max_height = radius - std::min(i, d - i);
    if (max_height < 1) continue;
    const long branches = (i == 0 || i == d) ? q : q - 1;
    // Level-by-level growth; every hanging vertex has q children.
    std::vector<std::size_t> level;
    for (long b = 0; b < branches; ++b) {
      auto v = add_vertex("v" + std::to_string(labels.size()), {i, 1});
      edges.emplace_back(static_cast<std::size_t>(i), v);
      level.push_back(v);
    }
    for (long h = 2; h <= max_height; ++h) {
      std::vector<std::size_t> next;
      next.reserve(level.size() * static_cast<std::size_t>(q));
      for (auto parent : level) {
        for (long c = 0; c < q; ++c) {
          auto v = add_vertex("v" + std::to_string(labels.size()), {i, h});
          edges.emplace_back(parent, v);
          next.push_back(v);
        }
      }
      level = std::move(next);
    }
  }
  out.tree = validate_tree(std::move(labels), edges);
  return out;
}

BasepointCoord basepoint_coord(const PairGeometry& geometry, long dist_x, long dist_y) {
  return {(dist_x - dist_y + geometry.d) / 2, (dist_x + dist_y - geometry.d) / 2};
}

BasepointCoord basepoint_coord(const TruncatedTree& truncation, std::size_t vertex) {
  return truncation.coords.at(vertex);
}

Measure radial_measure(const TruncatedTree& truncation, std::size_t center, const RadialProfile& profile) {
  validate_profile(profile);
  const auto& t = truncation.tree;
  const auto c = basepoint_coord(truncation, center);
  const long to_x = c.i + c.h;
  const long to_y = truncation.geometry.d - c.i + c.h;
  const long safe = truncation.radius - std::min(to_x, to_y);
  const long needed = profile.support_radius();
  if (needed > safe) {
    throw Error(ErrorCode::TruncationTooSmall, "profile radius " + std::to_string(needed) +
                                                   " exceeds the complete radius " + std::to_string(safe) +
                                                   " around vertex '" + t.label(center) + "'");
  }
  const auto dist = t.distances_from(center);
  Measure out{std::vector<Rational>(t.size(), Rational(0))};
  for (std::size_t v = 0; v < t.size(); ++v) out.mass[v] = profile.at(dist[v]);
  return out;
}

Rational radial_potential(BasepointCoord coord, const PairGeometry& geometry) {
  const Rational half_d = ratio(geometry.d, 2);
  if (2 * coord.i <= geometry.d) return half_d - coord.i + coord.h;
  return half_d - coord.i - coord.h;
}

Potential radial_potential_field(const TruncatedTree& truncation) {
  Potential phi;
  phi.value.reserve(truncation.coords.size());
  for (const auto& c : truncation.coords) phi.value.push_back(radial_potential(c, truncation.geometry));
  return phi;
}

Rational w1_radial_formula(const RadialProfile& profile, const PairGeometry& geometry) {
  const long q = geometry.q;
  const long d = geometry.d;
  const long delta = geometry.delta();
  const long top = profile.support_radius();
  const Rational half_d = ratio(d, 2);
  auto g = [&](long l) { return profile.at(l); };

  Rational s1 = 0;
  for (long h = 0; h <= top; ++h) s1 += power(q, h) * (g(h) - g(h + d)) * (half_d + h);
  Rational s2 = 0;
  for (long i = 1; i <= delta; ++i) s2 += (g(i) - g(d - i)) * (half_d - i);
  Rational s3 = 0;
  for (long i = 1; i <= delta; ++i) {
    for (long h = 1; i + h <= top; ++h) {
      s3 += (q - 1) * power(q, h - 1) * (g(i + h) - g(d - i + h)) * (half_d - i + h);
    }
  }
  return 2 * (s1 + s2 + s3);
}

Rational w1_radial_flow_formula(const RadialProfile& profile, const PairGeometry& geometry) {
  const long q = geometry.q;
  const long d = geometry.d;
  const long top = profile.support_radius();
  auto g = [&](long l) { return profile.at(l); };

  Rational e1 = 0;
  for (long h = 0; h <= top; ++h) {
    for (long i = 1; h + i <= top; ++i) e1 += power(q, h + i) * (g(h + i) - g(d + h + i));
  }
  e1 *= 2;

  Rational e2 = 0;
  for (long b = 1; b <= (d - 1) / 2; ++b) {
    for (long h = 0; b + h <= top; ++h) {
      for (long i = 1; b + h + i <= top; ++i) {
        e2 += (q - 1) * power(q, h + i - 1) * (g(b + h + i) - g(d - b + h + i));
      }
    }
  }
  e2 *= 2;

  Rational t = 0;
  for (long h = 0; h <= top; ++h) t += power(q, h) * (g(h) - g(d + h));
  Rational e3 = 0;
  Rational t_prime = 0;
  Rational t_double = 0;
  for (long a = 0; a <= d - 1; ++a) {
    e3 += t;
    // Running sums over i = 1..a.
    if (a >= 1) {
      t_prime += g(a) - g(d - a);
      for (long h = 1; std::min(a, d - a) + h <= top; ++h) {
        t_double += (q - 1) * power(q, h - 1) * (g(a + h) - g(d - a + h));
      }
    }
    e3 += t_prime + t_double;
  }
  return e1 + e2 + e3;
}

Rational w1_radial_tree(const RadialProfile& profile, const PairGeometry& geometry, std::optional<long> radius) {
  const long r = radius.value_or(profile.support_radius() + geometry.d);
  const auto truncation = build_truncated_tree(geometry.q, geometry.d, r);
  const auto mu = radial_measure(truncation, truncation.x, profile);
  const auto nu = radial_measure(truncation, truncation.y, profile);
  return w1_tree(truncation.tree, mu, nu);
}

bool flow_direction_check(const TruncatedTree& truncation, const Flow& flow) {
  const auto& t = truncation.tree;
  const long d = truncation.geometry.d;
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    const auto& edge = t.edges()[e];
    const auto a = truncation.coords[edge.lo];
    const auto b = truncation.coords[edge.hi];
    if (a.h == 0 && b.h == 0) {
      // Path edge; orient from the smaller basepoint index.
      const auto from = a.i < b.i ? edge.lo : edge.hi;
      if (sign(flow_out_of(t, flow, e, from)) <= 0) return false;
      continue;
    }
    // Off-path edge: `lower` is the endpoint closer to the path.
    const auto lower = a.h < b.h ? edge.lo : edge.hi;
    const long i = truncation.coords[lower].i;
    const int toward_path = sign(-flow_out_of(t, flow, e, lower));
    if (2 * i < d && toward_path < 0) return false;
    if (2 * i > d && toward_path > 0) return false;
    if (2 * i == d && toward_path != 0) return false;
  }
  return true;
}

}  // namespace treeot
