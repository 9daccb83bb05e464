#pragma once

// Radially symmetric measures around two vertices X, Y of the (q+1)-regular
// tree. Vertices are addressed by (basepoint index i on the X-Y path,
// height h above it); both closed forms for W1 only need the profile.

#include <cstddef>
#include <optional>
#include <vector>

#include "treeot/rational.hpp"
#include "treeot/tree_core.hpp"

namespace treeot {

struct PairGeometry {
  long q = 2;
  long d = 1;

  long delta() const noexcept { return d / 2; }
  long delta_prime() const noexcept { return d - d / 2; }
};

/// Errors: InvalidParams (q < 2 or d < 1; q = 1 gets its own message).
PairGeometry make_geometry(long q, long d);

struct BasepointCoord {
  long i = 0;
  long h = 0;
};

/// Profile s(0..L); zero beyond L.
struct RadialProfile {
  std::vector<Rational> s;

  /// s(l), or 0 when l lies outside the stored range.
  Rational at(long l) const;
  /// L, the largest index with s(L) != 0 (0 for an all-zero profile).
  long support_radius() const;
};

/// Errors: NegativeMass, InvalidParams (empty or identically zero).
void validate_profile(const RadialProfile& profile);

/// Sphere and ball sizes in the (q+1)-regular tree.
Integer sphere_size(long q, long r);
Integer ball_size(long q, long r);

/// Number of vertices with coordinates (i, h).
Integer peer_count(const PairGeometry& geometry, BasepointCoord coord);

struct TruncatedTree {
  Tree tree;
  std::size_t x = 0;
  std::size_t y = 0;
  PairGeometry geometry;
  long radius = 0;
  std::vector<BasepointCoord> coords;
};

/// Every vertex within distance R of X or Y, plus the whole X-Y path.
/// Errors: InvalidParams.
TruncatedTree build_truncated_tree(long q, long d, long radius);

/// mu(v) = s(dist(center, v)). Errors: TruncationTooSmall when a vertex in the
/// profile's support radius around the center may be missing.
Measure radial_measure(const TruncatedTree& truncation, std::size_t center, const RadialProfile& profile);

/// Coordinates from the two distances: i = (dX - dY + d)/2, h = (dX + dY - d)/2.
BasepointCoord basepoint_coord(const PairGeometry& geometry, long dist_x, long dist_y);
BasepointCoord basepoint_coord(const TruncatedTree& truncation, std::size_t vertex);

/// d/2 - i + h when i <= d/2, d/2 - i - h otherwise.
Rational radial_potential(BasepointCoord coord, const PairGeometry& geometry);
Potential radial_potential_field(const TruncatedTree& truncation);

/// S1 + S2 + S3 from the potential-side derivation.
Rational w1_radial_formula(const RadialProfile& profile, const PairGeometry& geometry);

/// Edge sum over the three edge classes (hanging off X/Y, hanging off interior
/// path vertices, path edges).
Rational w1_radial_flow_formula(const RadialProfile& profile, const PairGeometry& geometry);

/// W1 on an explicit truncation of radius L + d (or `radius` when given).
Rational w1_radial_tree(const RadialProfile& profile, const PairGeometry& geometry,
                        std::optional<long> radius = std::nullopt);

/// Off-path flow points toward the path when i < d/2, away when i > d/2,
/// vanishes at i = d/2; path edges carry positive flow from X toward Y.
bool flow_direction_check(const TruncatedTree& truncation, const Flow& flow);

}  // namespace treeot
