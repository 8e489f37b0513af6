#ifndef HOFFMAN_CONVEX_HPP
#define HOFFMAN_CONVEX_HPP

#include <compare>
#include <span>
#include <string_view>
#include <vector>

#include "hoffman/linalg.hpp"

namespace hoffman {

// Everything here is about v(D) := min_{|h|=1} max_i d_i^T h for a finite
// point list D. Its sign says where the origin sits relative to conv(D):
// outside (negative), on the boundary (zero) or in the interior (positive).

enum class Sign { Negative, Zero, Positive };

std::string_view to_string(Sign s);

/// v(D) kept exactly: value_sq = v(D)^2 together with its sign.
struct SquaredMagnitude {
  Sign sign = Sign::Zero;
  Scalar value_sq;

  /// Signed floating approximation of v(D).
  double approx() const;

  friend bool operator==(const SquaredMagnitude&, const SquaredMagnitude&) = default;
  /// Orders by the signed value v(D).
  friend std::strong_ordering operator<=>(const SquaredMagnitude& a, const SquaredMagnitude& b);
};

/// Convex weights lambda >= 0, sum 1, sum lambda_i d_i = 0, if 0 is in conv(D).
struct HullMembership {
  bool contains_origin = false;
  Vec multipliers;
};

/// Solves {D^T lambda = 0, sum lambda = 1, 0 <= lambda <= 1}.
HullMembership origin_in_hull(std::span<const Vec> points);

Sign minmax_sign(std::span<const Vec> points);

struct NearestPoint {
  Vec point;
  Scalar dist_sq;
};

/// Exact nearest point of conv(D) to the origin, by enumerating affinely
/// independent subsets of at most n+1 points and projecting onto their hulls.
NearestPoint min_norm_point_sq(std::span<const Vec> points);

/// Squared radius of the largest origin-centred ball inside conv(D).
/// Requires minmax_sign(D) == Positive; throws std::invalid_argument otherwise.
Scalar inradius_at_origin_sq(std::span<const Vec> points);

SquaredMagnitude minmax_value_sq(std::span<const Vec> points);

/// Distinct points in first-occurrence order.
std::vector<Vec> dedup_points(std::span<const Vec> points);

}  // namespace hoffman

#endif  // HOFFMAN_CONVEX_HPP
