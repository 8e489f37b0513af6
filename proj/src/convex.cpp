#include "hoffman/convex.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "hoffman/combinatorics.hpp"
#include "hoffman/lp.hpp"

namespace hoffman {

namespace {

std::size_t check_points(std::span<const Vec> points) {
  if (points.empty()) throw std::invalid_argument("point list is empty");
  const std::size_t n = points.front().dim();
  if (n == 0) throw std::invalid_argument("points must have dimension >= 1");
  for (const auto& p : points) {
    if (p.dim() != n) throw std::invalid_argument("points have mixed dimensions");
  }
  return n;
}

// Largest t with lambda_i >= t, sum lambda = 1, sum lambda_i d_i = 0.
// Positive exactly when the origin is a strictly positive convex
// combination, i.e. lies in the relative interior of conv(D).
bool origin_in_relative_interior(std::span<const Vec> pts, std::size_t n) {
  const std::size_t k = pts.size();
  LinearProgram lp;
  lp.objective = Vec(k + 1);
  lp.objective[k] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    Vec row(k + 1);
    for (std::size_t i = 0; i < k; ++i) row[i] = pts[i][c];
    lp.equalities.push_back({std::move(row), Scalar()});
  }
  Vec ones(k + 1);
  for (std::size_t i = 0; i < k; ++i) ones[i] = 1;
  lp.equalities.push_back({std::move(ones), Scalar(1)});
  for (std::size_t i = 0; i < k; ++i) {
    Vec row(k + 1);
    row[i] = -1;
    row[k] = 1;
    lp.inequalities.push_back({std::move(row), Scalar()});
  }
  const LpOutcome res = solve_lp(lp);
  return res.status == LpStatus::Optimal && res.optimal_value.sign() > 0;
}

// Projection of the origin onto aff(S); nullopt when S is affinely dependent.
struct AffineProjection {
  Vec point;
  std::vector<Scalar> barycentric;
};

std::optional<AffineProjection> project_origin(const std::vector<const Vec*>& s) {
  const Vec& base = *s.front();
  const std::size_t q = s.size() - 1;
  std::vector<Vec> dirs;
  dirs.reserve(q);
  for (std::size_t i = 1; i < s.size(); ++i) dirs.push_back(*s[i] - base);

  Mat gram(q, q);
  Vec rhs(q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i; j < q; ++j) {
      gram(i, j) = dirs[i].dot(dirs[j]);
      gram(j, i) = gram(i, j);
    }
    rhs[i] = -dirs[i].dot(base);
  }
  const LinearSolution sol = solve_linear(gram, rhs);
  if (sol.kind != SolveKind::Unique) return std::nullopt;

  AffineProjection out{base, std::vector<Scalar>(s.size())};
  Scalar rest(1);
  for (std::size_t i = 0; i < q; ++i) {
    out.point += dirs[i] * sol.solution[i];
    out.barycentric[i + 1] = sol.solution[i];
    rest -= sol.solution[i];
  }
  out.barycentric[0] = rest;
  return out;
}

}  // namespace

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
  }
  return "?";
}

double SquaredMagnitude::approx() const {
  const double mag = std::sqrt(value_sq.to_double());
  return sign == Sign::Negative ? -mag : mag;
}

std::strong_ordering operator<=>(const SquaredMagnitude& a, const SquaredMagnitude& b) {
  if (a.sign != b.sign) return static_cast<int>(a.sign) <=> static_cast<int>(b.sign);
  switch (a.sign) {
    case Sign::Negative: return b.value_sq <=> a.value_sq;
    case Sign::Positive: return a.value_sq <=> b.value_sq;
    case Sign::Zero: return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

std::vector<Vec> dedup_points(std::span<const Vec> points) {
  std::vector<Vec> out;
  for (const auto& p : points) {
    bool seen = false;
    for (const auto& q : out) {
      if (q == p) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(p);
  }
  return out;
}

HullMembership origin_in_hull(std::span<const Vec> points) {
  const std::size_t n = check_points(points);
  const std::size_t k = points.size();
  LinearProgram lp;
  lp.objective = Vec(k);
  for (std::size_t c = 0; c < n; ++c) {
    Vec row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = points[i][c];
    lp.equalities.push_back({std::move(row), Scalar()});
  }
  Vec ones(k);
  for (std::size_t i = 0; i < k; ++i) ones[i] = 1;
  lp.equalities.push_back({std::move(ones), Scalar(1)});
  for (std::size_t i = 0; i < k; ++i) {
    Vec row(k);
    row[i] = 1;
    lp.inequalities.push_back({std::move(row), Scalar(1)});
  }
  lp.lower_bounds.assign(k, Scalar());

  const LpOutcome res = solve_lp(lp);
  HullMembership out;
  if (res.status != LpStatus::Infeasible) {
    out.contains_origin = true;
    out.multipliers = res.feasible_point;
  }
  return out;
}

Sign minmax_sign(std::span<const Vec> points) {
  const std::size_t n = check_points(points);
  if (!origin_in_hull(points).contains_origin) return Sign::Negative;
  const std::vector<Vec> pts = dedup_points(points);
  if (affine_hull_dim(pts) < n) return Sign::Zero;
  return origin_in_relative_interior(pts, n) ? Sign::Positive : Sign::Zero;
}

NearestPoint min_norm_point_sq(std::span<const Vec> points) {
  const std::size_t n = check_points(points);
  const std::vector<Vec> pts = dedup_points(points);
  std::optional<NearestPoint> best;
  const std::size_t max_size = std::min(pts.size(), n + 1);
  for (std::size_t size = 1; size <= max_size; ++size) {
    for_each_combination(pts.size(), size, [&](const std::vector<std::size_t>& idx) {
      std::vector<const Vec*> subset;
      subset.reserve(idx.size());
      for (auto i : idx) subset.push_back(&pts[i]);
      auto proj = project_origin(subset);
      if (!proj) return true;
      for (const auto& w : proj->barycentric) {
        if (w.sign() < 0) return true;
      }
      Scalar d = proj->point.norm_sq();
      if (!best || d < best->dist_sq) best = NearestPoint{std::move(proj->point), std::move(d)};
      return true;
    });
  }
  // Singletons are always affinely independent, so best is set.
  return *best;
}

namespace {

// Minimum of offset^2 / |normal|^2 over hyperplanes through n affinely
// independent points of D that keep all of D on the origin's side.
Scalar facet_distance_sq(std::span<const Vec> points, std::size_t n) {
  const std::vector<Vec> pts = dedup_points(points);
  std::optional<Scalar> best;
  for_each_combination(pts.size(), n, [&](const std::vector<std::size_t>& idx) {
    Mat diffs(0, n);
    for (std::size_t i = 1; i < idx.size(); ++i) diffs.append_row(pts[idx[i]] - pts[idx[0]]);
    const auto kernel = null_space(diffs);
    if (kernel.size() != 1) return true;
    Vec normal = kernel.front();
    Scalar offset = normal.dot(pts[idx[0]]);
    if (offset.is_zero()) return true;
    if (offset.sign() < 0) {
      normal *= Scalar(-1);
      offset = -offset;
    }
    for (const auto& p : pts) {
      if (normal.dot(p) > offset) return true;
    }
    Scalar d = offset * offset / normal.norm_sq();
    if (!best || d < *best) best = std::move(d);
    return true;
  });
  if (!best) throw std::logic_error("no supporting facet found for an interior origin");
  return *best;
}

}  // namespace

Scalar inradius_at_origin_sq(std::span<const Vec> points) {
  const std::size_t n = check_points(points);
  if (minmax_sign(points) != Sign::Positive) {
    throw std::invalid_argument("inradius_at_origin_sq: origin is not interior to the hull");
  }
  return facet_distance_sq(points, n);
}

SquaredMagnitude minmax_value_sq(std::span<const Vec> points) {
  const Sign s = minmax_sign(points);
  switch (s) {
    case Sign::Negative: return {s, min_norm_point_sq(points).dist_sq};
    case Sign::Zero: return {s, Scalar()};
    case Sign::Positive: return {s, facet_distance_sq(points, points.front().dim())};
  }
  return {};
}

}  // namespace hoffman
