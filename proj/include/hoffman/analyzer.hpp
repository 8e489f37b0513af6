#ifndef HOFFMAN_ANALYZER_HPP
#define HOFFMAN_ANALYZER_HPP

#include <optional>
#include <vector>

#include "hoffman/active_sets.hpp"
#include "hoffman/convex.hpp"

namespace hoffman {

/// Witness that A x <= b has no error bound: a point with positive residual
/// whose active rows contain the origin in their convex hull.
struct Certificate {
  Vec point;
  IndexSet active;
  Vec hull_multipliers;  ///< one weight per member of active, in order
};

struct SetEvaluation {
  IndexSet set;
  SquaredMagnitude value;
};

struct ErrorBoundVerdict {
  bool has_error_bound = false;
  std::optional<Certificate> certificate;  ///< present iff !has_error_bound
  /// Exact sigma(A,b)^2; absent when there is no error bound or when phi never
  /// becomes positive (the constant is then +infinity).
  std::optional<Scalar> sigma_sq;
  std::size_t checked_sets = 0;
  std::vector<SetEvaluation> evaluations;
};

struct ErrorBoundOptions {
  /// Evaluate every realizable set rather than only the inclusion-maximal ones.
  bool full_enumeration = false;
};

ErrorBoundVerdict check_error_bound(const InequalitySystem& sys, ErrorBoundOptions opts = {});

struct StabilityVerdict {
  bool stable = false;
  std::optional<IndexSet> violating_set;  ///< first zero-level set with v = 0
  /// min over zero-level active sets of v(I)^2; absent when that family is empty.
  std::optional<Scalar> lower_bound_sq;
  std::size_t checked_sets = 0;
  std::vector<SetEvaluation> evaluations;
};

StabilityVerdict check_stability(const InequalitySystem& sys);

/// sigma(A,b)^2 or one of the two non-finite outcomes.
struct HoffmanConstant {
  enum class Kind { Finite, NoErrorBound, Infinite };
  Kind kind = Kind::NoErrorBound;
  Scalar sigma_sq;  ///< meaningful only when kind == Finite

  double approx() const;
};

HoffmanConstant hoffman_exact(const InequalitySystem& sys);

/// Polynomial-time check by direct substitution; false on malformed input.
bool verify_certificate(const InequalitySystem& sys, const Certificate& cert);

/// Shift every row by epsilon*u and every offset by epsilon*u^T x_bar.
struct Perturbation {
  Scalar epsilon;
  Vec u;      ///< |u|^2 <= 1
  Vec x_bar;  ///< phi(x_bar) == 0
};

/// Throws std::invalid_argument when epsilon < 0, |u|^2 > 1, or x_bar is
/// not a boundary point (phi(x_bar) != 0).
InequalitySystem perturb(const InequalitySystem& sys, const Perturbation& p);

struct Projection {
  Vec point;
  Scalar dist_sq;
};

/// Exact Euclidean projection of x onto P = {y : A y <= b}. Enumerates the
/// linearly independent row subsets of size <= n as candidate faces.
/// Returns nullopt when P is empty.
std::optional<Projection> project_onto_polyhedron(const InequalitySystem& sys, const Vec& x);

/// phi_+(x)^2 / d(x, P)^2. Throws std::invalid_argument when x is feasible
/// or P is empty.
Scalar perturbation_ratio(const InequalitySystem& sys, const Vec& x);

/// m x m identity with b = 0: every non-empty subset is realizable at both
/// levels, so the families have 2^m - 1 members.
InequalitySystem gen_worstcase(std::size_t m);

}  // namespace hoffman

#endif  // HOFFMAN_ANALYZER_HPP
