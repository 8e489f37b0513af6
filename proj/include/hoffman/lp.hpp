#ifndef HOFFMAN_LP_HPP
#define HOFFMAN_LP_HPP

#include <optional>
#include <vector>

#include "hoffman/linalg.hpp"

namespace hoffman {

/// One linear constraint row: coeffs^T z (= or <=) rhs.
struct Constraint {
  Vec coeffs;
  Scalar rhs;
};

/// maximize objective^T z subject to equalities, inequalities (<=), and
/// optional per-variable lower bounds. Variables without a bound are free.
struct LinearProgram {
  Vec objective;
  std::vector<Constraint> equalities;
  std::vector<Constraint> inequalities;
  /// Empty means every variable is free; otherwise one entry per variable.
  std::vector<std::optional<Scalar>> lower_bounds;

  std::size_t num_vars() const { return objective.dim(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Infeasibility proof for a LinearProgram in its original row order.
///
/// With y = eq_multipliers (free), w = ineq_multipliers (>= 0) and
/// mu = bound_multipliers (>= 0, zero on free variables):
///   E^T y + G^T w - mu = 0   and   f^T y + g^T w - l^T mu < 0.
/// Any feasible z would give 0 <= f^T y + g^T w - l^T mu, a contradiction.
struct FarkasCertificate {
  Vec eq_multipliers;
  Vec ineq_multipliers;
  Vec bound_multipliers;
};

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Scalar optimal_value;
  /// Optimal point when Optimal; an improving feasible ray when Unbounded.
  Vec witness;
  /// A feasible point; set for Optimal and Unbounded.
  Vec feasible_point;
  std::optional<FarkasCertificate> farkas;
};

/// Exact two-phase primal simplex with Bland's rule. Deterministic.
/// Throws std::invalid_argument on dimension mismatches.
LpOutcome solve_lp(const LinearProgram& lp);

/// Checks a Farkas certificate against the program by substitution.
bool verify_farkas(const LinearProgram& lp, const FarkasCertificate& cert);

/// True iff z satisfies every constraint and bound of lp exactly.
bool satisfies(const LinearProgram& lp, const Vec& z);

struct Feasibility {
  bool feasible = false;
  Vec point;                                ///< when feasible
  std::optional<FarkasCertificate> farkas;  ///< when infeasible
};

/// Feasibility of {E z = f, G z <= g} over free variables z.
Feasibility feasible(const std::vector<Constraint>& eqs, const std::vector<Constraint>& ineqs,
                     std::size_t num_vars);

}  // namespace hoffman

#endif  // HOFFMAN_LP_HPP
