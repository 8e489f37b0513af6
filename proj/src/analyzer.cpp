#include "hoffman/analyzer.hpp"

#include <cmath>
#include <stdexcept>

#include "hoffman/combinatorics.hpp"
#include "hoffman/parallel.hpp"

namespace hoffman {

namespace {

std::vector<SetEvaluation> evaluate_sets(const InequalitySystem& sys, const std::vector<IndexSet>& sets) {
  std::vector<SetEvaluation> out(sets.size());
  parallel_for(sets.size(), [&](std::size_t i) {
    const auto rows = select_rows(sys, sets[i]);
    out[i] = SetEvaluation{sets[i], minmax_value_sq(rows)};
  });
  return out;
}

}  // namespace

ErrorBoundVerdict check_error_bound(const InequalitySystem& sys, ErrorBoundOptions opts) {
  const ActiveSetFamily fam = enumerate(sys, Level::Positive);
  const std::vector<IndexSet> sets = opts.full_enumeration ? fam.sets : maximal_sets(fam);

  ErrorBoundVerdict out;
  out.checked_sets = sets.size();
  out.evaluations = evaluate_sets(sys, sets);
  out.has_error_bound = true;
  for (const auto& ev : out.evaluations) {
    if (ev.value.sign == Sign::Negative) continue;
    out.has_error_bound = false;
    const auto rows = select_rows(sys, ev.set);
    HullMembership hull = origin_in_hull(rows);
    if (!hull.contains_origin) throw std::logic_error("non-negative min-max without hull membership");
    out.certificate = Certificate{*fam.witness_for(ev.set), ev.set, std::move(hull.multipliers)};
    break;
  }
  if (out.has_error_bound && !out.evaluations.empty()) {
    Scalar best = out.evaluations.front().value.value_sq;
    for (const auto& ev : out.evaluations) {
      if (ev.value.value_sq < best) best = ev.value.value_sq;
    }
    out.sigma_sq = best;
  }
  return out;
}

StabilityVerdict check_stability(const InequalitySystem& sys) {
  const ActiveSetFamily fam = enumerate(sys, Level::Zero);
  StabilityVerdict out;
  out.checked_sets = fam.sets.size();
  out.evaluations = evaluate_sets(sys, fam.sets);
  out.stable = true;
  for (const auto& ev : out.evaluations) {
    if (ev.value.sign == Sign::Zero && out.stable) {
      out.stable = false;
      out.violating_set = ev.set;
    }
    if (!out.lower_bound_sq || ev.value.value_sq < *out.lower_bound_sq) out.lower_bound_sq = ev.value.value_sq;
  }
  return out;
}

double HoffmanConstant::approx() const {
  switch (kind) {
    case Kind::Finite: return std::sqrt(sigma_sq.to_double());
    case Kind::NoErrorBound: return 0.0;
    case Kind::Infinite: return HUGE_VAL;
  }
  return 0.0;
}

HoffmanConstant hoffman_exact(const InequalitySystem& sys) {
  const ErrorBoundVerdict v = check_error_bound(sys);
  if (!v.has_error_bound) return {HoffmanConstant::Kind::NoErrorBound, Scalar()};
  if (!v.sigma_sq) return {HoffmanConstant::Kind::Infinite, Scalar()};
  return {HoffmanConstant::Kind::Finite, *v.sigma_sq};
}

bool verify_certificate(const InequalitySystem& sys, const Certificate& cert) {
  if (cert.point.dim() != sys.n()) return false;
  const auto& members = cert.active.members();
  if (members.empty() || members.back() >= sys.m()) return false;
  if (cert.hull_multipliers.dim() != members.size()) return false;

  if (phi(sys, cert.point).sign() <= 0) return false;
  if (!(active_set(sys, cert.point) == cert.active)) return false;

  Scalar total;
  Vec combo(sys.n());
  for (std::size_t k = 0; k < members.size(); ++k) {
    const Scalar& w = cert.hull_multipliers[k];
    if (w.sign() < 0) return false;
    total += w;
    combo += sys.row(members[k]) * w;
  }
  return total == Scalar(1) && combo.is_zero();
}

InequalitySystem perturb(const InequalitySystem& sys, const Perturbation& p) {
  if (p.epsilon.sign() < 0) throw std::invalid_argument("perturbation epsilon must be >= 0");
  if (p.u.dim() != sys.n() || p.x_bar.dim() != sys.n()) {
    throw std::invalid_argument("perturbation vectors must have dimension n");
  }
  if (p.u.norm_sq() > Scalar(1)) throw std::invalid_argument("perturbation direction must satisfy |u| <= 1");
  if (!phi(sys, p.x_bar).is_zero()) {
    throw std::invalid_argument("x_bar must lie on the boundary of the feasible set (phi(x_bar) = 0)");
  }
  const Vec shift = p.u * p.epsilon;
  const Scalar offset = shift.dot(p.x_bar);
  Mat a = sys.a();
  Vec b = sys.b();
  for (std::size_t i = 0; i < sys.m(); ++i) {
    a.row(i) += shift;
    b[i] += offset;
  }
  return InequalitySystem(std::move(a), std::move(b));
}

std::optional<Projection> project_onto_polyhedron(const InequalitySystem& sys, const Vec& x) {
  const Vec res = sys.residuals(x);
  bool inside = true;
  for (const auto& r : res) inside = inside && r.sign() <= 0;
  if (inside) return Projection{x, Scalar()};

  std::optional<Projection> best;
  const std::size_t max_size = std::min(sys.m(), sys.n());
  for (std::size_t size = 1; size <= max_size; ++size) {
    for_each_combination(sys.m(), size, [&](const std::vector<std::size_t>& idx) {
      // y = x - A_S^T G^{-1} (A_S x - b_S), G = A_S A_S^T.
      Mat gram(size, size);
      Vec rhs(size);
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i; j < size; ++j) {
          gram(i, j) = sys.row(idx[i]).dot(sys.row(idx[j]));
          gram(j, i) = gram(i, j);
        }
        rhs[i] = res[idx[i]];
      }
      const LinearSolution sol = solve_linear(gram, rhs);
      if (sol.kind != SolveKind::Unique) return true;
      Vec y = x;
      for (std::size_t i = 0; i < size; ++i) y -= sys.row(idx[i]) * sol.solution[i];
      const Vec ry = sys.residuals(y);
      for (const auto& r : ry) {
        if (r.sign() > 0) return true;
      }
      Scalar d = (y - x).norm_sq();
      if (!best || d < best->dist_sq) best = Projection{std::move(y), std::move(d)};
      return true;
    });
  }
  return best;
}

Scalar perturbation_ratio(const InequalitySystem& sys, const Vec& x) {
  const Scalar value = phi(sys, x);
  if (value.sign() <= 0) throw std::invalid_argument("perturbation_ratio needs an infeasible point");
  const auto proj = project_onto_polyhedron(sys, x);
  if (!proj) throw std::invalid_argument("perturbation_ratio: the feasible set is empty");
  return value * value / proj->dist_sq;
}

InequalitySystem gen_worstcase(std::size_t m) {
  if (m == 0) throw std::invalid_argument("gen_worstcase needs m >= 1");
  Mat a(m, m);
  for (std::size_t i = 0; i < m; ++i) a(i, i) = 1;
  return InequalitySystem(std::move(a), Vec(m));
}

}  // namespace hoffman
