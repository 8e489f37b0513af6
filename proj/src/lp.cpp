#include "hoffman/lp.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace hoffman {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void check_dimensions(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  for (const auto& c : lp.equalities) {
    if (c.coeffs.dim() != n) throw std::invalid_argument("equality row has wrong dimension");
  }
  for (const auto& c : lp.inequalities) {
    if (c.coeffs.dim() != n) throw std::invalid_argument("inequality row has wrong dimension");
  }
  if (!lp.lower_bounds.empty() && lp.lower_bounds.size() != n) {
    throw std::invalid_argument("lower_bounds must be empty or have one entry per variable");
  }
}

// Dense tableau over the standard form  A_hat z_hat = b_hat, z_hat >= 0.
//
// Columns: [structural | slack | artificial]. Each original variable maps to
// one shifted column (bounded) or a +/- pair (free).
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : lp_(lp) {
    const std::size_t n = lp.num_vars();
    pos_col_.assign(n, kNone);
    neg_col_.assign(n, kNone);
    shift_.assign(n, Scalar());
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const bool bounded = !lp.lower_bounds.empty() && lp.lower_bounds[j].has_value();
      pos_col_[j] = col++;
      if (bounded) {
        shift_[j] = *lp.lower_bounds[j];
      } else {
        neg_col_[j] = col++;
      }
    }
    structural_ = col;

    const std::size_t neq = lp.equalities.size();
    const std::size_t nineq = lp.inequalities.size();
    rows_ = neq + nineq;
    slack_start_ = structural_;
    art_start_ = slack_start_ + nineq;

    row_sign_.assign(rows_, 1);
    init_col_.assign(rows_, kNone);
    std::size_t artificials = 0;
    std::vector<Scalar> adjusted(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      const Constraint& c = constraint(r);
      Scalar b = c.rhs;
      for (std::size_t j = 0; j < n; ++j) {
        if (!shift_[j].is_zero() && !c.coeffs[j].is_zero()) b -= c.coeffs[j] * shift_[j];
      }
      adjusted[r] = b;
      if (b.sign() < 0) row_sign_[r] = -1;
      const bool slack_basic = r >= neq && row_sign_[r] > 0;
      if (!slack_basic) ++artificials;
    }
    cols_ = art_start_ + artificials;

    t_.assign(rows_, std::vector<Scalar>(cols_));
    rhs_.assign(rows_, Scalar());
    basis_.assign(rows_, kNone);
    std::size_t next_art = art_start_;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Constraint& c = constraint(r);
      const Scalar s(row_sign_[r]);
      for (std::size_t j = 0; j < n; ++j) {
        if (c.coeffs[j].is_zero()) continue;
        Scalar v = row_sign_[r] > 0 ? c.coeffs[j] : -c.coeffs[j];
        t_[r][pos_col_[j]] = v;
        if (neg_col_[j] != kNone) t_[r][neg_col_[j]] = -v;
      }
      rhs_[r] = row_sign_[r] > 0 ? adjusted[r] : -adjusted[r];
      if (r >= neq) t_[r][slack_start_ + (r - neq)] = s;
      if (r >= neq && row_sign_[r] > 0) {
        init_col_[r] = slack_start_ + (r - neq);
      } else {
        init_col_[r] = next_art;
        t_[r][next_art++] = 1;
      }
      basis_[r] = init_col_[r];
    }
  }

  bool has_artificials() const { return cols_ > art_start_; }

  // Phase I: maximize -sum(artificials). Returns true when feasible.
  bool phase_one() {
    if (!has_artificials()) return true;
    std::vector<Scalar> cost(cols_);
    for (std::size_t j = art_start_; j < cols_; ++j) cost[j] = -1;
    run(cost, cols_);
    Scalar value;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] >= art_start_) value += rhs_[r];
    }
    phase_one_cost_ = std::move(cost);
    return value.is_zero();
  }

  FarkasCertificate farkas() const {
    // pi = c_B^T B^{-1}; the columns of B^{-1} are the current columns of
    // the initial identity basis.
    std::vector<Scalar> pi(rows_);
    for (std::size_t k = 0; k < rows_; ++k) {
      for (std::size_t r = 0; r < rows_; ++r) {
        const Scalar& cb = phase_one_cost_[basis_[r]];
        const Scalar& binv = t_[r][init_col_[k]];
        if (!cb.is_zero() && !binv.is_zero()) pi[k] += cb * binv;
      }
    }
    const std::size_t neq = lp_.equalities.size();
    const std::size_t n = lp_.num_vars();
    FarkasCertificate cert{Vec(neq), Vec(lp_.inequalities.size()), Vec(n)};
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar u = row_sign_[r] > 0 ? pi[r] : -pi[r];
      if (r < neq) {
        cert.eq_multipliers[r] = u;
      } else {
        cert.ineq_multipliers[r - neq] = u;
      }
      const Constraint& c = constraint(r);
      for (std::size_t j = 0; j < n; ++j) {
        if (neg_col_[j] == kNone && !c.coeffs[j].is_zero()) cert.bound_multipliers[j] += u * c.coeffs[j];
      }
    }
    return cert;
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < art_start_) continue;
      for (std::size_t j = 0; j < art_start_; ++j) {
        if (!t_[r][j].is_zero()) {
          pivot(r, j);
          break;
        }
      }
      // A row with no structural entry left is redundant and stays inert.
    }
  }

  // Phase II on the original objective. Returns kNone at optimum, or the
  // entering column along which the objective is unbounded.
  std::size_t phase_two() {
    std::vector<Scalar> cost(cols_);
    for (std::size_t j = 0; j < lp_.num_vars(); ++j) {
      cost[pos_col_[j]] = lp_.objective[j];
      if (neg_col_[j] != kNone) cost[neg_col_[j]] = -lp_.objective[j];
    }
    return run(cost, art_start_);
  }

  Vec point() const {
    std::vector<Scalar> z(cols_);
    for (std::size_t r = 0; r < rows_; ++r) z[basis_[r]] = rhs_[r];
    Vec x(lp_.num_vars());
    for (std::size_t j = 0; j < x.dim(); ++j) {
      x[j] = shift_[j] + z[pos_col_[j]];
      if (neg_col_[j] != kNone) x[j] -= z[neg_col_[j]];
    }
    return x;
  }

  Vec ray(std::size_t entering) const {
    std::vector<Scalar> d(cols_);
    d[entering] = 1;
    for (std::size_t r = 0; r < rows_; ++r) d[basis_[r]] = -t_[r][entering];
    Vec x(lp_.num_vars());
    for (std::size_t j = 0; j < x.dim(); ++j) {
      x[j] = d[pos_col_[j]];
      if (neg_col_[j] != kNone) x[j] -= d[neg_col_[j]];
    }
    return x;
  }

 private:
  const Constraint& constraint(std::size_t r) const {
    const std::size_t neq = lp_.equalities.size();
    return r < neq ? lp_.equalities[r] : lp_.inequalities[r - neq];
  }

  // Bland's rule simplex over columns [0, allowed). Maximizes cost^T z.
  std::size_t run(const std::vector<Scalar>& cost, std::size_t allowed) {
    std::vector<bool> in_basis(cols_, false);
    for (auto b : basis_) in_basis[b] = true;

    std::vector<Scalar> d(cost);  // reduced costs
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& cb = cost[basis_[r]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!t_[r][j].is_zero()) d[j] -= cb * t_[r][j];
      }
    }

    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (!in_basis[j] && d[j].sign() > 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return kNone;

      std::size_t leave = kNone;
      Scalar best;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (t_[r][enter].sign() <= 0) continue;
        Scalar ratio = rhs_[r] / t_[r][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return enter;

      in_basis[basis_[leave]] = false;
      in_basis[enter] = true;
      pivot(leave, enter);
      const Scalar f = d[enter];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!t_[leave][j].is_zero()) d[j] -= f * t_[leave][j];
      }
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = t_[r];
    const Scalar inv = Scalar(1) / prow[c];
    for (auto& v : prow) {
      if (!v.is_zero()) v *= inv;
    }
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || t_[i][c].is_zero()) continue;
      const Scalar f = t_[i][c];
      auto& row = t_[i];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!prow[j].is_zero()) row[j] -= f * prow[j];
      }
      if (!rhs_[r].is_zero()) rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  const LinearProgram& lp_;
  std::vector<std::size_t> pos_col_, neg_col_;
  std::vector<Scalar> shift_;
  std::size_t structural_ = 0, slack_start_ = 0, art_start_ = 0, rows_ = 0, cols_ = 0;
  std::vector<int> row_sign_;
  std::vector<std::size_t> init_col_;
  std::vector<std::vector<Scalar>> t_;
  std::vector<Scalar> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Scalar> phase_one_cost_;
};

}  // namespace

LpOutcome solve_lp(const LinearProgram& lp) {
  check_dimensions(lp);
  Tableau tab(lp);
  LpOutcome out;
  if (!tab.phase_one()) {
    out.status = LpStatus::Infeasible;
    out.farkas = tab.farkas();
    return out;
  }
  tab.drive_out_artificials();
  const std::size_t unbounded_col = tab.phase_two();
  out.feasible_point = tab.point();
  if (unbounded_col != kNone) {
    out.status = LpStatus::Unbounded;
    out.witness = tab.ray(unbounded_col);
    return out;
  }
  out.status = LpStatus::Optimal;
  out.witness = out.feasible_point;
  out.optimal_value = lp.objective.dot(out.witness);
  return out;
}

bool satisfies(const LinearProgram& lp, const Vec& z) {
  if (z.dim() != lp.num_vars()) return false;
  for (const auto& c : lp.equalities) {
    if (c.coeffs.dot(z) != c.rhs) return false;
  }
  for (const auto& c : lp.inequalities) {
    if (c.coeffs.dot(z) > c.rhs) return false;
  }
  for (std::size_t j = 0; j < lp.lower_bounds.size(); ++j) {
    if (lp.lower_bounds[j] && z[j] < *lp.lower_bounds[j]) return false;
  }
  return true;
}

bool verify_farkas(const LinearProgram& lp, const FarkasCertificate& cert) {
  const std::size_t n = lp.num_vars();
  if (cert.eq_multipliers.dim() != lp.equalities.size() ||
      cert.ineq_multipliers.dim() != lp.inequalities.size() || cert.bound_multipliers.dim() != n) {
    return false;
  }
  Vec combo(n);
  Scalar rhs;
  for (std::size_t r = 0; r < lp.equalities.size(); ++r) {
    combo += lp.equalities[r].coeffs * cert.eq_multipliers[r];
    rhs += lp.equalities[r].rhs * cert.eq_multipliers[r];
  }
  for (std::size_t r = 0; r < lp.inequalities.size(); ++r) {
    if (cert.ineq_multipliers[r].sign() < 0) return false;
    combo += lp.inequalities[r].coeffs * cert.ineq_multipliers[r];
    rhs += lp.inequalities[r].rhs * cert.ineq_multipliers[r];
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Scalar& mu = cert.bound_multipliers[j];
    const bool bounded = !lp.lower_bounds.empty() && lp.lower_bounds[j].has_value();
    if (!bounded) {
      if (!mu.is_zero()) return false;
      continue;
    }
    if (mu.sign() < 0) return false;
    combo[j] -= mu;
    rhs -= *lp.lower_bounds[j] * mu;
  }
  return combo.is_zero() && rhs.sign() < 0;
}

Feasibility feasible(const std::vector<Constraint>& eqs, const std::vector<Constraint>& ineqs,
                     std::size_t num_vars) {
  LinearProgram lp{Vec(num_vars), eqs, ineqs, {}};
  const LpOutcome res = solve_lp(lp);
  Feasibility out;
  if (res.status == LpStatus::Infeasible) {
    out.farkas = res.farkas;
    return out;
  }
  out.feasible = true;
  out.point = res.feasible_point;
  return out;
}

}  // namespace hoffman
