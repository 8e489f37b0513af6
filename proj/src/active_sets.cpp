#include "hoffman/active_sets.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "hoffman/combinatorics.hpp"
#include "hoffman/lp.hpp"
#include "hoffman/parallel.hpp"

namespace hoffman {

InequalitySystem::InequalitySystem(Mat a, Vec b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() == 0) throw std::invalid_argument("system needs at least one inequality");
  if (a_.cols() == 0) throw std::invalid_argument("system needs dimension n >= 1");
  if (b_.dim() != a_.rows()) {
    throw std::invalid_argument("b has " + std::to_string(b_.dim()) + " entries for " +
                                std::to_string(a_.rows()) + " rows");
  }
}

Vec InequalitySystem::residuals(const Vec& x) const {
  if (x.dim() != n()) {
    throw std::invalid_argument("point has dimension " + std::to_string(x.dim()) + ", expected " +
                                std::to_string(n()));
  }
  Vec r = a_.apply(x);
  r -= b_;
  return r;
}

IndexSet::IndexSet(std::vector<std::size_t> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("index set must be non-empty");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

IndexSet IndexSet::from_mask(std::uint64_t mask) {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < 64; ++i) {
    if (mask & (std::uint64_t{1} << i)) m.push_back(i);
  }
  return IndexSet(std::move(m));
}

bool IndexSet::contains(std::size_t i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

std::uint64_t IndexSet::mask() const {
  std::uint64_t mask = 0;
  for (auto i : members_) {
    if (i >= 64) throw std::out_of_range("index too large for a mask");
    mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::vector<std::size_t> IndexSet::one_based() const {
  std::vector<std::size_t> out(members_);
  for (auto& i : out) ++i;
  return out;
}

std::vector<Vec> select_rows(const InequalitySystem& sys, const IndexSet& set) {
  std::vector<Vec> rows;
  rows.reserve(set.size());
  for (auto i : set.members()) {
    if (i >= sys.m()) throw std::out_of_range("index set refers to a missing row");
    rows.push_back(sys.row(i));
  }
  return rows;
}

Scalar phi(const InequalitySystem& sys, const Vec& x) {
  const Vec r = sys.residuals(x);
  Scalar best = r[0];
  for (std::size_t i = 1; i < r.dim(); ++i) {
    if (r[i] > best) best = r[i];
  }
  return best;
}

IndexSet active_set(const InequalitySystem& sys, const Vec& x) {
  const Vec r = sys.residuals(x);
  Scalar best = r[0];
  for (std::size_t i = 1; i < r.dim(); ++i) {
    if (r[i] > best) best = r[i];
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < r.dim(); ++i) {
    if (r[i] == best) out.push_back(i);
  }
  return IndexSet(std::move(out));
}

bool equal_value_consistent(const InequalitySystem& sys, const IndexSet& set, Level level) {
  const std::size_t n = sys.n();
  const std::size_t width = level == Level::Positive ? n + 1 : n;
  Mat m(0, width);
  Vec rhs(set.size());
  std::size_t r = 0;
  for (auto i : set.members()) {
    Vec row(width);
    for (std::size_t j = 0; j < n; ++j) row[j] = sys.row(i)[j];
    if (level == Level::Positive) row[n] = -1;
    m.append_row(std::move(row));
    rhs[r++] = sys.b()[i];
  }
  return solve_linear(m, rhs).consistent();
}

Realization realizability(const InequalitySystem& sys, const IndexSet& set, Level level) {
  if (set.size() == 0) throw std::invalid_argument("realizability needs a non-empty index set");
  const std::size_t n = sys.n();
  // Variables: x (n), then t for the positive level, then the margin s.
  const bool positive = level == Level::Positive;
  const std::size_t t_col = n;
  const std::size_t s_col = positive ? n + 1 : n;
  const std::size_t width = s_col + 1;

  LinearProgram lp;
  lp.objective = Vec(width);
  lp.objective[s_col] = 1;
  for (std::size_t i = 0; i < sys.m(); ++i) {
    Vec row(width);
    for (std::size_t j = 0; j < n; ++j) row[j] = sys.row(i)[j];
    if (positive) row[t_col] = -1;
    if (set.contains(i)) {
      lp.equalities.push_back({std::move(row), sys.b()[i]});
    } else {
      row[s_col] = 1;
      lp.inequalities.push_back({std::move(row), sys.b()[i]});
    }
  }
  if (positive) {
    Vec row(width);  // s <= t
    row[s_col] = 1;
    row[t_col] = -1;
    lp.inequalities.push_back({std::move(row), Scalar()});
  }
  // Capping the margin keeps the LP bounded; only the sign of s* matters.
  Vec cap(width);
  cap[s_col] = 1;
  lp.inequalities.push_back({std::move(cap), Scalar(1)});

  const LpOutcome res = solve_lp(lp);
  Realization out;
  if (res.status != LpStatus::Optimal || res.optimal_value.sign() <= 0) return out;
  out.realizable = true;
  out.witness = Vec(n);
  for (std::size_t j = 0; j < n; ++j) out.witness[j] = res.witness[j];
  return out;
}

const Vec* ActiveSetFamily::witness_for(const IndexSet& set) const {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i] == set) return &witnesses[i];
  }
  return nullptr;
}

ActiveSetFamily enumerate(const InequalitySystem& sys, Level level) {
  const std::size_t m = sys.m();
  if (m > kMaxEnumerableRows) {
    throw std::invalid_argument("enumerate supports at most " + std::to_string(kMaxEnumerableRows) +
                                " rows");
  }
  ActiveSetFamily fam;
  fam.level = level;
  std::vector<std::uint64_t> cores;  // inconsistent equal-value systems

  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<IndexSet> frontier;
    for_each_combination(m, k, [&](const std::vector<std::size_t>& idx) {
      std::uint64_t mask = 0;
      for (auto i : idx) mask |= std::uint64_t{1} << i;
      for (auto c : cores) {
        if ((mask & c) == c) {
          ++fam.stats.pruned;
          return true;
        }
      }
      frontier.emplace_back(idx);
      return true;
    });
    if (frontier.empty()) break;

    std::vector<char> consistent(frontier.size());
    parallel_for(frontier.size(), [&](std::size_t i) {
      consistent[i] = equal_value_consistent(sys, frontier[i], level) ? 1 : 0;
    });
    fam.stats.consistency_checks += frontier.size();

    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      if (consistent[i]) {
        live.push_back(i);
      } else {
        cores.push_back(frontier[i].mask());
      }
    }
    // Every (k+1)-set contains a k-set; if none of those is consistent the
    // whole up-set is pruned.
    if (live.empty()) break;

    std::vector<Realization> results(live.size());
    parallel_for(live.size(), [&](std::size_t i) {
      results[i] = realizability(sys, frontier[live[i]], level);
    });
    fam.stats.realizability_lps += live.size();
    for (std::size_t i = 0; i < live.size(); ++i) {
      if (!results[i].realizable) continue;
      fam.sets.push_back(frontier[live[i]]);
      fam.witnesses.push_back(std::move(results[i].witness));
    }
  }
  return fam;
}

std::vector<IndexSet> maximal_sets(const ActiveSetFamily& family) {
  std::vector<std::uint64_t> masks;
  masks.reserve(family.sets.size());
  for (const auto& s : family.sets) masks.push_back(s.mask());
  std::vector<IndexSet> out;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < masks.size() && !dominated; ++j) {
      dominated = j != i && (masks[i] & masks[j]) == masks[i] && masks[i] != masks[j];
    }
    if (!dominated) out.push_back(family.sets[i]);
  }
  return out;
}

}  // namespace hoffman
