#ifndef HOFFMAN_ACTIVE_SETS_HPP
#define HOFFMAN_ACTIVE_SETS_HPP

#include <cstdint>
#include <vector>

#include "hoffman/linalg.hpp"

namespace hoffman {

/// The system A x <= b with m >= 1 rows in dimension n >= 1.
class InequalitySystem {
 public:
  /// Throws std::invalid_argument on empty or inconsistent dimensions.
  InequalitySystem(Mat a, Vec b);

  std::size_t m() const { return a_.rows(); }
  std::size_t n() const { return a_.cols(); }
  const Mat& a() const { return a_; }
  const Vec& b() const { return b_; }
  const Vec& row(std::size_t i) const { return a_.row(i); }

  /// Residuals a_i^T x - b_i.
  Vec residuals(const Vec& x) const;

  friend bool operator==(const InequalitySystem&, const InequalitySystem&) = default;

 private:
  Mat a_;
  Vec b_;
};

/// Non-empty sorted set of row indices. Stored 0-based; emitted 1-based.
class IndexSet {
 public:
  IndexSet() = default;
  /// Sorts and deduplicates; throws std::invalid_argument when empty.
  explicit IndexSet(std::vector<std::size_t> members);
  static IndexSet from_mask(std::uint64_t mask);

  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(std::size_t i) const;
  std::uint64_t mask() const;
  std::vector<std::size_t> one_based() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> members_;
};

/// Rows of the system selected by an index set.
std::vector<Vec> select_rows(const InequalitySystem& sys, const IndexSet& set);

enum class Level { Positive, Zero };

/// phi(x) = max_i (a_i^T x - b_i).
Scalar phi(const InequalitySystem& sys, const Vec& x);

/// Indices attaining phi(x).
IndexSet active_set(const InequalitySystem& sys, const Vec& x);

struct Realization {
  bool realizable = false;
  Vec witness;  ///< x with active_set(x) == J at the requested level
};

/// Decides whether J is exactly the active set at some x with phi(x) > 0
/// (Positive) or phi(x) == 0 (Zero) by maximizing the strictness margin.
Realization realizability(const InequalitySystem& sys, const IndexSet& set, Level level);

/// Consistency of {a_i^T x - t = b_i, i in J} (Positive) or
/// {a_i^T x = b_i, i in J} (Zero). Inconsistency is inherited by supersets.
bool equal_value_consistent(const InequalitySystem& sys, const IndexSet& set, Level level);

struct EnumerationStats {
  std::size_t realizability_lps = 0;
  std::size_t consistency_checks = 0;
  std::size_t pruned = 0;
};

struct ActiveSetFamily {
  Level level = Level::Positive;
  /// By increasing cardinality, lexicographic within a cardinality.
  std::vector<IndexSet> sets;
  std::vector<Vec> witnesses;  ///< witnesses[i] realizes sets[i]
  EnumerationStats stats;

  const Vec* witness_for(const IndexSet& set) const;
};

/// Largest m accepted by enumerate (subsets are tracked as 64-bit masks).
inline constexpr std::size_t kMaxEnumerableRows = 63;

/// All realizable active sets at the given level, found by growing subsets
/// by cardinality and pruning every superset of an inconsistent core.
ActiveSetFamily enumerate(const InequalitySystem& sys, Level level);

/// Inclusion-maximal members of the family, in family order.
std::vector<IndexSet> maximal_sets(const ActiveSetFamily& family);

}  // namespace hoffman

#endif  // HOFFMAN_ACTIVE_SETS_HPP
