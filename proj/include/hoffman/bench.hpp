#ifndef HOFFMAN_BENCH_HPP
#define HOFFMAN_BENCH_HPP

#include <cstdint>
#include <vector>

#include "hoffman/active_sets.hpp"

namespace hoffman {

struct BenchRow {
  std::size_t m = 0;
  std::size_t family_size = 0;
  std::uint64_t expected = 0;  ///< 2^m - 1
  double seconds = 0.0;        ///< best-of-repeats enumeration time
  std::size_t repeats = 0;
};

/// Enumerates the identity worst case for each m in [m_lo, m_hi].
/// Each timing is the minimum over repeats run until min_total_seconds of
/// wall time has been spent on that m (at least one run).
std::vector<BenchRow> run_bench(std::size_t m_lo, std::size_t m_hi, Level level,
                                double min_total_seconds = 0.05);

struct GrowthSegment {
  std::size_t m_first = 0;
  std::size_t m_last = 0;
  double loglog_slope = 0.0;  ///< least-squares slope of ln(time) against ln(m)
};

struct GrowthAnalysis {
  std::vector<GrowthSegment> segments;
  /// Slopes strictly increase across segments (a polynomial would flatten).
  bool superpolynomial = false;
};

/// Splits the rows into `segments` contiguous windows of near-equal size.
/// Needs at least two rows per window; otherwise superpolynomial is false.
GrowthAnalysis analyze_growth(const std::vector<BenchRow>& rows, std::size_t segments = 3);

}  // namespace hoffman

#endif  // HOFFMAN_BENCH_HPP
