#include "hoffman/bench.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hoffman/analyzer.hpp"

namespace hoffman {

std::vector<BenchRow> run_bench(std::size_t m_lo, std::size_t m_hi, Level level, double min_total_seconds) {
  if (m_lo == 0 || m_lo > m_hi) throw std::invalid_argument("bench needs 1 <= a <= b");
  if (m_hi > kMaxEnumerableRows) throw std::invalid_argument("bench range exceeds the enumerable row limit");
  using clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  for (std::size_t m = m_lo; m <= m_hi; ++m) {
    const InequalitySystem sys = gen_worstcase(m);
    BenchRow row{m, 0, (std::uint64_t{1} << m) - 1, std::numeric_limits<double>::infinity(), 0};
    double spent = 0.0;
    do {
      const auto start = clock::now();
      const ActiveSetFamily fam = enumerate(sys, level);
      const double secs = std::chrono::duration<double>(clock::now() - start).count();
      row.family_size = fam.sets.size();
      row.seconds = std::min(row.seconds, secs);
      spent += secs;
      ++row.repeats;
    } while (spent < min_total_seconds);
    rows.push_back(row);
  }
  return rows;
}

GrowthAnalysis analyze_growth(const std::vector<BenchRow>& rows, std::size_t segments) {
  GrowthAnalysis out;
  if (segments == 0 || rows.size() < 2 * segments) return out;
  for (std::size_t s = 0; s < segments; ++s) {
    const std::size_t begin = rows.size() * s / segments;
    const std::size_t end = rows.size() * (s + 1) / segments;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = static_cast<double>(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
      const double x = std::log(static_cast<double>(rows[i].m));
      const double y = std::log(std::max(rows[i].seconds, 1e-9));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double denom = k * sxx - sx * sx;
    const double slope = denom > 0 ? (k * sxy - sx * sy) / denom : 0.0;
    out.segments.push_back({rows[begin].m, rows[end - 1].m, slope});
  }
  out.superpolynomial = true;
  for (std::size_t s = 1; s < out.segments.size(); ++s) {
    out.superpolynomial = out.superpolynomial && out.segments[s].loglog_slope > out.segments[s - 1].loglog_slope;
  }
  return out;
}

}  // namespace hoffman
