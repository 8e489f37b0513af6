#include "hoffman/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "hoffman/combinatorics.hpp"
#include "hoffman/lp.hpp"
#include "hoffman/parallel.hpp"

namespace hoffman {

namespace {

// Samples are split into a fixed number of chunks, each with its own
// generator, so the result does not depend on how chunks are scheduled.
constexpr std::size_t kChunks = 64;

std::mt19937_64 chunk_rng(std::uint64_t seed, std::size_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk)};
  return std::mt19937_64(seq);
}

template <typename ChunkFn>
double chunked_min(std::size_t total, ChunkFn&& fn) {
  std::vector<double> mins(kChunks, std::numeric_limits<double>::infinity());
  parallel_for(kChunks, [&](std::size_t c) {
    const std::size_t begin = total * c / kChunks;
    const std::size_t end = total * (c + 1) / kChunks;
    mins[c] = fn(c, begin, end);
  });
  return *std::min_element(mins.begin(), mins.end());
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct DenseSystem {
  std::vector<std::vector<double>> a;
  std::vector<double> b;

  explicit DenseSystem(const InequalitySystem& sys) {
    for (std::size_t i = 0; i < sys.m(); ++i) {
      a.push_back(sys.row(i).to_double());
      b.push_back(sys.b()[i].to_double());
    }
  }

  double phi(std::span<const double> x) const {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, dot(a[i], x) - b[i]);
    return best;
  }
};

// Candidate face: rows S with y = x - K (A_S x - b_S), K = A_S^T (A_S A_S^T)^{-1}
// computed exactly and rounded once.
struct FaceProjector {
  std::vector<std::size_t> rows;
  std::vector<std::vector<double>> k;  // n x |S|
};

std::vector<FaceProjector> face_projectors(const InequalitySystem& sys) {
  std::vector<FaceProjector> out;
  const std::size_t n = sys.n();
  for (std::size_t size = 1; size <= std::min(sys.m(), n); ++size) {
    for_each_combination(sys.m(), size, [&](const std::vector<std::size_t>& idx) {
      Mat gram(size, size);
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) gram(i, j) = sys.row(idx[i]).dot(sys.row(idx[j]));
      }
      // Columns of G^{-1} via unit right-hand sides.
      std::vector<Vec> inv_cols;
      for (std::size_t c = 0; c < size; ++c) {
        Vec e(size);
        e[c] = 1;
        const LinearSolution sol = solve_linear(gram, e);
        if (sol.kind != SolveKind::Unique) return true;
        inv_cols.push_back(sol.solution);
      }
      FaceProjector fp{idx, std::vector<std::vector<double>>(n, std::vector<double>(size))};
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < size; ++c) {
          Scalar v;
          for (std::size_t i = 0; i < size; ++i) v += sys.row(idx[i])[r] * inv_cols[c][i];
          fp.k[r][c] = v.to_double();
        }
      }
      out.push_back(std::move(fp));
      return true;
    });
  }
  return out;
}

double distance_to_polyhedron(const DenseSystem& sys, const std::vector<FaceProjector>& faces,
                              std::span<const double> x) {
  const std::size_t n = x.size();
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> y(n);
  std::vector<double> r;
  for (const auto& f : faces) {
    r.resize(f.rows.size());
    for (std::size_t i = 0; i < f.rows.size(); ++i) r[i] = dot(sys.a[f.rows[i]], x) - sys.b[f.rows[i]];
    double d2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double shift = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) shift += f.k[j][i] * r[i];
      y[j] = x[j] - shift;
      d2 += shift * shift;
    }
    if (d2 >= best * best) continue;
    bool feasible = true;
    for (std::size_t i = 0; i < sys.a.size() && feasible; ++i) {
      const double tol = 1e-9 * (1.0 + std::abs(sys.b[i]) + std::sqrt(dot(sys.a[i], sys.a[i])) *
                                                                 std::sqrt(dot(y, y)));
      feasible = dot(sys.a[i], y) - sys.b[i] <= tol;
    }
    if (feasible) best = std::sqrt(d2);
  }
  return best;
}

}  // namespace

double sample_minmax(std::span<const Vec> points, const SampleConfig& cfg) {
  if (points.empty()) throw std::invalid_argument("sample_minmax of an empty point list");
  if (cfg.sample_count == 0) throw std::invalid_argument("sample_count must be >= 1");
  const std::size_t n = points.front().dim();
  std::vector<std::vector<double>> d;
  for (const auto& p : points) d.push_back(p.to_double());

  return chunked_min(cfg.sample_count, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    auto rng = chunk_rng(cfg.seed, chunk);
    std::normal_distribution<double> gauss;
    std::vector<double> h(n);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t s = begin; s < end; ++s) {
      double norm = 0.0;
      do {
        norm = 0.0;
        for (auto& v : h) {
          v = gauss(rng);
          norm += v * v;
        }
      } while (norm == 0.0);
      norm = std::sqrt(norm);
      for (auto& v : h) v /= norm;
      double worst = -std::numeric_limits<double>::infinity();
      for (const auto& di : d) worst = std::max(worst, dot(di, h));
      best = std::min(best, worst);
    }
    return best;
  });
}

double directional_derivative(const InequalitySystem& sys, const Vec& x, std::span<const double> h) {
  if (h.size() != sys.n()) throw std::invalid_argument("direction has wrong dimension");
  const IndexSet active = active_set(sys, x);
  double best = -std::numeric_limits<double>::infinity();
  for (auto i : active.members()) best = std::max(best, dot(sys.row(i).to_double(), h));
  return best;
}

double difference_quotient(const InequalitySystem& sys, const Vec& x, std::span<const double> h, double t) {
  if (h.size() != sys.n()) throw std::invalid_argument("direction has wrong dimension");
  const DenseSystem dense(sys);
  const std::vector<double> x0 = x.to_double();
  std::vector<double> x1(x0);
  for (std::size_t j = 0; j < x1.size(); ++j) x1[j] += t * h[j];
  return (dense.phi(x1) - dense.phi(x0)) / t;
}

SigmaEstimate estimate_sigma(const InequalitySystem& sys, const SampleConfig& cfg) {
  if (cfg.sample_count == 0) throw std::invalid_argument("sample_count must be >= 1");
  if (!(cfg.box_radius > 0.0)) throw std::invalid_argument("box_radius must be positive");
  std::vector<Constraint> rows;
  for (std::size_t i = 0; i < sys.m(); ++i) rows.push_back({sys.row(i), sys.b()[i]});
  if (!feasible({}, rows, sys.n()).feasible) {
    throw std::invalid_argument("estimate_sigma needs a non-empty feasible set");
  }

  const DenseSystem dense(sys);
  const auto faces = face_projectors(sys);
  std::vector<std::size_t> infeasible_counts(kChunks, 0);
  const double est =
      chunked_min(cfg.sample_count, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        auto rng = chunk_rng(cfg.seed, chunk);
        std::uniform_real_distribution<double> coord(-cfg.box_radius, cfg.box_radius);
        std::vector<double> x(sys.n());
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t s = begin; s < end; ++s) {
          for (auto& v : x) v = coord(rng);
          const double value = dense.phi(x);
          if (!(value > 0.0)) continue;
          ++infeasible_counts[chunk];
          const double dist = distance_to_polyhedron(dense, faces, x);
          if (!(dist > 0.0) || !std::isfinite(dist)) continue;
          best = std::min(best, value / dist);
        }
        return best;
      });

  SigmaEstimate out;
  for (auto c : infeasible_counts) out.infeasible_samples += c;
  if (std::isfinite(est)) out.sigma = est;
  return out;
}

}  // namespace hoffman
