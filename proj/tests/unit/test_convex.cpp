#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "hoffman/convex.hpp"
#include "hoffman/sampling.hpp"
#include "oracles.hpp"

using hoffman::Scalar;
using hoffman::Sign;
using hoffman::Vec;

namespace {

Vec v2(long a, long b) { return Vec{Scalar(a), Scalar(b)}; }

std::vector<Vec> cross2() { return {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)}; }

}  // namespace

TEST_CASE("sign examples") {
  CHECK(hoffman::minmax_sign(std::vector<Vec>{v2(1, 0), v2(0, 1)}) == Sign::Negative);
  CHECK(hoffman::minmax_sign(std::vector<Vec>{v2(1, 1), v2(-1, -1)}) == Sign::Zero);
  CHECK(hoffman::minmax_sign(cross2()) == Sign::Positive);
  CHECK_THROWS_AS(hoffman::minmax_sign(std::vector<Vec>{}), std::invalid_argument);
}

TEST_CASE("nearest point examples") {
  auto p = hoffman::min_norm_point_sq(std::vector<Vec>{v2(1, 0), v2(0, 1)});
  CHECK(p.point == Vec{Scalar(1, 2), Scalar(1, 2)});
  CHECK(p.dist_sq == Scalar(1, 2));
  p = hoffman::min_norm_point_sq(std::vector<Vec>{v2(2, 0)});
  CHECK(p.point == v2(2, 0));
  CHECK(p.dist_sq == Scalar(4));
  p = hoffman::min_norm_point_sq(std::vector<Vec>{v2(1, 1), v2(-1, -1)});
  CHECK(p.point.is_zero());
  CHECK(p.dist_sq == Scalar(0));
}

TEST_CASE("inradius examples") {
  CHECK(hoffman::inradius_at_origin_sq(cross2()) == Scalar(1, 2));
  std::vector<Vec> scaled;
  for (const auto& d : cross2()) scaled.push_back(d * Scalar(3));
  CHECK(hoffman::inradius_at_origin_sq(scaled) == Scalar(9, 2));
  CHECK(hoffman::inradius_at_origin_sq(std::vector<Vec>{v2(1, 1), v2(1, -1), v2(-1, 1), v2(-1, -1)}) == Scalar(1));
  CHECK_THROWS_AS(hoffman::inradius_at_origin_sq(std::vector<Vec>{v2(1, 1), v2(-1, -1)}), std::invalid_argument);
}

TEST_CASE("minmax_value_sq examples") {
  // The segment from (1,1) to (-2,1) is nearest the origin at (0,1).
  auto v = hoffman::minmax_value_sq(std::vector<Vec>{v2(1, 1), v2(-2, 1)});
  CHECK(v.sign == Sign::Negative);
  CHECK(v.value_sq == Scalar(1));
  v = hoffman::minmax_value_sq(std::vector<Vec>{v2(-2, 1), v2(1, -2)});
  CHECK(v.sign == Sign::Negative);
  CHECK(v.value_sq == Scalar(1, 2));
  v = hoffman::minmax_value_sq(std::vector<Vec>{v2(1, 1), v2(-1, -1)});
  CHECK(v.sign == Sign::Zero);
  CHECK(v.value_sq == Scalar(0));
  v = hoffman::minmax_value_sq(std::vector<Vec>{Vec{Scalar(3), Scalar(0)}});
  CHECK(v.sign == Sign::Negative);
  CHECK(v.value_sq == Scalar(9));
  CHECK(v.approx() == doctest::Approx(-3.0));
}

TEST_CASE("signed ordering of magnitudes") {
  const hoffman::SquaredMagnitude neg{Sign::Negative, Scalar(4)}, zero{Sign::Zero, Scalar(0)},
      small{Sign::Positive, Scalar(1, 4)}, big{Sign::Positive, Scalar(1)}, far{Sign::Negative, Scalar(9)};
  CHECK(far < neg);
  CHECK(neg < zero);
  CHECK(zero < small);
  CHECK(small < big);
}

TEST_CASE("trichotomy agrees with the h-space oracle") {
  const auto sets = oracle::random_point_sets(400, 101);
  int counts[3] = {0, 0, 0};
  for (const auto& d : sets) {
    const Sign s = hoffman::minmax_sign(d);
    CHECK(s == oracle::gordan_sign(d));
    CHECK(hoffman::origin_in_hull(d).contains_origin == (s != Sign::Negative));
    const auto v = hoffman::minmax_value_sq(d);
    CHECK(v.sign == s);
    CHECK(v.value_sq.is_zero() == (s == Sign::Zero));
    ++counts[static_cast<int>(s)];
  }
  // The corpus must exercise every branch.
  CHECK(counts[0] > 20);
  CHECK(counts[1] > 20);
  CHECK(counts[2] > 20);
}

TEST_CASE("hull multipliers are a convex combination giving the origin") {
  for (const auto& d : oracle::random_point_sets(200, 5)) {
    const auto h = hoffman::origin_in_hull(d);
    if (!h.contains_origin) continue;
    REQUIRE(h.multipliers.dim() == d.size());
    Scalar total(0);
    Vec combo(d.front().dim());
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(h.multipliers[i].sign() >= 0);
      total += h.multipliers[i];
      combo += d[i] * h.multipliers[i];
    }
    CHECK(total == Scalar(1));
    CHECK(combo.is_zero());
  }
}

// p is the nearest point of conv(D) iff p is in conv(D) and p.(d - p) >= 0
// for every d in D.
TEST_CASE("nearest point satisfies the optimality conditions exactly") {
  for (const auto& d : oracle::random_point_sets(300, 17)) {
    const auto np = hoffman::min_norm_point_sq(d);
    CHECK(np.dist_sq == np.point.norm_sq());
    for (const auto& x : d) CHECK((x - np.point).dot(np.point).sign() >= 0);
    std::vector<Vec> shifted;
    for (const auto& x : d) shifted.push_back(x - np.point);
    CHECK(hoffman::origin_in_hull(shifted).contains_origin);
    const auto v = hoffman::minmax_value_sq(d);
    if (v.sign == Sign::Negative) CHECK(v.value_sq == np.dist_sq);
  }
}

TEST_CASE("positive magnitudes match closed forms in one and two dimensions") {
  std::mt19937_64 rng(3);
  int checked_1d = 0, checked_2d = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 2, k = 2 + trial % 5;
    std::vector<Vec> d;
    for (std::size_t i = 0; i < k; ++i) d.push_back(oracle::random_vec(rng, n));
    const auto v = hoffman::minmax_value_sq(d);
    if (v.sign != Sign::Positive) continue;
    if (n == 1) {
      Scalar lo = d[0][0], hi = d[0][0];
      for (const auto& x : d) {
        lo = std::min(lo, x[0]);
        hi = std::max(hi, x[0]);
      }
      const Scalar r = std::min(-lo, hi);
      CHECK(v.value_sq == r * r);
      ++checked_1d;
    } else {
      CHECK(v.value_sq == oracle::polygon_inradius_sq(d));
      ++checked_2d;
    }
  }
  CHECK(checked_1d > 20);
  CHECK(checked_2d > 20);
}

TEST_CASE("scaling by c multiplies value_sq by c^2") {
  const auto sets = oracle::random_point_sets(150, 29);
  for (const auto& d : sets) {
    const auto base = hoffman::minmax_value_sq(d);
    for (const Scalar c : {Scalar(1, 3), Scalar(2), Scalar(7, 4)}) {
      std::vector<Vec> cd;
      for (const auto& x : d) cd.push_back(x * c);
      const auto scaled = hoffman::minmax_value_sq(cd);
      CHECK(scaled.sign == base.sign);
      CHECK(scaled.value_sq == base.value_sq * c * c);
    }
  }
}

TEST_CASE("duplicates do not change the answer") {
  for (const auto& d : oracle::random_point_sets(100, 41)) {
    auto doubled = d;
    doubled.insert(doubled.end(), d.begin(), d.end());
    CHECK(hoffman::minmax_value_sq(doubled) == hoffman::minmax_value_sq(d));
    CHECK(hoffman::dedup_points(doubled).size() == hoffman::dedup_points(d).size());
  }
}

TEST_CASE("sampling is an upper bound on the exact value") {
  hoffman::SampleConfig cfg;
  cfg.sample_count = 20000;
  for (const auto& d : oracle::random_point_sets(60, 53)) {
    const auto v = hoffman::minmax_value_sq(d);
    CHECK(hoffman::sample_minmax(d, cfg) >= v.approx() - 1e-12);
  }
}
