#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "hoffman/linalg.hpp"
#include "oracles.hpp"

using hoffman::Mat;
using hoffman::Scalar;
using hoffman::Vec;

TEST_CASE("vector basics") {
  const Vec a{Scalar(1), Scalar(2)}, b{Scalar(3), Scalar(-1)};
  CHECK(a.dot(b) == Scalar(1));
  CHECK((a + b) == Vec{Scalar(4), Scalar(1)});
  CHECK(a.norm_sq() == Scalar(5));
  CHECK_THROWS_AS(a.dot(Vec(3)), std::invalid_argument);
  CHECK(Vec(3).is_zero());
}

TEST_CASE("rank") {
  CHECK(rank(Mat({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}})) == 1);
  CHECK(rank(Mat({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(1), Scalar(1)}})) == 2);
  CHECK(rank(Mat(2, 3)) == 0);
}

TEST_CASE("solve_linear classifies the system") {
  const Mat m({{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(-1)}});
  const auto s = solve_linear(m, Vec{Scalar(3), Scalar(1)});
  CHECK(s.kind == hoffman::SolveKind::Unique);
  CHECK(s.solution == Vec{Scalar(2), Scalar(1)});

  const Mat dup({{Scalar(1), Scalar(1)}, {Scalar(2), Scalar(2)}});
  CHECK(solve_linear(dup, Vec{Scalar(1), Scalar(3)}).kind == hoffman::SolveKind::Inconsistent);
  const auto under = solve_linear(dup, Vec{Scalar(1), Scalar(2)});
  CHECK(under.kind == hoffman::SolveKind::Underdetermined);
  CHECK(dup.apply(under.solution) == Vec{Scalar(1), Scalar(2)});
  CHECK_THROWS_AS(solve_linear(dup, Vec(3)), std::invalid_argument);
}

TEST_CASE("null space vectors are annihilated and independent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + trial % 3, c = 1 + (trial / 3) % 4;
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(oracle::random_vec(rng, c));
    const Mat m(rows, c);
    const auto ns = null_space(m);
    CHECK(ns.size() + rank(m) == c);  // rank-nullity
    for (const auto& v : ns) CHECK(m.apply(v).is_zero());
    if (!ns.empty()) CHECK(rank(Mat(ns, c)) == ns.size());
  }
}

TEST_CASE("affine hull dimension") {
  const std::vector<Vec> one{Vec{Scalar(1), Scalar(1)}};
  CHECK(hoffman::affine_hull_dim(one) == 0);
  const std::vector<Vec> line{Vec{Scalar(0), Scalar(0)}, Vec{Scalar(1), Scalar(1)}, Vec{Scalar(2), Scalar(2)}};
  CHECK(hoffman::affine_hull_dim(line) == 1);
  const std::vector<Vec> tri{Vec{Scalar(1), Scalar(0)}, Vec{Scalar(0), Scalar(1)}, Vec{Scalar(-1), Scalar(-1)}};
  CHECK(hoffman::affine_hull_dim(tri) == 2);
  CHECK_THROWS_AS(hoffman::affine_hull_dim(std::vector<Vec>{}), std::invalid_argument);
}
