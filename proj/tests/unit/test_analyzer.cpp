#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "hoffman/analyzer.hpp"
#include "hoffman/lp.hpp"
#include "oracles.hpp"

using hoffman::Certificate;
using hoffman::IndexSet;
using hoffman::InequalitySystem;
using hoffman::Mat;
using hoffman::Scalar;
using hoffman::Vec;

namespace {

InequalitySystem triangle() {
  return InequalitySystem(Mat({{Scalar(1), Scalar(1)}, {Scalar(-2), Scalar(1)}, {Scalar(1), Scalar(-2)}}),
                          Vec{Scalar(1), Scalar(2), Scalar(3)});
}

InequalitySystem coincident_pair() {
  return InequalitySystem(Mat({{Scalar(1), Scalar(1)}, {Scalar(-1), Scalar(-1)}}), Vec(2));
}

InequalitySystem infeasible_1d() {
  return InequalitySystem(Mat({{Scalar(1)}, {Scalar(-1)}}), Vec{Scalar(-1), Scalar(-1)});
}

// x - y must lie in the cone of the rows active at y.
bool is_projection(const InequalitySystem& sys, const Vec& x, const Vec& y) {
  const Vec r = sys.residuals(y);
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < sys.m(); ++i) {
    if (r[i].sign() > 0) return false;
    if (r[i].is_zero()) active.push_back(i);
  }
  const Vec gap = x - y;
  if (active.empty()) return gap.is_zero();
  std::vector<hoffman::Constraint> eqs, ineqs;
  for (std::size_t k = 0; k < sys.n(); ++k) {
    Vec c(active.size());
    for (std::size_t j = 0; j < active.size(); ++j) c[j] = sys.row(active[j])[k];
    eqs.push_back({c, gap[k]});
  }
  for (std::size_t j = 0; j < active.size(); ++j) {
    Vec c(active.size());
    c[j] = Scalar(-1);
    ineqs.push_back({c, Scalar(0)});
  }
  return hoffman::feasible(eqs, ineqs, active.size()).feasible;
}

}  // namespace

TEST_CASE("triangle: error bound, stability and constant") {
  const auto eb = check_error_bound(triangle());
  CHECK(eb.has_error_bound);
  CHECK_FALSE(eb.certificate);
  REQUIRE(eb.sigma_sq);
  CHECK(*eb.sigma_sq == Scalar(1, 2));

  const auto st = check_stability(triangle());
  CHECK(st.stable);
  REQUIRE(st.lower_bound_sq);
  CHECK(*st.lower_bound_sq == Scalar(1, 2));

  const auto h = hoffman_exact(triangle());
  CHECK(h.kind == hoffman::HoffmanConstant::Kind::Finite);
  CHECK(h.sigma_sq >= *st.lower_bound_sq);
}

TEST_CASE("coincident pair is unstable") {
  const auto st = check_stability(coincident_pair());
  CHECK_FALSE(st.stable);
  REQUIRE(st.violating_set);
  CHECK(*st.violating_set == IndexSet({0, 1}));
}

TEST_CASE("infeasible system: no error bound, and the certificate checks") {
  const auto eb = check_error_bound(infeasible_1d());
  CHECK_FALSE(eb.has_error_bound);
  REQUIRE(eb.certificate);
  CHECK(verify_certificate(infeasible_1d(), *eb.certificate));
  CHECK(hoffman_exact(infeasible_1d()).kind == hoffman::HoffmanConstant::Kind::NoErrorBound);
}

TEST_CASE("single rows: sigma^2 equals |a|^2") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    Vec a = oracle::random_vec(rng, 1 + trial % 3);
    if (a.is_zero()) continue;
    const InequalitySystem sys(Mat({a}), Vec{oracle::random_entry(rng)});
    const auto h = hoffman_exact(sys);
    REQUIRE(h.kind == hoffman::HoffmanConstant::Kind::Finite);
    CHECK(h.sigma_sq == a.norm_sq());
    CHECK(check_stability(sys).stable);
  }
}

TEST_CASE("identity systems have sigma^2 = 1/m") {
  for (std::size_t m = 1; m <= 5; ++m) {
    const auto h = hoffman_exact(hoffman::gen_worstcase(m));
    CHECK(h.sigma_sq == Scalar(1, static_cast<long>(m)));
  }
}

TEST_CASE("verdict matches Fourier-Motzkin feasibility") {
  int infeasible = 0;
  for (const auto& sys : oracle::random_systems(200, 1234)) {
    const bool feas = oracle::fm_feasible(sys);
    const auto eb = check_error_bound(sys);
    CHECK(eb.has_error_bound == feas);
    CHECK(eb.certificate.has_value() == !feas);
    if (eb.certificate) {
      CHECK(verify_certificate(sys, *eb.certificate));
      CHECK(oracle::certificate_holds(sys, eb.certificate->point, eb.certificate->active.members(),
                                      eb.certificate->hull_multipliers));
    }
    infeasible += !feas;
  }
  CHECK(infeasible > 15);
}

TEST_CASE("maximal-set shortcut gives the same constant as the full family") {
  for (const auto& sys : oracle::random_systems(120, 4321)) {
    const auto fast = check_error_bound(sys);
    const auto full = check_error_bound(sys, {true});
    CHECK(fast.has_error_bound == full.has_error_bound);
    CHECK(fast.sigma_sq == full.sigma_sq);
    CHECK(fast.checked_sets <= full.checked_sets);
  }
}

TEST_CASE("stable feasible systems obey the lower bound") {
  int compared = 0;
  for (const auto& sys : oracle::random_systems(200, 99)) {
    const auto st = check_stability(sys);
    const auto h = hoffman_exact(sys);
    if (!st.stable || h.kind != hoffman::HoffmanConstant::Kind::Finite || !st.lower_bound_sq) continue;
    CHECK(h.sigma_sq >= *st.lower_bound_sq);
    ++compared;
  }
  CHECK(compared > 50);
}

TEST_CASE("sigma^2 bounds every residual-to-distance ratio from below") {
  std::mt19937_64 rng(31);
  for (const auto& sys : oracle::random_systems(60, 555)) {
    const auto h = hoffman_exact(sys);
    if (h.kind != hoffman::HoffmanConstant::Kind::Finite) continue;
    for (int k = 0; k < 10; ++k) {
      const Vec x = oracle::random_vec(rng, sys.n());
      if (phi(sys, x).sign() <= 0) continue;
      CHECK(perturbation_ratio(sys, x) >= h.sigma_sq);
    }
  }
}

TEST_CASE("projection satisfies the cone condition") {
  std::mt19937_64 rng(37);
  for (const auto& sys : oracle::random_systems(80, 556)) {
    for (int k = 0; k < 5; ++k) {
      const Vec x = oracle::random_vec(rng, sys.n());
      const auto p = project_onto_polyhedron(sys, x);
      CHECK(p.has_value() == oracle::fm_feasible(sys));
      if (!p) continue;
      CHECK(p->dist_sq == (x - p->point).norm_sq());
      CHECK(is_projection(sys, x, p->point));
    }
  }
}

TEST_CASE("perturbing the coincident pair") {
  const Scalar eps(1, 10);
  const auto out = perturb(coincident_pair(), {eps, Vec{Scalar(0), Scalar(1)}, Vec(2)});
  CHECK(out.row(0) == Vec{Scalar(1), Scalar(11, 10)});
  CHECK(out.row(1) == Vec{Scalar(-1), Scalar(-9, 10)});
  CHECK(out.b() == Vec(2));
  CHECK_THROWS_AS(perturb(coincident_pair(), {Scalar(-1), Vec{Scalar(0), Scalar(1)}, Vec(2)}), std::invalid_argument);
  CHECK_THROWS_AS(perturb(coincident_pair(), {eps, Vec{Scalar(1), Scalar(1)}, Vec(2)}), std::invalid_argument);
  CHECK_THROWS_AS(perturb(triangle(), {eps, Vec{Scalar(0), Scalar(1)}, Vec(2)}), std::invalid_argument);
}

TEST_CASE("perturbed coincident pair has ratio eps^2/2 at (-eps, eps)") {
  std::mt19937_64 rng(2);
  std::vector<Scalar> eps_values{Scalar(1, 10), Scalar(1, 100), Scalar(1), Scalar(1, 2), Scalar(3, 7)};
  for (int k = 0; k < 20; ++k) {
    const long den = std::uniform_int_distribution<long>(2, 1000)(rng);
    eps_values.push_back(Scalar(std::uniform_int_distribution<long>(1, den - 1)(rng), den));
  }
  for (const Scalar& eps : eps_values) {
    CAPTURE(eps.str());
    const auto sys = perturb(coincident_pair(), {eps, Vec{Scalar(0), Scalar(1)}, Vec(2)});
    CHECK(perturbation_ratio(sys, Vec{-eps, eps}) == eps * eps / Scalar(2));
    const auto h = hoffman_exact(sys);
    REQUIRE(h.kind == hoffman::HoffmanConstant::Kind::Finite);
    CHECK(h.sigma_sq <= eps * eps / Scalar(2));
    CHECK(h.sigma_sq < eps * eps);
  }
}

TEST_CASE("perturbation_ratio preconditions") {
  CHECK_THROWS_AS(perturbation_ratio(triangle(), Vec(2)), std::invalid_argument);
  CHECK_THROWS_AS(perturbation_ratio(infeasible_1d(), Vec{Scalar(0)}), std::invalid_argument);
}

TEST_CASE("mutated certificates are rejected") {
  const auto sys = infeasible_1d();
  const Certificate good = *check_error_bound(sys).certificate;
  REQUIRE(verify_certificate(sys, good));

  auto moved = good;
  moved.point[0] += Scalar(1, 3);
  CHECK_FALSE(verify_certificate(sys, moved));

  auto wrong_set = good;
  wrong_set.active = IndexSet({0});
  wrong_set.hull_multipliers = Vec{Scalar(1)};
  CHECK_FALSE(verify_certificate(sys, wrong_set));

  auto bad_weights = good;
  bad_weights.hull_multipliers[0] = Scalar(1);
  CHECK_FALSE(verify_certificate(sys, bad_weights));

  auto short_weights = good;
  short_weights.hull_multipliers = Vec{Scalar(1)};
  CHECK_FALSE(verify_certificate(sys, short_weights));

  auto out_of_range = good;
  out_of_range.active = IndexSet({0, 5});
  CHECK_FALSE(verify_certificate(sys, out_of_range));
}

TEST_CASE("systems with no positive-level sets have an unbounded constant") {
  // 0*x <= 1: phi is negative everywhere.
  const InequalitySystem sys(Mat({Vec{Scalar(0), Scalar(0)}}), Vec{Scalar(1)});
  CHECK(hoffman_exact(sys).kind == hoffman::HoffmanConstant::Kind::Infinite);
  CHECK(check_error_bound(sys).has_error_bound);
}
