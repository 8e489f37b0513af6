#ifndef HOFFMAN_LINALG_HPP
#define HOFFMAN_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hoffman/scalar.hpp"

namespace hoffman {

/// Dense rational vector.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : entries_(dim) {}
  Vec(std::initializer_list<Scalar> init) : entries_(init) {}
  explicit Vec(std::vector<Scalar> entries) : entries_(std::move(entries)) {}

  std::size_t dim() const { return entries_.size(); }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }

  const std::vector<Scalar>& entries() const { return entries_; }

  bool is_zero() const;
  Scalar norm_sq() const { return dot(*this); }
  Scalar dot(const Vec& other) const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Scalar& c);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(Vec a, const Scalar& c) { return a *= c; }
  friend Vec operator*(const Scalar& c, Vec a) { return a *= c; }
  friend bool operator==(const Vec& a, const Vec& b) = default;

  std::vector<double> to_double() const;

 private:
  std::vector<Scalar> entries_;
};

/// Dense rational matrix stored by rows. A matrix may have zero rows but
/// always knows its column count.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  /// All rows must share one dimension; throws std::invalid_argument otherwise.
  explicit Mat(std::vector<Vec> rows);
  Mat(std::vector<Vec> rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  const Vec& row(std::size_t i) const { return rows_[i]; }
  Vec& row(std::size_t i) { return rows_[i]; }
  const std::vector<Vec>& row_list() const { return rows_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }

  void append_row(Vec r);
  Mat transpose() const;
  Vec apply(const Vec& x) const;

  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::vector<Vec> rows_;
  std::size_t cols_ = 0;
};

std::size_t rank(const Mat& m);

enum class SolveKind { Unique, Underdetermined, Inconsistent };

struct LinearSolution {
  SolveKind kind = SolveKind::Inconsistent;
  /// A particular solution (free variables set to zero) unless Inconsistent.
  Vec solution;

  bool consistent() const { return kind != SolveKind::Inconsistent; }
};

/// Exact solve of M x = rhs by Gauss-Jordan elimination.
LinearSolution solve_linear(const Mat& m, const Vec& rhs);

/// Basis of {x : M x = 0}.
std::vector<Vec> null_space(const Mat& m);

/// Dimension of the affine hull of a non-empty point list.
std::size_t affine_hull_dim(std::span<const Vec> points);

}  // namespace hoffman

#endif  // HOFFMAN_LINALG_HPP
