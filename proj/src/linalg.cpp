#include "hoffman/linalg.hpp"

#include <stdexcept>
#include <string>

namespace hoffman {

namespace {

void require_same_dim(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Scalar inv = Scalar(1) / a[r][c];
    for (auto& v : a[r]) {
      if (!v.is_zero()) v *= inv;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Scalar f = a[i][c];
      for (std::size_t j = c; j < a[i].size(); ++j) {
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Scalar>> to_rows(const Mat& m) {
  std::vector<std::vector<Scalar>> a;
  a.reserve(m.rows());
  for (const auto& r : m.row_list()) a.push_back(r.entries());
  return a;
}

}  // namespace

bool Vec::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Scalar Vec::dot(const Vec& other) const {
  require_same_dim(*this, other);
  Scalar s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].is_zero() && !other.entries_[i].is_zero()) s += entries_[i] * other.entries_[i];
  }
  return s;
}

Vec& Vec::operator+=(const Vec& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Vec& Vec::operator*=(const Scalar& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

std::vector<double> Vec::to_double() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.to_double());
  return out;
}

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows, Vec(cols)), cols_(cols) {}

Mat::Mat(std::vector<Vec> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("matrix needs at least one row to infer its width");
  cols_ = rows_.front().dim();
  for (const auto& r : rows_) {
    if (r.dim() != cols_) throw std::invalid_argument("ragged matrix rows");
  }
}

Mat::Mat(std::vector<Vec> rows, std::size_t cols) : rows_(std::move(rows)), cols_(cols) {
  for (const auto& r : rows_) {
    if (r.dim() != cols_) throw std::invalid_argument("ragged matrix rows");
  }
}

void Mat::append_row(Vec r) {
  if (r.dim() != cols_) throw std::invalid_argument("appended row has wrong dimension");
  rows_.push_back(std::move(r));
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = rows_[i][j];
  }
  return t;
}

Vec Mat::apply(const Vec& x) const {
  if (x.dim() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vec y(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) y[i] = rows_[i].dot(x);
  return y;
}

std::size_t rank(const Mat& m) {
  auto a = to_rows(m);
  return rref(a, m.cols()).size();
}

LinearSolution solve_linear(const Mat& m, const Vec& rhs) {
  if (rhs.dim() != m.rows()) {
    throw std::invalid_argument("solve_linear: rhs has " + std::to_string(rhs.dim()) +
                                " entries for " + std::to_string(m.rows()) + " rows");
  }
  const std::size_t n = m.cols();
  auto a = to_rows(m);
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(rhs[i]);

  const auto pivots = rref(a, n + 1);
  LinearSolution out;
  if (!pivots.empty() && pivots.back() == n) return out;  // pivot in rhs column

  out.solution = Vec(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) out.solution[pivots[r]] = a[r][n];
  out.kind = pivots.size() == n ? SolveKind::Unique : SolveKind::Underdetermined;
  return out;
}

std::vector<Vec> null_space(const Mat& m) {
  const std::size_t n = m.cols();
  auto a = to_rows(m);
  const auto pivots = rref(a, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t affine_hull_dim(std::span<const Vec> points) {
  if (points.empty()) throw std::invalid_argument("affine_hull_dim of an empty point list");
  const Vec& base = points.front();
  Mat diffs(0, base.dim());
  for (std::size_t i = 1; i < points.size(); ++i) diffs.append_row(points[i] - base);
  return rank(diffs);
}

}  // namespace hoffman
