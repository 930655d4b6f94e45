#include "cliffaut/linalg.hpp"

#include <stdexcept>

namespace cliffaut {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Exact(1);
  return m;
}

void ExactMatrix::append_rows(const ExactMatrix& other) {
  if (rows_ == 0 && cols_ == 0) cols_ = other.cols_;
  if (other.cols_ != cols_) throw std::invalid_argument("column count mismatch");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not compose");
  ExactMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Exact& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Exact& bkj = b(k, j);
        if (!bkj.is_zero()) add_product(c(i, j), 1, aik, bkj);
      }
    }
  }
  return c;
}

namespace {

// row[target] -= factor * row[source] over the listed nonzero columns.
void eliminate(ExactMatrix& m, std::size_t target, std::size_t source, const Exact& factor,
               const std::vector<std::size_t>& columns) {
  for (std::size_t c : columns) add_product(m(target, c), -1, factor, m(source, c));
}

std::vector<std::size_t> nonzero_columns(const ExactMatrix& m, std::size_t r, std::size_t from) {
  std::vector<std::size_t> cols;
  for (std::size_t c = from; c < m.cols(); ++c) {
    if (!m(r, c).is_zero()) cols.push_back(c);
  }
  return cols;
}

}  // namespace

RowEchelon row_reduce(ExactMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = m.rows();
    for (std::size_t r = pivot_row; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) {
        found = r;
        break;
      }
    }
    if (found == m.rows()) continue;
    if (found != pivot_row) {
      auto a = m.row(found);
      auto b = m.row(pivot_row);
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(a[c], b[c]);
    }
    const Exact inv = Exact(1) / m(pivot_row, col);
    auto cols = nonzero_columns(m, pivot_row, col);
    for (std::size_t c : cols) m(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, col).is_zero()) continue;
      const Exact factor = m(r, col);
      eliminate(m, r, pivot_row, factor, cols);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  ExactMatrix reduced(pivot_row, m.cols());
  for (std::size_t r = 0; r < pivot_row; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = m(r, c);
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const ExactMatrix& m) { return row_reduce(m).pivot_columns.size(); }

std::vector<std::vector<Exact>> nullspace(const ExactMatrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<Exact>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Exact> v(m.cols());
    v[free] = Exact(1);
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
      const Exact& x = e.reduced(r, free);
      if (!x.is_zero()) v[e.pivot_columns[r]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Exact>> solve(const ExactMatrix& a, std::span<const Exact> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve needs a square system");
  ExactMatrix m(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = a(r, c);
    m(r, n) = b[r];
  }
  // Forward elimination, then back substitution.
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t found = n;
    for (std::size_t r = col; r < n; ++r) {
      if (!m(r, col).is_zero()) {
        found = r;
        break;
      }
    }
    if (found == n) return std::nullopt;
    if (found != col) {
      auto x = m.row(found);
      auto y = m.row(col);
      for (std::size_t c = 0; c <= n; ++c) std::swap(x[c], y[c]);
    }
    auto cols = nonzero_columns(m, col, col);
    const Exact pivot = m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Exact factor = m(r, col) / pivot;
      eliminate(m, r, col, factor, cols);
    }
  }
  std::vector<Exact> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Exact acc = m(i, n);
    for (std::size_t c = i + 1; c < n; ++c) {
      if (!m(i, c).is_zero() && !x[c].is_zero()) add_product(acc, -1, m(i, c), x[c]);
    }
    x[i] = acc / m(i, i);
  }
  return x;
}

}  // namespace cliffaut
