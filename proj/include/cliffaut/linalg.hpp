#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cliffaut/scalar.hpp"

namespace cliffaut {

/// Dense row-major matrix over exact scalars.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Exact& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Exact& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Exact> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Exact> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Appends the rows of `other`; column counts must agree.
  void append_rows(const ExactMatrix& other);

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Exact> data_;
};

struct RowEchelon {
  /// Reduced row echelon form with zero rows removed.
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination in exact arithmetic. Zero entries are skipped, so
/// sparse inputs stay cheap.
RowEchelon row_reduce(ExactMatrix m);

std::size_t rank(const ExactMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column (that coordinate set to 1).
std::vector<std::vector<Exact>> nullspace(const ExactMatrix& m);

/// Solves the square system a x = b; nullopt when a is singular.
std::optional<std::vector<Exact>> solve(const ExactMatrix& a, std::span<const Exact> b);

}  // namespace cliffaut
