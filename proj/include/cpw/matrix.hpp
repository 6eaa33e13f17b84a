#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cpw/rational.hpp"

namespace cpw {

/// Dense row-major matrix over Q(i).
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const GaussianRational> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }

  bool operator==(const ExactMatrix& other) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GaussianRational> entries_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

struct RrefResult {
  ExactMatrix matrix;                 // the reduced row-echelon form
  std::vector<std::size_t> pivots;    // pivot column per pivot row, strictly increasing
  ExactMatrix transform;              // transform * input == matrix, exactly
};

/// Gauss-Jordan elimination with exact arithmetic. Pivot choice is the first
/// nonzero entry in column order, so results are deterministic.
RrefResult rref(const ExactMatrix& m);

/// If `target` lies in the row span of `basis`, returns exact coefficients c
/// with c * basis == target; otherwise nullopt. DimensionMismatch when the
/// coordinate spaces differ.
std::optional<std::vector<GaussianRational>> solve_membership(
    const ExactMatrix& basis, std::span<const GaussianRational> target);

}  // namespace cpw
