#include "cpw/matrix.hpp"

namespace cpw {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j).is_zero()) continue;
        out(i, j) = out(i, j) + a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

RrefResult rref(const ExactMatrix& m) {
  RrefResult result{m, {}, ExactMatrix::identity(m.rows())};
  ExactMatrix& r = result.matrix;
  ExactMatrix& t = result.transform;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < m.rows() && r(found, col).is_zero()) ++found;
    if (found == m.rows()) continue;
    if (found != pivot_row) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(pivot_row, j), r(found, j));
      for (std::size_t j = 0; j < t.cols(); ++j) std::swap(t(pivot_row, j), t(found, j));
    }
    GaussianRational inv = r(pivot_row, col).inverse();
    for (std::size_t j = 0; j < r.cols(); ++j) r(pivot_row, j) = r(pivot_row, j) * inv;
    for (std::size_t j = 0; j < t.cols(); ++j) t(pivot_row, j) = t(pivot_row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || r(i, col).is_zero()) continue;
      GaussianRational factor = r(i, col);
      for (std::size_t j = 0; j < r.cols(); ++j)
        r(i, j) = r(i, j) - factor * r(pivot_row, j);
      for (std::size_t j = 0; j < t.cols(); ++j)
        t(i, j) = t(i, j) - factor * t(pivot_row, j);
    }
    result.pivots.push_back(col);
    ++pivot_row;
  }
  return result;
}

std::optional<std::vector<GaussianRational>> solve_membership(
    const ExactMatrix& basis, std::span<const GaussianRational> target) {
  if (target.size() != basis.cols())
    fail(Errc::DimensionMismatch, "target length does not match basis coordinate space");
  RrefResult red = rref(basis);
  std::vector<GaussianRational> residual(target.begin(), target.end());
  std::vector<GaussianRational> reduced_coeffs(basis.rows());
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    std::size_t col = red.pivots[i];
    if (residual[col].is_zero()) continue;
    GaussianRational c = residual[col];
    for (std::size_t j = 0; j < basis.cols(); ++j)
      residual[j] = residual[j] - c * red.matrix(i, j);
    reduced_coeffs[i] = c;
  }
  for (const GaussianRational& v : residual)
    if (!v.is_zero()) return std::nullopt;
  // Pull the combination back to the original rows through the transform.
  std::vector<GaussianRational> coeffs(basis.rows());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    if (reduced_coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < basis.rows(); ++j)
      coeffs[j] = coeffs[j] + reduced_coeffs[i] * red.transform(i, j);
  }
  return coeffs;
}

}  // namespace cpw
