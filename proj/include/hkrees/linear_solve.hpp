#pragma once

#include "hkrees/exact.hpp"
#include "hkrees/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hkrees {

/// Solves A x = b over the rationals by Gaussian elimination. A must be square
/// and nonsingular.
inline std::vector<ExactRat> solve_exact(std::vector<std::vector<ExactRat>> a, std::vector<ExactRat> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve_exact: dimension mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("solve_exact: matrix must be square");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("solve_exact: singular system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const ExactRat f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<ExactRat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

/// The unique polynomial of degree <= xs.size()-1 through the given points.
inline RatPoly interpolate(const std::vector<ExactRat>& xs, const std::vector<ExactRat>& ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n || n == 0) throw std::invalid_argument("interpolate: need matching, nonempty samples");
  std::vector<std::vector<ExactRat>> vandermonde(n, std::vector<ExactRat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    ExactRat p = 1;
    for (std::size_t j = 0; j < n; ++j) {
      vandermonde[i][j] = p;
      p *= xs[i];
    }
  }
  return RatPoly(solve_exact(std::move(vandermonde), ys));
}

}  // namespace hkrees
