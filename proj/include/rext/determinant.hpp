#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cancel.hpp"
#include "polynomial.hpp"

namespace rext {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Determinant of a square polynomial matrix by Bareiss fraction-free
/// elimination. Every intermediate entry stays a polynomial because each
/// step divides exactly by the previous pivot. An empty matrix has
/// determinant 1.
inline Polynomial det_poly(PolyMatrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("det_poly: matrix is not square");
  }
  if (n == 0) return 1;
  if (n == 1) return a[0][0];

  bool negate = false;
  Polynomial prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    check_cancelled();
    if (a[k][k].is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a[swap_with][k].is_zero()) ++swap_with;
      if (swap_with == n) return {};
      std::swap(a[k], a[swap_with]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = prev.is_constant() ? t * (1 / prev.leading()) : exact_divide(t, prev);
      }
      a[i][k] = Polynomial{};
    }
    prev = a[k][k];
  }
  Polynomial det = std::move(a[n - 1][n - 1]);
  return negate ? -det : det;
}

}  // namespace rext
