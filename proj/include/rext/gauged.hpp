#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "determinant.hpp"
#include "rational_function.hpp"

namespace rext {

/// A function e^{gauge * x^2 / 2} * body(x) with an integer gauge and a
/// rational body. Closed under differentiation and products, which is all
/// the Wronskian machinery needs.
struct GaugedRational {
  int gauge = 0;
  RationalFunction body = 1;

  bool is_zero() const { return body.is_zero(); }
  friend bool operator==(const GaugedRational& a, const GaugedRational& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.gauge == b.gauge && a.body == b.body;
  }
};

inline GaugedRational operator*(const BigRational& s, GaugedRational f) {
  f.body = RationalFunction(s) * f.body;
  return f;
}

/// d/dx (c, R) = (c, c x R + R').
inline GaugedRational derivative(const GaugedRational& f) {
  RationalFunction d = derivative(f.body);
  if (f.gauge != 0) d += RationalFunction(Polynomial{0, f.gauge}) * f.body;
  return {f.gauge, std::move(d)};
}

inline std::string to_string(const GaugedRational& f) {
  return "exp(" + std::to_string(f.gauge) + "*x^2/2)*" + (f.body.is_polynomial() ? to_string(f.body) : "[" + to_string(f.body) + "]");
}

namespace detail {

// Row j of a Wronskian matrix with the row's common denominator cleared.
struct ClearedRow {
  std::vector<Polynomial> entries;
  Polynomial scale;  // the row was multiplied by this polynomial
};

inline ClearedRow clear_row(const std::vector<RationalFunction>& row) {
  Polynomial l = 1;
  for (const auto& f : row) {
    if (f.den().is_constant()) continue;
    const Polynomial g = gcd(l, f.den());
    l = l * exact_divide(f.den(), g);
  }
  ClearedRow out{{}, l};
  out.entries.reserve(row.size());
  for (const auto& f : row) out.entries.push_back(f.num() * exact_divide(l, f.den()));
  return out;
}

/// Bodies of f^{(j)} for j = 0..rows-1, one row per derivative order,
/// cleared of denominators.
inline std::vector<ClearedRow> derivative_rows(const std::vector<GaugedRational>& fs, std::size_t rows) {
  std::vector<GaugedRational> current = fs;
  std::vector<ClearedRow> out;
  out.reserve(rows);
  for (std::size_t j = 0; j < rows; ++j) {
    std::vector<RationalFunction> row;
    row.reserve(current.size());
    for (const auto& f : current) row.push_back(f.body);
    out.push_back(clear_row(row));
    if (j + 1 < rows) {
      for (auto& f : current) f = derivative(f);
    }
  }
  return out;
}

inline Polynomial minor_without_row(const std::vector<ClearedRow>& rows, std::size_t skip) {
  PolyMatrix m;
  m.reserve(rows.size() - 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i != skip) m.push_back(rows[i].entries);
  }
  return det_poly(std::move(m));
}

}  // namespace detail

/// Wronskian determinant det[f_j^{(i)}], columns in the given order. The
/// empty Wronskian is the unit (gauge 0, body 1).
inline GaugedRational wronskian(const std::vector<GaugedRational>& fs) {
  int gauge = 0;
  for (const auto& f : fs) gauge += f.gauge;
  if (fs.empty()) return {};
  const auto rows = detail::derivative_rows(fs, fs.size());
  PolyMatrix m;
  Polynomial scale = 1;
  for (const auto& r : rows) {
    m.push_back(r.entries);
    scale = scale * r.scale;
  }
  return {gauge, RationalFunction(det_poly(std::move(m)), std::move(scale))};
}

}  // namespace rext
