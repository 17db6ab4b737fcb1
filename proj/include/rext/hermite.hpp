#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "determinant.hpp"
#include "gauged.hpp"
#include "maya.hpp"
#include "polynomial.hpp"

namespace rext {

/// Memo table of Hermite polynomials H_n, grown on demand with
/// H_{n+1} = 2x H_n - H_n'. Readers share the lock; growth is exclusive.
class HermiteCache {
 public:
  static HermiteCache& instance() {
    static HermiteCache cache;
    return cache;
  }

  Polynomial hermite(int n) {
    if (n < 0) throw std::invalid_argument("hermite: negative degree");
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < table_.size()) return table_[n];
    }
    std::unique_lock lock(mutex_);
    while (table_.size() <= static_cast<std::size_t>(n)) {
      const Polynomial& h = table_.back();
      table_.push_back(Polynomial{0, 2} * h - derivative(h));
    }
    return table_[n];
  }

 private:
  HermiteCache() : table_{Polynomial(1)} {}

  std::shared_mutex mutex_;
  std::vector<Polynomial> table_;
};

inline Polynomial hermite(int n) { return HermiteCache::instance().hermite(n); }

/// (-i)^n H_n(i x). Only coefficients with j = n mod 2 survive, each
/// multiplied by (-1)^n (-1)^{(n+j)/2}.
inline Polynomial conjugate_hermite(int n) {
  const Polynomial h = hermite(n);
  std::vector<BigRational> c = h.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    const long e = n + static_cast<long>((n + static_cast<long>(j)) / 2);
    if (e % 2 != 0) c[j] = -c[j];
  }
  return Polynomial(std::move(c));
}

/// Seed functions of the oscillator: e^{-x^2/2} H_n for n >= 0 and
/// e^{x^2/2} conj-H_{-n-1} for n < 0.
inline GaugedRational psi(int n) {
  if (n >= 0) return {-1, RationalFunction(hermite(n))};
  return {1, RationalFunction(conjugate_hermite(-n - 1))};
}

namespace detail {

class WronskianCache {
 public:
  static WronskianCache& instance() {
    static WronskianCache cache;
    return cache;
  }
  template <class F>
  Polynomial get(const std::vector<int>& key, F&& compute) {
    {
      std::shared_lock lock(mutex_);
      const auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Polynomial value = compute();
    std::unique_lock lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::vector<int>, Polynomial> table_;
};

}  // namespace detail

/// H_M = e^{sigma x^2/2} Wr[psi_{k_1}, ..., psi_{k_p}] with k_1 < ... < k_p.
inline Polynomial wronskian_polynomial(const MayaDiagram& m) {
  return detail::WronskianCache::instance().get(m.index_set(), [&m] {
    std::vector<GaugedRational> seeds;
    for (int k : m.index_set()) seeds.push_back(psi(k));
    const GaugedRational w = wronskian(seeds);
    if (w.gauge != -m.index()) throw std::logic_error("wronskian_polynomial: gauge does not match the index");
    if (!w.body.is_polynomial()) throw std::logic_error("wronskian_polynomial: body is not a polynomial");
    return w.body.num();
  });
}

/// Mixed determinant built from the Frobenius symbol (s | t): one row
/// conj-H_{s_i}, ..., conj-H_{s_i+p-1} per s_i (s descending), then one row
/// H_{t_j}, H_{t_j}', ..., H_{t_j}^{(p-1)} per t_j (t ascending).
inline Polynomial pseudo_wronskian(const MayaDiagram& m) {
  const FrobeniusSymbol f = frobenius_symbol(m);
  const int p = f.r() + f.q();
  PolyMatrix a;
  a.reserve(p);
  for (int s : f.s) {
    std::vector<Polynomial> row;
    for (int c = 0; c < p; ++c) row.push_back(conjugate_hermite(s + c));
    a.push_back(std::move(row));
  }
  for (auto it = f.t.rbegin(); it != f.t.rend(); ++it) {
    std::vector<Polynomial> row;
    Polynomial h = hermite(*it);
    for (int c = 0; c < p; ++c) {
      row.push_back(h);
      h = derivative(h);
    }
    a.push_back(std::move(row));
  }
  return det_poly(std::move(a));
}

/// Translation-invariant normalization
///   (-1)^{rq} H_M / (prod_{i<j} 2(s_j - s_i) prod_{i<j} 2(t_i - t_j)).
inline Polynomial normalized_H(const MayaDiagram& m) {
  const FrobeniusSymbol f = frobenius_symbol(m);
  BigRational denom = 1;
  for (int i = 0; i < f.r(); ++i) {
    for (int j = i + 1; j < f.r(); ++j) denom *= 2 * (f.s[j] - f.s[i]);
  }
  for (int i = 0; i < f.q(); ++i) {
    for (int j = i + 1; j < f.q(); ++j) denom *= 2 * (f.t[i] - f.t[j]);
  }
  BigRational scale = 1 / denom;
  if ((f.r() * f.q()) % 2 != 0) scale = -scale;
  return pseudo_wronskian(m) * scale;
}

}  // namespace rext
