#pragma once

// Intertwining operators A_{M,K}, arrow composition, ladder operators and
// the syzygies between powers of the elementary ladder and the minimal one.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "extension.hpp"
#include "gauged.hpp"
#include "maya.hpp"
#include "operator.hpp"

namespace rext {

/// A_{M,K}[y] = Wr[psi_{M,k_1}, ..., psi_{M,k_p}, y] / Wr[psi_{M,k_1}, ..., psi_{M,k_p}]
/// for a set K.
///
/// Expanding the numerator along the y column, the coefficient of y^{(j)}
/// is (-1)^{j+p} times the minor with derivative row j removed, over the
/// minor with row p removed. The gauge factor of each psi column is common
/// to all minors and cancels, so only the rational bodies enter.
inline DifferentialOperator intertwiner(const MayaDiagram& m, const std::vector<int>& k) {
  std::vector<int> sorted = k;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("intertwiner: K has repeated elements; use intertwiner_multiset");
  }
  const std::size_t p = sorted.size();
  if (p == 0) return DifferentialOperator::identity();

  std::vector<GaugedRational> fs;
  fs.reserve(p);
  for (int e : sorted) fs.push_back(eigenfunction(m, e).function);
  const auto rows = detail::derivative_rows(fs, p + 1);

  const Polynomial base = detail::minor_without_row(rows, p) * rows[p].scale;
  if (base.is_zero()) throw std::logic_error("intertwiner: degenerate Wronskian");
  std::vector<RationalFunction> coeffs(p + 1);
  coeffs[p] = 1;
  for (std::size_t j = 0; j < p; ++j) {
    Polynomial num = detail::minor_without_row(rows, j) * rows[j].scale;
    if ((j + p) % 2 != 0) num = -num;
    coeffs[j] = RationalFunction(std::move(num), base);
  }
  return DifferentialOperator(std::move(coeffs));
}

/// (2k+1) - T_M.
inline DifferentialOperator spectral_factor(const MayaDiagram& m, int k) {
  return DifferentialOperator::multiplication(RationalFunction(2 * k + 1)) - schrodinger(m);
}

/// prod_{k in K} (2k+1 - T_M) with multiplicity. The factors commute, so
/// each one is applied on the left, where composition only differentiates
/// the accumulated operator twice.
inline DifferentialOperator spectral_polynomial(const MayaDiagram& m, const IntegerMultiset& k) {
  DifferentialOperator out = DifferentialOperator::identity();
  for (const auto& [e, mult] : k.entries()) {
    const DifferentialOperator factor = spectral_factor(m, e);
    for (int i = 0; i < mult; ++i) out = compose(factor, out);
  }
  return out;
}

/// A_{M,K} = A_{M,K_0} o prod_{k in K_1} (2k+1 - T_M), where K = K_0 + 2 K_1.
inline DifferentialOperator intertwiner_multiset(const MayaDiagram& m, const IntegerMultiset& k) {
  const auto parts = multiset_decompose(k);
  const DifferentialOperator a = intertwiner(m, parts.odd_part);
  if (parts.half_even.empty()) return a;
  return compose(a, spectral_polynomial(m, parts.half_even));
}

/// Morphism (M, K) from M to f_K(M).
struct Arrow {
  MayaDiagram source;
  IntegerMultiset flips;

  MayaDiagram target() const { return multi_flip(source, flips); }
  /// No repeated flips: the realized intertwiner has no p(T) right factor.
  bool primitive() const { return flips.is_set(); }
  DifferentialOperator realize() const { return intertwiner_multiset(source, flips); }

  friend bool operator==(const Arrow& a, const Arrow& b) { return a.source == b.source && a.flips == b.flips; }
};

/// (M_2, K_2) o (M_1, K_1) = (M_1, K_1 + K_2); requires M_2 = f_{K_1}(M_1).
inline Arrow compose_arrows(const Arrow& second, const Arrow& first) {
  if (!(second.source == first.target())) {
    throw std::invalid_argument("compose_arrows: source of the outer arrow is not the target of the inner one");
  }
  return {first.source, first.flips + second.flips};
}

inline bool verify_intertwining(const MayaDiagram& m, const IntegerMultiset& k) {
  const DifferentialOperator a = intertwiner_multiset(m, k);
  return compose(a, schrodinger(m)) == compose(schrodinger(multi_flip(m, k)), a);
}

/// A_{M_2,K_2} o A_{M,K_1} = A_{M,K_1+K_2} with M_2 = f_{K_1}(M).
inline bool verify_functor(const MayaDiagram& m, const IntegerMultiset& k1, const IntegerMultiset& k2) {
  const DifferentialOperator lhs = compose(intertwiner_multiset(multi_flip(m, k1), k2), intertwiner_multiset(m, k1));
  return lhs == intertwiner_multiset(m, k1 + k2);
}

struct LadderResult {
  DifferentialOperator op;
  int order = 0;
  std::vector<int> flip_set;
  int shift = 0;
};

/// L_n = A_{M,K} with K = (M+n) (-) M; intertwines T_M and T_M + 2n.
inline LadderResult ladder(const MayaDiagram& m, int n) {
  LadderResult out;
  out.flip_set = ladder_flip_set(m, n);
  out.op = intertwiner(m, out.flip_set);
  out.order = static_cast<int>(out.flip_set.size());
  out.shift = n;
  return out;
}

/// n + 2 sum_i genus(M_i) over the modular decomposition of M.
inline int ladder_order(const MayaDiagram& m, int n) {
  if (n < 1) throw std::invalid_argument("ladder_order: n must be positive");
  int order = n;
  for (const auto& part : modular_decompose(m, n)) order += 2 * genus(part);
  return order;
}

/// L_n o T_M = (T_M + 2n) o L_n.
inline bool verify_ladder(const MayaDiagram& m, int n) {
  const auto l = ladder(m, n);
  const auto t = schrodinger(m);
  const auto shifted = t + DifferentialOperator::multiplication(RationalFunction(2 * n));
  return compose(l.op, t) == compose(shifted, l.op);
}

struct Syzygy {
  IntegerMultiset accumulated;     // union of the n translated L_1 flip sets
  std::vector<int> odd_part;       // K_0, equal to the L_n flip set
  IntegerMultiset even_part;       // K_1
  std::vector<int> polynomial_roots;  // 2k+1 for k in K_1, with multiplicity
  bool identity_holds = false;
};

/// L_1^n = L_n o p(T_M) with p(T) = prod_{k in K_1} (2k+1 - T).
inline Syzygy syzygy(const MayaDiagram& m, int n) {
  if (n < 1) throw std::invalid_argument("syzygy: n must be positive");
  const auto step = ladder_flip_set(m, 1);
  Syzygy out;
  for (int j = 0; j < n; ++j) {
    for (int e : step) out.accumulated.add(e + j);
  }
  auto parts = multiset_decompose(out.accumulated);
  out.odd_part = parts.odd_part;
  out.even_part = parts.half_even;
  if (out.odd_part != ladder_flip_set(m, n)) {
    throw std::logic_error("syzygy: odd part of the accumulated multiset differs from (M+n) (-) M");
  }
  for (const auto& [e, mult] : out.even_part.entries()) {
    for (int i = 0; i < mult; ++i) out.polynomial_roots.push_back(2 * e + 1);
  }

  // L_1 on M+j is A_{M+j, K+j}; the chain applies j = 0 first.
  DifferentialOperator chain = DifferentialOperator::identity();
  for (int j = 0; j < n; ++j) {
    const MayaDiagram mj = m.translate(j);
    chain = compose(intertwiner(mj, ladder_flip_set(mj, 1)), chain);
  }
  DifferentialOperator rhs = intertwiner(m, out.odd_part);
  if (!out.even_part.empty()) rhs = compose(rhs, spectral_polynomial(m, out.even_part));
  out.identity_holds = chain == rhs;
  return out;
}

/// C_{M,n,k} with L_n psi_{M,k} = C psi_{M,k-n}, extracted as an exact
/// quotient. Zero when k - n is in M.
inline BigRational ladder_coefficient(const MayaDiagram& m, int n, int k) {
  if (m.contains(k)) throw std::invalid_argument("ladder_coefficient: k is a member of M");
  const auto image = apply(ladder(m, n).op, eigenfunction(m, k).function);
  if (image.is_zero()) return 0;
  if (m.contains(k - n)) throw std::logic_error("ladder_coefficient: nonzero image although k-n is in M");
  const auto target = eigenfunction(m, k - n).function;
  if (image.gauge != target.gauge) throw std::logic_error("ladder_coefficient: gauge mismatch");
  const RationalFunction q = image.body / target.body;
  if (!(q.is_polynomial() && q.num().is_constant())) {
    throw std::logic_error("ladder_coefficient: image is not proportional to psi_{M,k-n}");
  }
  return q.num().coeff(0);
}

/// (k-n+1)_n 2^n, the coefficient for the trivial diagram.
inline BigRational pochhammer_ladder_coefficient(int n, int k) {
  BigRational c = 1;
  for (int i = 0; i < n; ++i) c *= 2 * (k - n + 1 + i);
  return c;
}

/// Chain of single-flip arrows applying the elements of K in the given order.
inline std::vector<Arrow> first_order_factorization(const MayaDiagram& m, const std::vector<int>& k,
                                                    const std::vector<int>& order) {
  std::vector<int> a = k, b = order;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b || std::adjacent_find(a.begin(), a.end()) != a.end()) {
    throw std::invalid_argument("first_order_factorization: order is not a permutation of K");
  }
  std::vector<Arrow> out;
  MayaDiagram current = m;
  for (int e : order) {
    out.push_back({current, IntegerMultiset{e}});
    current = current.flip(e);
  }
  return out;
}

inline std::vector<Arrow> first_order_factorization(const MayaDiagram& m, const std::vector<int>& k) {
  std::vector<int> ascending = k;
  std::sort(ascending.begin(), ascending.end());
  return first_order_factorization(m, k, ascending);
}

/// Operator of a chain of arrows, first arrow applied first.
inline DifferentialOperator realize_chain(const std::vector<Arrow>& chain) {
  DifferentialOperator out = DifferentialOperator::identity();
  for (const auto& a : chain) out = compose(a.realize(), out);
  return out;
}

}  // namespace rext
