#pragma once

// Rational extensions of the harmonic oscillator: the potential U_M, the
// Hamiltonian T_M = -D^2 + U_M, its quasi-rational eigenfunctions, and the
// Krein-Adler regularity test.

#include <stdexcept>
#include <vector>

#include "gauged.hpp"
#include "hermite.hpp"
#include "maya.hpp"
#include "operator.hpp"
#include "sturm.hpp"

namespace rext {

/// U_M = x^2 + 2 sigma + 2 (H'/H)^2 - 2 H''/H, with H = H_M. The constant
/// comes from differentiating the Wronskian gauge e^{-sigma x^2/2}.
inline RationalFunction potential(const MayaDiagram& m) {
  const Polynomial h = wronskian_polynomial(m);
  const Polynomial h1 = derivative(h);
  const Polynomial h2 = derivative(h1);
  const Polynomial base = Polynomial{2 * m.index(), 0, 1};
  if (h.is_constant()) return base;
  // 2(h'^2 - h h'') / h^2
  return RationalFunction(base) + RationalFunction((h1 * h1 - h * h2) * BigRational(2), h * h);
}

/// U_M = x^2 - 2 (log Wr[psi_{k_1}, ..., psi_{k_p}])'' computed straight from
/// the gauged Wronskian: for Wr = e^{c x^2/2} R, (log Wr)'' = c + (R'/R)'.
inline RationalFunction potential_from_log_wronskian(const MayaDiagram& m) {
  std::vector<GaugedRational> seeds;
  for (int k : m.index_set()) seeds.push_back(psi(k));
  const GaugedRational w = wronskian(seeds);
  const RationalFunction log_deriv = derivative(w.body) / w.body;
  return RationalFunction(Polynomial{-2 * w.gauge, 0, 1}) - RationalFunction(2) * derivative(log_deriv);
}

/// T_M = -D^2 + U_M.
inline DifferentialOperator schrodinger(const MayaDiagram& m) {
  return DifferentialOperator({potential(m), RationalFunction(), RationalFunction(-1)});
}

struct EigenState {
  int k = 0;
  int epsilon = -1;
  GaugedRational function;
  bool bound = false;
};

/// Block parity test: every finite filled block [b_{2j-1}, b_{2j}) has even
/// length.
inline bool is_regular(const MayaDiagram& m) {
  const auto b = block_coordinates(m).coords;
  for (std::size_t j = 2; j < b.size(); j += 2) {
    if ((b[j] - b[j - 1]) % 2 != 0) return false;
  }
  return true;
}

/// psi_{M,k} = e^{eps x^2/2} H_{f_k(M)} / H_M with eps = +1 iff k in M.
/// Satisfies T_M psi_{M,k} = (2k+1) psi_{M,k}.
inline EigenState eigenfunction(const MayaDiagram& m, int k) {
  EigenState st;
  st.k = k;
  st.epsilon = m.contains(k) ? 1 : -1;
  st.function = {st.epsilon, RationalFunction(wronskian_polynomial(m.flip(k)), wronskian_polynomial(m))};
  st.bound = !m.contains(k) && is_regular(m);
  return st;
}

/// k in [kmin, kmax] with k not in M. Only defined for regular M.
inline std::vector<int> bound_states(const MayaDiagram& m, int kmin, int kmax) {
  if (kmin > kmax) throw std::invalid_argument("bound_states: empty range");
  if (!is_regular(m)) throw std::domain_error("bound_states: extension is singular (not self-adjoint)");
  std::vector<int> out;
  for (int k = kmin; k <= kmax; ++k) {
    if (!m.contains(k)) out.push_back(k);
  }
  return out;
}

/// Numerator polynomial H_{f_k(M)} of the bound state psi_{M,k}.
inline Polynomial exceptional_hermite(const MayaDiagram& m, int k) {
  if (m.contains(k)) throw std::domain_error("exceptional_hermite: k is a member of M, not a bound state");
  if (!is_regular(m)) throw std::domain_error("exceptional_hermite: extension is singular");
  return wronskian_polynomial(m.flip(k));
}

/// Checks T_M psi_{M,k} = (2k+1) psi_{M,k} exactly.
inline bool verify_eigen_relation(const MayaDiagram& m, int k) {
  const auto st = eigenfunction(m, k);
  return apply(schrodinger(m), st.function) == BigRational(2 * k + 1) * st.function;
}

/// Krein-Adler cross-check: block parity against an exact Sturm count of H_M.
inline bool regularity_agrees_with_sturm(const MayaDiagram& m) {
  return is_regular(m) == (sturm_real_roots(wronskian_polynomial(m)) == 0);
}

}  // namespace rext
