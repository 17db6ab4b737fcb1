#pragma once

#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace rext {

// Sturm chains are built on the square-free part p / gcd(p, p') with the
// signed-remainder convention
//   s_0 = p, s_1 = p', s_{i+1} = -rem(s_{i-1}, s_i),
// stopping at the last nonzero remainder.

inline std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("sturm chain of the zero polynomial");
  const Polynomial square_free = exact_divide(p, gcd(p, derivative(p)));
  std::vector<Polynomial> chain{square_free, derivative(square_free)};
  while (!chain.back().is_zero()) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    chain.push_back(-divmod(a, b).second);
  }
  chain.pop_back();
  return chain;
}

namespace detail {

inline int sign(const BigRational& v) { return sgn(v); }

inline int count_sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

inline int sign_at_infinity(const Polynomial& p, bool positive) {
  const int lead = sign(p.leading());
  return (positive || p.degree() % 2 == 0) ? lead : -lead;
}

}  // namespace detail

/// Number of distinct real roots of p.
inline int sturm_real_roots(const Polynomial& p) {
  const auto chain = sturm_chain(p);
  std::vector<int> at_neg, at_pos;
  for (const auto& s : chain) {
    at_neg.push_back(detail::sign_at_infinity(s, false));
    at_pos.push_back(detail::sign_at_infinity(s, true));
  }
  return detail::count_sign_changes(at_neg) - detail::count_sign_changes(at_pos);
}

/// Number of distinct real roots in the half-open interval (lo, hi].
inline int sturm_roots_between(const Polynomial& p, const BigRational& lo, const BigRational& hi) {
  if (lo >= hi) throw std::invalid_argument("sturm_roots_between: empty interval");
  const auto chain = sturm_chain(p);
  std::vector<int> at_lo, at_hi;
  for (const auto& s : chain) {
    at_lo.push_back(detail::sign(s(lo)));
    at_hi.push_back(detail::sign(s(hi)));
  }
  return detail::count_sign_changes(at_lo) - detail::count_sign_changes(at_hi);
}

}  // namespace rext
