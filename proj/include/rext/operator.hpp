#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cancel.hpp"
#include "gauged.hpp"
#include "rational_function.hpp"

namespace rext {

/// Linear differential operator sum_j a_j(x) d^j/dx^j with rational
/// coefficients stored densely by derivative order. Trailing zero
/// coefficients are trimmed, so coefficientwise comparison is equality.
class DifferentialOperator {
 public:
  DifferentialOperator() = default;
  explicit DifferentialOperator(std::vector<RationalFunction> coeffs) : a_(std::move(coeffs)) { trim(); }

  static DifferentialOperator identity() { return DifferentialOperator({RationalFunction(1)}); }
  static DifferentialOperator multiplication(RationalFunction f) { return DifferentialOperator({std::move(f)}); }
  static DifferentialOperator d() { return DifferentialOperator({RationalFunction(0), RationalFunction(1)}); }

  /// Order; the zero operator reports -1.
  long order() const { return static_cast<long>(a_.size()) - 1; }
  bool is_zero() const { return a_.empty(); }
  const std::vector<RationalFunction>& coefficients() const { return a_; }
  RationalFunction coeff(std::size_t j) const { return j < a_.size() ? a_[j] : RationalFunction(); }
  bool is_monic() const { return !a_.empty() && a_.back() == RationalFunction(1); }

  friend bool operator==(const DifferentialOperator& a, const DifferentialOperator& b) { return a.a_ == b.a_; }

  friend DifferentialOperator operator+(const DifferentialOperator& a, const DifferentialOperator& b) {
    std::vector<RationalFunction> out(std::max(a.a_.size(), b.a_.size()));
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = a.coeff(j) + b.coeff(j);
    return DifferentialOperator(std::move(out));
  }
  friend DifferentialOperator operator-(const DifferentialOperator& a) {
    std::vector<RationalFunction> out;
    out.reserve(a.a_.size());
    for (const auto& c : a.a_) out.push_back(-c);
    return DifferentialOperator(std::move(out));
  }
  friend DifferentialOperator operator-(const DifferentialOperator& a, const DifferentialOperator& b) { return a + (-b); }
  friend DifferentialOperator operator*(const BigRational& s, const DifferentialOperator& a) {
    std::vector<RationalFunction> out;
    out.reserve(a.a_.size());
    const RationalFunction f(s);
    for (const auto& c : a.a_) out.push_back(f * c);
    return DifferentialOperator(std::move(out));
  }

 private:
  void trim() {
    while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
  }

  std::vector<RationalFunction> a_;
};

/// Composition (a o b)[y] = a[b[y]] by Leibniz expansion:
///   a_i D^i b_j D^j = a_i sum_l C(i,l) b_j^{(l)} D^{i-l+j}.
///
/// Both operands are put over one denominator (a_i = p_i / P, b_j = q_j / Q).
/// With s = Q / gcd(Q, Q') the derivatives stay over Q s^l:
///   (r / (Q s^l))' = (r' s - r (Q'/gcd + l s')) / (Q s^{l+1}),
/// so every output coefficient is one polynomial over P Q s^L and is reduced
/// once at the end.
inline DifferentialOperator compose(const DifferentialOperator& a, const DifferentialOperator& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t na = a.coefficients().size();
  const std::size_t nb = b.coefficients().size();
  const auto pa = detail::clear_row(a.coefficients());
  const auto pb = detail::clear_row(b.coefficients());

  const Polynomial& q = pb.scale;
  const Polynomial dq = derivative(q);
  const Polynomial g = gcd(q, dq);
  const Polynomial s = q.is_constant() ? Polynomial(1) : exact_divide(q, g);
  const Polynomial t = q.is_constant() ? Polynomial() : exact_divide(dq, g);
  const Polynomial ds = derivative(s);
  const std::size_t top = na - 1;

  // r[l][j] = numerator of b_j^{(l)} over Q s^l, then lifted to Q s^top
  std::vector<std::vector<Polynomial>> r(na);
  r[0] = pb.entries;
  for (std::size_t l = 1; l < na; ++l) {
    check_cancelled();
    const Polynomial shift = t + ds * static_cast<long>(l - 1);
    r[l].reserve(nb);
    for (const auto& prev : r[l - 1]) {
      r[l].push_back(prev.is_zero() ? Polynomial() : derivative(prev) * s - prev * shift);
    }
  }
  if (!s.is_constant()) {
    Polynomial lift = 1;
    for (std::size_t l = top; l-- > 0;) {
      lift = lift * s;
      for (auto& e : r[l]) {
        if (!e.is_zero()) e = e * lift;
      }
    }
  }

  std::vector<Polynomial> num(na + nb - 1);
  std::vector<long> binom;
  for (std::size_t i = 0; i < na; ++i) {
    if (pa.entries[i].is_zero()) continue;
    check_cancelled();
    binom.assign(i + 1, 0);
    binom[0] = 1;
    for (std::size_t l = 1; l <= i; ++l) binom[l] = binom[l - 1] * static_cast<long>(i - l + 1) / static_cast<long>(l);
    std::vector<Polynomial> inner(i + nb);
    for (std::size_t l = 0; l <= i; ++l) {
      for (std::size_t j = 0; j < nb; ++j) {
        const auto& e = r[l][j];
        if (!e.is_zero()) inner[i - l + j] += binom[l] == 1 ? e : e * binom[l];
      }
    }
    for (std::size_t k = 0; k < inner.size(); ++k) {
      if (!inner[k].is_zero()) num[k] += pa.entries[i] * inner[k];
    }
  }

  Polynomial den = pa.scale * q;
  for (std::size_t l = 0; l < top; ++l) den = den * s;
  std::vector<RationalFunction> out;
  out.reserve(num.size());
  for (auto& n : num) out.emplace_back(std::move(n), den);
  return DifferentialOperator(std::move(out));
}

inline DifferentialOperator operator*(const DifferentialOperator& a, const DifferentialOperator& b) { return compose(a, b); }

/// sum_j a_j f^{(j)}; the gauge of f is preserved.
inline GaugedRational apply(const DifferentialOperator& op, const GaugedRational& f) {
  GaugedRational result{f.gauge, RationalFunction()};
  GaugedRational current = f;
  const auto& c = op.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (!c[j].is_zero()) result.body += c[j] * current.body;
    if (j + 1 < c.size()) current = derivative(current);
  }
  return result;
}

inline bool op_equal(const DifferentialOperator& a, const DifferentialOperator& b) { return a == b; }

inline std::string to_string(const DifferentialOperator& op) {
  if (op.is_zero()) return "0";
  std::string out;
  const auto& c = op.coefficients();
  for (std::size_t j = c.size(); j-- > 0;) {
    if (c[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "[" + to_string(c[j]) + "]";
    if (j == 1) out += "*D";
    else if (j > 1) out += "*D^" + std::to_string(j);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const DifferentialOperator& op) { return os << to_string(op); }

}  // namespace rext
