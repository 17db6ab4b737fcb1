#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "polynomial.hpp"

namespace rext {

/// Quotient of polynomials kept in normal form: the denominator is monic and
/// coprime to the numerator, and zero is 0/1. Normal form makes equality
/// structural.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RationalFunction(long c) : num_(c), den_(1) {}                       // NOLINT
  RationalFunction(const BigRational& c) : num_(c), den_(1) {}         // NOLINT
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
  }

  /// Caller guarantees gcd(num, den) = 1; only the monic convention is applied.
  static RationalFunction coprime(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    return raw(std::move(num), std::move(den));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// Degree of num minus degree of den; -infinity is reported as a very
  /// negative number for zero.
  long degree() const { return is_zero() ? -(1L << 30) : num_.degree() - den_.degree(); }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend RationalFunction operator-(RationalFunction a) {
    a.num_ = -a.num_;
    return a;
  }

  // Henrici-style sum: only the gcd of the denominators is divided out up
  // front, and the final reduction only needs gcd(num, g).
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      return from_parts_unreduced(a.num_ + b.num_, a.den_);
    }
    if (a.den_.is_constant()) return raw(a.num_ * b.den_ + b.num_, b.den_);
    if (b.den_.is_constant()) return raw(a.num_ + b.num_ * a.den_, a.den_);
    const Polynomial g = gcd(a.den_, b.den_);
    if (g.is_constant()) {
      return raw(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    const Polynomial ad = exact_divide(a.den_, g);
    const Polynomial bd = exact_divide(b.den_, g);
    Polynomial num = a.num_ * bd + b.num_ * ad;
    Polynomial den = ad * b.den_;
    const Polynomial h = gcd(num, g);
    if (!h.is_constant()) {
      num = exact_divide(num, h);
      den = exact_divide(den, h);
    }
    return raw(std::move(num), std::move(den));
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_constant() && b.den_.is_constant()) return raw(a.num_ * b.num_, 1);
    const Polynomial g1 = gcd(a.num_, b.den_);
    const Polynomial g2 = gcd(b.num_, a.den_);
    Polynomial num = (g1.is_constant() ? a.num_ : exact_divide(a.num_, g1)) *
                     (g2.is_constant() ? b.num_ : exact_divide(b.num_, g2));
    Polynomial den = (g2.is_constant() ? a.den_ : exact_divide(a.den_, g2)) *
                     (g1.is_constant() ? b.den_ : exact_divide(b.den_, g1));
    return raw(std::move(num), std::move(den));
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    RationalFunction inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    inv.make_monic();
    return a * inv;
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

 private:
  // num/den already coprime; only the monic convention is enforced.
  static RationalFunction raw(Polynomial num, Polynomial den) {
    RationalFunction r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.make_monic();
    return r;
  }
  static RationalFunction from_parts_unreduced(Polynomial num, Polynomial den) {
    RationalFunction r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.normalize();
    return r;
  }

  void make_monic() {
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    const BigRational lead = den_.leading();
    if (lead != 1) {
      const BigRational inv = 1 / lead;
      num_ *= inv;
      den_ *= inv;
    }
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    if (!den_.is_constant()) {
      const Polynomial g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = exact_divide(num_, g);
        den_ = exact_divide(den_, g);
      }
    }
    make_monic();
  }

  Polynomial num_;
  Polynomial den_;
};

/// (n/d)' with g = gcd(d, d'): (n' (d/g) - n (d'/g)) / (d (d/g)). For n/d in
/// normal form this quotient is already coprime, so no further gcd is taken.
inline RationalFunction derivative(const RationalFunction& f) {
  if (f.is_polynomial()) return RationalFunction(derivative(f.num()) * (1 / f.den().leading()));
  const Polynomial& n = f.num();
  const Polynomial& d = f.den();
  const Polynomial dd = derivative(d);
  const Polynomial g = gcd(d, dd);
  if (g.is_constant()) return RationalFunction::coprime(derivative(n) * d - n * dd, d * d);
  const Polynomial dg = exact_divide(d, g);
  return RationalFunction::coprime(derivative(n) * dg - n * exact_divide(dd, g), d * dg);
}

inline std::string to_string(const RationalFunction& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << to_string(f); }

}  // namespace rext
