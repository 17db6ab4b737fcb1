#pragma once

// Dense univariate polynomials over the rationals.
//
// Coefficients are stored in ascending degree order and the vector is kept
// trimmed, so the zero polynomial is the empty vector and the last entry is
// always the nonzero leading coefficient.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rext {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline BigRational parse_rational(const std::string& text) {
  BigRational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const BigRational& q) { return q.get_str(); }

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<BigRational> ascending) : c_(ascending) { trim(); }
  explicit Polynomial(std::vector<BigRational> ascending) : c_(std::move(ascending)) { trim(); }
  Polynomial(long constant) {  // NOLINT: implicit by design of the algebra
    if (constant != 0) c_.emplace_back(constant);
  }
  Polynomial(const BigRational& constant) {  // NOLINT
    if (constant != 0) c_.push_back(constant);
  }

  static Polynomial x() { return Polynomial{0, 1}; }
  static Polynomial monomial(const BigRational& c, std::size_t degree) {
    if (c == 0) return {};
    std::vector<BigRational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Degree; the zero polynomial reports -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const BigRational& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  BigRational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }
  const std::vector<BigRational>& coefficients() const { return c_; }

  BigRational operator()(const BigRational& at) const {
    BigRational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const BigRational& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const BigRational& s) { return a *= s; }
  friend Polynomial operator*(const BigRational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(long s, Polynomial a) { return a *= BigRational(s); }
  friend Polynomial operator*(Polynomial a, long s) { return a *= BigRational(s); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.c_.size() > 3 && b.c_.size() > 3) return multiply_integral(a, b);
    std::vector<BigRational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Multiplies by x^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<BigRational> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return Polynomial(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  // Common denominator of the coefficients, and the integer numerators
  // over it.
  static BigInt split_integral(const std::vector<BigRational>& c, std::vector<BigInt>& out) {
    BigInt l = 1;
    for (const auto& v : c) {
      if (v.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    out.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (l == 1) out[i] = c[i].get_num();
      else {
        mpz_divexact(out[i].get_mpz_t(), l.get_mpz_t(), c[i].get_den_mpz_t());
        out[i] *= c[i].get_num();
      }
    }
    return l;
  }

  // Product by integer convolution; avoids a gcd per coefficient product.
  static Polynomial multiply_integral(const Polynomial& a, const Polynomial& b) {
    std::vector<BigInt> ai, bi;
    const BigInt la = split_integral(a.c_, ai);
    const BigInt lb = split_integral(b.c_, bi);
    std::vector<BigInt> acc(ai.size() + bi.size() - 1);
    for (std::size_t i = 0; i < ai.size(); ++i) {
      if (ai[i] == 0) continue;
      for (std::size_t j = 0; j < bi.size(); ++j) {
        mpz_addmul(acc[i + j].get_mpz_t(), ai[i].get_mpz_t(), bi[j].get_mpz_t());
      }
    }
    const BigInt den = la * lb;
    std::vector<BigRational> out(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) {
      out[k] = BigRational(acc[k], den);
      out[k].canonicalize();
    }
    return Polynomial(std::move(out));
  }

  std::vector<BigRational> c_;
};

inline Polynomial derivative(const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<BigRational> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

inline Polynomial derivative(Polynomial p, int order) {
  for (int i = 0; i < order && !p.is_zero(); ++i) p = derivative(p);
  return p;
}

inline Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial result = 1;
  Polynomial base = p;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

/// Euclidean division a = q*b + r with deg r < deg b.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<BigRational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<BigRational> quo(rem.size() - db);
  const BigRational inv_lead = 1 / bc.back();
  for (std::size_t k = quo.size(); k-- > 0;) {
    BigRational q = rem[k + db] * inv_lead;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
    quo[k] = std::move(q);
  }
  rem.resize(db);
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

/// Quotient of a division known to be exact; throws otherwise.
inline Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("polynomial division is not exact");
  return q;
}

inline Polynomial monic(Polynomial p) {
  if (p.is_zero()) return p;
  const BigRational inv = 1 / p.leading();
  return p *= inv;
}

namespace detail {

using IntPoly = std::vector<BigInt>;

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline void make_primitive(IntPoly& p) {
  const BigInt g = content(p);
  if (g > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

/// Primitive integer polynomial proportional to p.
inline IntPoly primitive_part(const Polynomial& p) {
  BigInt l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    BigInt v = l / c.get_den();
    out.push_back(v * c.get_num());
  }
  make_primitive(out);
  return out;
}

/// Pseudo-remainder of a by b (deg a >= deg b), made primitive.
inline IntPoly primitive_prem(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const BigInt la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim(a);
    make_primitive(a);
  }
  return a;
}

}  // namespace detail

/// Monic gcd; gcd(0, 0) = 0. Runs a primitive pseudo-remainder sequence over
/// the integers, which keeps coefficient growth in check.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return 1;
  detail::IntPoly u = detail::primitive_part(a);
  detail::IntPoly v = detail::primitive_part(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    if (v.size() == 1) return 1;
    detail::IntPoly r = detail::primitive_prem(std::move(u), v);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<BigRational> out;
  out.reserve(u.size());
  for (auto& c : u) out.emplace_back(c);
  return monic(Polynomial(std::move(out)));
}

/// Human-readable form in descending powers, e.g. "4*x^2+2" or "-1/2*x".
inline std::string to_string(const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    const BigRational& v = c[k];
    if (v == 0) continue;
    const bool negative = v < 0;
    const BigRational mag = abs(v);
    if (!out.empty()) out += negative ? "-" : "+";
    else if (negative) out += "-";
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace rext
