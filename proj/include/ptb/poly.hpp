#pragma once

// Dense univariate polynomials over an arbitrary coefficient ring.
//
// Coefficients are stored lowest degree first with no trailing zeros, so the
// zero polynomial has an empty coefficient vector and degree -1. Nesting
// Poly<Poly<BigInt>> gives the recursive dense representation used for
// elimination.

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ptb/bigint.hpp"

namespace ptb {

inline bool is_zero(const BigInt& v) { return sgn(v) == 0; }
inline bool is_zero(const BigRational& v) { return sgn(v) == 0; }

template <class T>
class Poly {
 public:
  using Scalar = T;

  Poly() = default;
  Poly(const T& constant) {  // NOLINT(google-explicit-constructor)
    if (!is_zero(constant)) c_.push_back(constant);
  }
  explicit Poly(long constant) : Poly(T(constant)) {}
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly monomial(const T& coeff, std::size_t deg) {
    if (is_zero(coeff)) return {};
    std::vector<T> c(deg + 1);
    c[deg] = coeff;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(); }
  const T& lead() const {
    assert(!c_.empty());
    return c_.back();
  }

  void set_coeff(std::size_t i, const T& v) {
    if (i >= c_.size()) c_.resize(i + 1);
    c_[i] = v;
    trim();
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }

  Poly scaled(const T& s) const {
    if (is_zero(s)) return {};
    Poly r = *this;
    for (auto& v : r.c_) v *= s;
    r.trim();
    return r;
  }

  /// Multiply by x^k.
  Poly shifted(std::size_t k) const {
    if (c_.empty()) return {};
    std::vector<T> r(k, T());
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));  // NOLINT
    return Poly(std::move(r));
  }

  /// Horner evaluation in any ring U that T converts into.
  template <class U>
  U eval(const U& at) const {
    U acc = U();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + U(c_[i]);
    return acc;
  }

  /// Substitute x -> q(x).
  Poly compose(const Poly& q) const {
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + Poly(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

template <class T>
bool is_zero(const Poly<T>& p) {
  return p.is_zero_poly();
}

/// a^e by repeated squaring in any ring with a multiplicative identity T(1).
template <class T>
T power(const T& a, unsigned e) {
  T result(1);
  T base = a;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

/// Quotient and remainder over a field.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero_poly()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<T>(), a};
  std::vector<T> rem = a.coeffs();
  const int db = b.degree();
  std::vector<T> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const T inv_lead = T(1) / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    const T q = rem[i] * inv_lead;
    quo[i - db] = q;
    if (is_zero(q)) continue;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<T>(std::move(quo)), Poly<T>(std::move(rem))};
}

template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
  return divmod(a, b).second;
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero_poly()) {
    Poly<T> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero_poly()) return a;
  return a.scaled(T(1) / a.lead());
}

/// Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a mod b, computed without division.
template <class T>
Poly<T> pseudo_remainder(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero_poly()) throw std::domain_error("pseudo-remainder by zero");
  const int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<T> r = a.coeffs();
  const T& lb = b.lead();
  int delta = a.degree() - db + 1;
  for (int i = a.degree(); i >= db; --i) {
    const T lr = r[i];
    for (int k = 0; k <= i; ++k) r[k] = r[k] * lb;
    if (!is_zero(lr)) {
      for (int j = 0; j <= db; ++j) r[i - db + j] -= lr * b[j];
    }
    --delta;
  }
  r.resize(static_cast<std::size_t>(db));
  Poly<T> rem(std::move(r));
  if (delta > 0) rem = rem.scaled(power(lb, static_cast<unsigned>(delta)));
  return rem;
}

/// Exact quotient a / b over an integral domain; throws if b does not divide a.
template <class T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero_poly()) throw std::domain_error("exact division by zero polynomial");
  if (a.is_zero_poly()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("exact division: not divisible");
  std::vector<T> rem = a.coeffs();
  const int db = b.degree();
  std::vector<T> quo(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    if (is_zero(rem[i])) continue;
    const T q = exact_div(rem[i], b.lead());
    quo[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b[j];
  }
  for (int i = 0; i < db; ++i) {
    if (!is_zero(rem[i])) throw std::domain_error("exact division: not divisible");
  }
  return Poly<T>(std::move(quo));
}

/// Resultant of a and b over an integral domain by the subresultant
/// polynomial remainder sequence. Either argument of degree 0 is allowed;
/// both zero-degree inputs give a constant result.
template <class T>
T resultant(Poly<T> a, Poly<T> b) {
  if (a.is_zero_poly() || b.is_zero_poly()) return T();
  T s(1);
  if (a.degree() < b.degree()) {
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
    std::swap(a, b);
  }
  if (b.degree() == 0) return s * power(b.lead(), static_cast<unsigned>(a.degree()));
  T g(1);
  T h(1);
  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
    Poly<T> r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero_poly()) return T();
    const T divisor = g * power(h, static_cast<unsigned>(delta));
    Poly<T> next;
    {
      std::vector<T> c = r.coeffs();
      for (auto& v : c) v = exact_div(v, divisor);
      next = Poly<T>(std::move(c));
    }
    b = std::move(next);
    g = a.lead();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_div(power(g, static_cast<unsigned>(delta)), power(h, static_cast<unsigned>(delta - 1)));
    }
    if (b.degree() == 0) {
      const int da = a.degree();
      if (da == 1) return s * b.lead();
      return s * exact_div(power(b.lead(), static_cast<unsigned>(da)),
                           power(h, static_cast<unsigned>(da - 1)));
    }
  }
}

}  // namespace ptb
