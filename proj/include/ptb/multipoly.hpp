#pragma once

// Sparse polynomials in the three trace variables x, y, z over the rationals,
// plus conversion to the recursive dense form used for elimination.

#include <array>
#include <map>
#include <string>

#include "ptb/unipoly.hpp"

namespace ptb {

using Exponent = std::array<int, 3>;

/// Recursive dense integer polynomial in three variables: outer[mid[inner]].
using ZPoly2 = Poly<ZPoly>;
using ZPoly3 = Poly<ZPoly2>;

class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const BigRational& c);  // NOLINT(google-explicit-constructor)
  explicit MultiPoly(long c) : MultiPoly(BigRational(c)) {}

  /// The variable x (0), y (1) or z (2).
  static MultiPoly var(int i);
  static MultiPoly monomial(const BigRational& c, const Exponent& e);

  const std::map<Exponent, BigRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  int degree_in(int v) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned e) const;
  /// Substitute (x, y, z) -> (s[0], s[1], s[2]).
  MultiPoly compose(const std::array<MultiPoly, 3>& s) const;

  /// Evaluate in any commutative ring U; `lift` maps a rational into U.
  template <class U, class Lift>
  U eval(const std::array<U, 3>& at, Lift lift) const {
    std::array<std::vector<U>, 3> powers;
    for (int v = 0; v < 3; ++v) {
      const int d = degree_in(v);
      powers[v].reserve(static_cast<std::size_t>(std::max(d, 0)) + 1);
      powers[v].push_back(lift(BigRational(1)));
      for (int k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * at[v]);
    }
    U acc = lift(BigRational(0));
    for (const auto& [e, c] : terms_) acc = acc + lift(c) * powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]];
    return acc;
  }

  BigRational eval(const BigRational& x, const BigRational& y, const BigRational& z) const;

  /// Human-readable form in x, y, z.
  std::string str() const;

 private:
  std::map<Exponent, BigRational> terms_;
};

/// Clear denominators and view f as a polynomial in `outer` with coefficients
/// in `mid` over `inner`. The scale factor multiplied in is returned.
ZPoly3 to_recursive(const MultiPoly& f, int outer, int mid, int inner, BigInt* scale = nullptr);
MultiPoly from_recursive(const ZPoly3& f, int outer, int mid, int inner);
MultiPoly from_recursive2(const ZPoly2& f, int outer, int inner);

/// Resultant with respect to `var` via the subresultant PRS. Throws
/// std::invalid_argument if either input is zero or both are constant in var.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

}  // namespace ptb
