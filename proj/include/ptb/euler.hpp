#pragma once

// Relative Euler class of real punctured-torus characters: Thurston's
// orientation cocycle on the circle at infinity and the two developed ideal
// triangles of the fiber. Signs are decided exactly.

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "ptb/fricke.hpp"
#include "ptb/realroots.hpp"

namespace ptb {

/// Q(theta) for a real root theta of an irreducible monic polynomial, pinned
/// by an isolating interval. Q itself is the field of the root of t.
class RealNumberField {
 public:
  RealNumberField(const UniPoly& minpoly, const RationalInterval& where);
  static std::shared_ptr<const RealNumberField> rationals();

  const UniPoly& minpoly() const { return minpoly_; }
  const RationalInterval& interval() const { return interval_; }
  int degree() const { return minpoly_.degree(); }

  /// Exact sign of v(theta).
  int sign_of(const UniPoly& v) const;
  double approx(const UniPoly& v) const;
  /// An interval around theta of width at most w.
  RationalInterval refined(const BigRational& w) const;

 private:
  UniPoly minpoly_;
  RationalInterval interval_;
};

using RealFieldPtr = std::shared_ptr<const RealNumberField>;

/// Element of a RealNumberField. A default or integer-constructed value has
/// no field and adopts its partner's in arithmetic.
class RealAlgebraic {
 public:
  RealAlgebraic() = default;
  RealAlgebraic(long c) : value_(BigRational(c)) {}  // NOLINT(google-explicit-constructor)
  RealAlgebraic(const BigRational& c) : value_(c) {}  // NOLINT(google-explicit-constructor)
  RealAlgebraic(const UniPoly& v, RealFieldPtr field);

  const UniPoly& value() const { return value_; }
  const RealFieldPtr& field() const { return field_; }

  int sign() const;
  double to_double() const;
  std::string str() const;

  RealAlgebraic operator-() const { return {-value_, field_, raw_tag{}}; }
  friend RealAlgebraic operator+(const RealAlgebraic& a, const RealAlgebraic& b);
  friend RealAlgebraic operator-(const RealAlgebraic& a, const RealAlgebraic& b);
  friend RealAlgebraic operator*(const RealAlgebraic& a, const RealAlgebraic& b);
  RealAlgebraic& operator+=(const RealAlgebraic& o) { return *this = *this + o; }
  RealAlgebraic& operator-=(const RealAlgebraic& o) { return *this = *this - o; }
  RealAlgebraic& operator*=(const RealAlgebraic& o) { return *this = *this * o; }
  friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) { return (a - b).sign() == 0; }
  friend bool operator!=(const RealAlgebraic& a, const RealAlgebraic& b) { return !(a == b); }

 private:
  struct raw_tag {};
  RealAlgebraic(UniPoly v, RealFieldPtr f, raw_tag) : value_(std::move(v)), field_(std::move(f)) {}
  UniPoly value_;
  RealFieldPtr field_;
};

/// a + b sqrt(d) with a, b, d in one real field and d >= 0; a ring, which is
/// all the developing computation needs.
class QuadReal {
 public:
  QuadReal() = default;
  QuadReal(long c) : a_(c) {}  // NOLINT(google-explicit-constructor)
  QuadReal(const RealAlgebraic& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadReal(const RealAlgebraic& a, const RealAlgebraic& b, std::shared_ptr<const RealAlgebraic> d);

  const RealAlgebraic& rational_part() const { return a_; }
  const RealAlgebraic& root_part() const { return b_; }

  int sign() const;
  double to_double() const;

  QuadReal operator-() const;
  friend QuadReal operator+(const QuadReal& x, const QuadReal& y);
  friend QuadReal operator-(const QuadReal& x, const QuadReal& y);
  friend QuadReal operator*(const QuadReal& x, const QuadReal& y);
  QuadReal& operator+=(const QuadReal& o) { return *this = *this + o; }
  QuadReal& operator-=(const QuadReal& o) { return *this = *this - o; }
  QuadReal& operator*=(const QuadReal& o) { return *this = *this * o; }
  friend bool operator==(const QuadReal& x, const QuadReal& y) { return (x - y).sign() == 0; }
  friend bool operator!=(const QuadReal& x, const QuadReal& y) { return !(x == y); }

 private:
  RealAlgebraic a_, b_;
  std::shared_ptr<const RealAlgebraic> d_;
};

}  // namespace ptb

namespace Eigen {

template <>
struct NumTraits<ptb::RealAlgebraic> : GenericNumTraits<ptb::RealAlgebraic> {
  using Real = ptb::RealAlgebraic;
  using NonInteger = ptb::RealAlgebraic;
  using Nested = ptb::RealAlgebraic;
  using Literal = ptb::RealAlgebraic;
  enum { IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1, ReadCost = 10, AddCost = 200, MulCost = 400 };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<ptb::QuadReal> : GenericNumTraits<ptb::QuadReal> {
  using Real = ptb::QuadReal;
  using NonInteger = ptb::QuadReal;
  using Nested = ptb::QuadReal;
  using Literal = ptb::QuadReal;
  enum { IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1, ReadCost = 20, AddCost = 400, MulCost = 1600 };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace ptb {

template <class S>
using Mat2 = Eigen::Matrix<S, 2, 2>;

inline int sign_of(const BigRational& q) { return sgn(q); }
inline int sign_of(const RealAlgebraic& q) { return q.sign(); }
inline int sign_of(const QuadReal& q) { return q.sign(); }

/// A point (u : w) of the projective line RP^1 = R u {inf}.
template <class S>
struct BoundaryPoint {
  S u{1};
  S w{0};

  static BoundaryPoint infinity() { return {S(1), S(0)}; }
  static BoundaryPoint finite(const S& a) { return {a, S(1)}; }
};

template <class S>
BoundaryPoint<S> act(const Mat2<S>& g, const BoundaryPoint<S>& p) {
  return {g(0, 0) * p.u + g(0, 1) * p.w, g(1, 0) * p.u + g(1, 1) * p.w};
}

template <class S>
Mat2<S> sl2_inverse(const Mat2<S>& g) {
  Mat2<S> r;
  r << g(1, 1), -g(0, 1), -g(1, 0), g(0, 0);
  return r;
}

/// Cyclic order of three points: sign((a-b)(b-c)(c-a)), with infinity handled
/// in homogeneous coordinates; (0, 1, inf) is +1.
template <class S>
int cyclic_orientation(const BoundaryPoint<S>& a, const BoundaryPoint<S>& b, const BoundaryPoint<S>& c) {
  auto cross = [](const BoundaryPoint<S>& p, const BoundaryPoint<S>& q) -> S { return p.u * q.w - q.u * p.w; };
  const S prod = cross(a, b) * cross(b, c) * cross(c, a);
  return sign_of(prod);
}

template <class S>
struct IdealTriangle {
  BoundaryPoint<S> a, b, c;

  int orientation() const { return cyclic_orientation(a, b, c); }
};

template <class S>
int thurston_cocycle(const Mat2<S>& g0, const Mat2<S>& g1, const Mat2<S>& g2, const BoundaryPoint<S>& p) {
  return cyclic_orientation(act(g0, p), act(g1, p), act(g2, p));
}

template <class S>
int cocycle_coboundary(const Mat2<S>& g0, const Mat2<S>& g1, const Mat2<S>& g2, const Mat2<S>& g3,
                       const BoundaryPoint<S>& p) {
  return thurston_cocycle(g1, g2, g3, p) - thurston_cocycle(g0, g2, g3, p) + thurston_cocycle(g0, g1, g3, p) -
         thurston_cocycle(g0, g1, g2, p);
}

struct RealCharacter {
  CharacterPoint<RealAlgebraic> coords;

  static RealCharacter rational(const BigRational& x, const BigRational& y, const BigRational& z);
  RealAlgebraic residual() const { return markov_residual(coords); }
  std::string str() const;
};

class CharacterSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "x,y,z", each coordinate "p/q" or "algebraic:c0;c1;...:lo:hi" (coefficients
/// lowest degree first, lo < hi isolating one root). Algebraic coordinates
/// from different fields are moved into a common primitive field.
RealCharacter parse_real_character(const std::string& text);

/// Common real field of two real fields: the field, then polynomials giving
/// the generators of a and b in terms of the new generator.
struct Compositum {
  RealFieldPtr field;
  UniPoly embed_a, embed_b;
};
Compositum real_compositum(const RealFieldPtr& a, const RealFieldPtr& b);

class ReducibleCharacterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EllipticCharacterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EulerPreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A = [[x, -1], [1, 0]], B = [[0, xi], [-1/xi, y]] with xi + 1/xi = z, after
/// a cyclic change of marking when |z| < 2.
std::pair<Mat2<QuadReal>, Mat2<QuadReal>> char_to_matrices(const RealCharacter& c);

struct EulerResult {
  int s1 = 0;
  int s2 = 0;
  std::optional<int> e;  // (s1 + s2) / 2, absent when degenerate
  bool degenerate = false;
  int chi = -1;
  IdealTriangle<QuadReal> t1, t2;
};

/// Develop the triangles (v, Av, ABv) and (v, ABv, Bv), v fixed by [A, B] = A^-1 B^-1 A B.
EulerResult euler_from_matrices(const Mat2<QuadReal>& A, const Mat2<QuadReal>& B);

/// Requires markov residual exactly 0.
EulerResult relative_euler_class(const RealCharacter& c);

struct MilnorWoodVerdict {
  bool mw_ok = false;
  bool parity_odd = false;
};

/// |e| <= -chi and e mod 2. Throws on a degenerate result.
MilnorWoodVerdict milnor_wood_parity_check(const EulerResult& r);

}  // namespace ptb
