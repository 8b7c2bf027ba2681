#pragma once

#include <stdexcept>
#include <vector>

#include "ptb/mpfloat.hpp"
#include "ptb/unipoly.hpp"

namespace ptb {

/// A certified root enclosure: exactly one root of the polynomial lies in the
/// closed disk of the given radius around `center`. The enclosing box is
/// center +- radius in both coordinates.
struct ComplexRootBox {
  MpComplex center;
  MpReal radius;
  bool real = false;

  bool overlaps(const ComplexRootBox& o) const;
};

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Certified isolation of all complex roots of a squarefree f at the given
/// working precision (>= 64 bits). Disks are pairwise disjoint; real roots
/// are flagged and have a zero imaginary center. Throws PrecisionError when
/// certification fails at this precision.
std::vector<ComplexRootBox> isolate_complex_roots(const UniPoly& f, long precision_bits = 128);

/// Retries isolate_complex_roots with doubled precision, up to `max_bits`.
std::vector<ComplexRootBox> isolate_complex_roots_adaptive(const UniPoly& f, long start_bits = 128,
                                                           long max_bits = 4096);

/// Midpoint-radius complex ball with rounding absorbed into the radius.
struct ComplexBall {
  MpComplex mid;
  MpReal rad;

  explicit ComplexBall(mpfr_prec_t prec = 128) : mid(prec), rad(prec) {}
  ComplexBall(MpComplex m, MpReal r) : mid(std::move(m)), rad(std::move(r)) {}
  static ComplexBall from_rational(const BigRational& q, mpfr_prec_t prec);
  static ComplexBall from_box(const ComplexRootBox& b) { return {b.center, b.radius}; }

  mpfr_prec_t precision() const { return mid.precision(); }

  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
  /// Throws std::domain_error when the divisor ball contains zero.
  friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
  ComplexBall operator-() const { return {-mid, rad}; }

  /// -1, +1, or 0 when the sign is not decided by the ball.
  int im_sign() const;
  int re_sign() const;
  bool contains_zero() const;
  /// Upper bound for |z| over the ball.
  MpReal abs_upper() const;
  MpReal abs_lower() const;
};

/// Evaluate a rational polynomial on a ball.
ComplexBall eval_ball(const UniPoly& p, const ComplexBall& at);

}  // namespace ptb
