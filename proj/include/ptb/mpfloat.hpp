#pragma once

// Thin value-semantics wrapper over mpfr_t. Every value carries its own
// precision; binary operations round to the larger of the operand precisions.

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "ptb/bigint.hpp"

namespace ptb {

class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  MpReal(double d, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  MpReal(const BigRational& q, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  MpReal(const BigInt& z, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  MpReal(const MpReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MpReal(MpReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  MpReal& operator=(const MpReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  MpReal& operator=(MpReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MpReal() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  BigRational to_rational() const {
    BigRational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }
  /// Decimal exponent-free rendering with `digits` significant digits.
  std::string str(int digits = 20) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

#define PTB_MP_BINOP(op, fn)                                                  \
  friend MpReal operator op(const MpReal& a, const MpReal& b) {              \
    MpReal r(std::max(a.precision(), b.precision()));                        \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                         \
    return r;                                                                \
  }                                                                          \
  MpReal& operator op##=(const MpReal& b) { return *this = *this op b; }
  PTB_MP_BINOP(+, mpfr_add)
  PTB_MP_BINOP(-, mpfr_sub)
  PTB_MP_BINOP(*, mpfr_mul)
  PTB_MP_BINOP(/, mpfr_div)
#undef PTB_MP_BINOP

  MpReal operator-() const {
    MpReal r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const MpReal& a, const MpReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const MpReal& a, const MpReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const MpReal& a, const MpReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const MpReal& a, const MpReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  friend MpReal abs(const MpReal& a) {
    MpReal r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend MpReal sqrt(const MpReal& a) {
    MpReal r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDU);
    return r;
  }
  /// a * 2^e, exact.
  friend MpReal ldexp(const MpReal& a, long e) {
    MpReal r(a.precision());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }

  static MpReal pi(mpfr_prec_t prec) {
    MpReal r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  friend MpReal cos(const MpReal& a) {
    MpReal r(a.precision());
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend MpReal sin(const MpReal& a) {
    MpReal r(a.precision());
    mpfr_sin(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

/// Relative rounding unit 2^(1 - prec).
inline MpReal ulp_factor(mpfr_prec_t prec) { return ldexp(MpReal(1.0, prec), 1 - static_cast<long>(prec)); }

struct MpComplex {
  MpReal re;
  MpReal im;

  explicit MpComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  MpComplex(MpReal r, MpReal i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }

  friend MpComplex operator+(const MpComplex& a, const MpComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend MpComplex operator-(const MpComplex& a, const MpComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend MpComplex operator*(const MpComplex& a, const MpComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend MpComplex operator/(const MpComplex& a, const MpComplex& b) {
    const MpReal d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  MpComplex operator-() const { return {-re, -im}; }
  MpComplex conj() const { return {re, -im}; }
  MpReal norm2() const { return re * re + im * im; }
  MpReal abs() const { return sqrt(norm2()); }
};

}  // namespace ptb
