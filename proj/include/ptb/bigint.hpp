#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ptb {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Parse "p" or "p/q" into a canonical rational. Throws std::invalid_argument.
BigRational parse_rational(std::string_view text);

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const BigRational& v) { return v.get_str(); }

inline int sign(const BigInt& v) { return sgn(v); }
inline int sign(const BigRational& v) { return sgn(v); }

inline bool is_integer(const BigRational& v) { return v.get_den() == 1; }

/// Exact quotient; the caller guarantees divisibility.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline BigRational exact_div(const BigRational& a, const BigRational& b) { return a / b; }

inline BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace ptb

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
