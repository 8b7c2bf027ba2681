#pragma once

#include <memory>

#include "ptb/unipoly.hpp"

namespace ptb {

struct NumberFieldSignature {
  int r1 = 0;
  int r2 = 0;
  int degree = 0;
};

/// r1 from a Sturm count over the reals, r2 = (deg - r1) / 2.
/// Throws std::invalid_argument on reducible input.
NumberFieldSignature signature_of_poly(const UniPoly& f);
/// Same count without the irreducibility check, for callers that factored already.
NumberFieldSignature signature_unchecked(const UniPoly& f);

/// Element of Q[t]/(f), kept reduced. A default-constructed or integer-built
/// element carries no modulus and adopts the one of its operation partner.
class NFElem {
 public:
  NFElem() = default;
  explicit NFElem(long c) : value_(BigRational(c)) {}
  NFElem(const UniPoly& v, std::shared_ptr<const UniPoly> modulus);

  const UniPoly& value() const { return value_; }
  const std::shared_ptr<const UniPoly>& modulus() const { return mod_; }
  bool is_zero_elem() const { return value_.is_zero_poly(); }

  NFElem operator-() const { return {-value_, mod_, raw_tag{}}; }
  friend NFElem operator+(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a, const NFElem& b);
  friend NFElem operator*(const NFElem& a, const NFElem& b);
  /// Throws std::domain_error on division by zero.
  friend NFElem operator/(const NFElem& a, const NFElem& b);
  NFElem& operator+=(const NFElem& o) { return *this = *this + o; }
  NFElem& operator-=(const NFElem& o) { return *this = *this - o; }
  NFElem& operator*=(const NFElem& o) { return *this = *this * o; }
  friend bool operator==(const NFElem& a, const NFElem& b) { return a.value_ == b.value_; }

  NFElem inverse() const;

 private:
  struct raw_tag {};
  NFElem(UniPoly v, std::shared_ptr<const UniPoly> m, raw_tag) : value_(std::move(v)), mod_(std::move(m)) {}
  UniPoly value_;
  std::shared_ptr<const UniPoly> mod_;
};

inline bool is_zero(const NFElem& e) { return e.is_zero_elem(); }

/// The ring Q[t]/(f) for monic-normalized f.
class NumberField {
 public:
  explicit NumberField(const UniPoly& f);
  int degree() const { return modulus_->degree(); }
  const UniPoly& modulus() const { return *modulus_; }
  NFElem element(const UniPoly& v) const { return {v, modulus_}; }
  NFElem gen() const { return element(UniPoly::x()); }
  NFElem constant(const BigRational& c) const { return element(UniPoly(c)); }

 private:
  std::shared_ptr<const UniPoly> modulus_;
};

/// Monic minimal polynomial of g(t) in Q[t]/(f), by the first linear
/// dependency among powers of g. Throws std::invalid_argument for reducible f.
UniPoly minpoly_in_quotient(const UniPoly& f, const UniPoly& g);
/// Same without the irreducibility check.
UniPoly minpoly_in_quotient_unchecked(const UniPoly& f, const UniPoly& g);

/// Dimension over Q of the subalgebra of Q[t]/(f) generated by the given elements.
int subalgebra_dimension(const UniPoly& f, const std::vector<UniPoly>& gens);

/// Whether Q[x]/(f) and Q[x]/(g) are isomorphic, decided exactly by factoring
/// f over Q[t]/(g) through a norm (Trager) and looking for a linear factor.
/// Throws std::invalid_argument on reducible input.
bool fields_isomorphic(const UniPoly& f, const UniPoly& g);

}  // namespace ptb
