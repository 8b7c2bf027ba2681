#include "ptb/euler.hpp"

#include <cmath>
#include <sstream>

#include "ptb/factor.hpp"
#include "ptb/numberfield.hpp"

namespace ptb {
namespace {

struct Range {
  BigRational lo, hi;
};

Range mul(const Range& a, const Range& b) {
  const BigRational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  Range r{p[0], p[0]};
  for (const auto& v : p) {
    if (v < r.lo) r.lo = v;
    if (v > r.hi) r.hi = v;
  }
  return r;
}

Range eval_range(const UniPoly& v, const RationalInterval& iv) {
  Range acc{v.lead(), v.lead()};
  const Range x{iv.lo, iv.hi};
  for (int i = v.degree() - 1; i >= 0; --i) {
    acc = mul(acc, x);
    acc.lo += v[i];
    acc.hi += v[i];
  }
  return acc;
}

const RealFieldPtr& pick_field(const RealFieldPtr& a, const RealFieldPtr& b) {
  if (a && b && a != b && a->minpoly() != b->minpoly()) {
    throw std::invalid_argument("real algebraic arithmetic across different fields");
  }
  return a ? a : b;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

struct ParsedCoordinate {
  RealFieldPtr field;  // null for a rational
  UniPoly value;
};

ParsedCoordinate parse_coordinate(const std::string& text) {
  static const std::string tag = "algebraic:";
  try {
    if (text.rfind(tag, 0) != 0) return {nullptr, UniPoly(parse_rational(text))};
    const auto parts = split(text.substr(tag.size()), ':');
    if (parts.size() != 3) throw CharacterSyntaxError("expected algebraic:<coeffs>:<lo>:<hi> in '" + text + "'");
    const UniPoly f = from_coeff_strings(split(parts[0], ';'));
    if (f.degree() < 1) throw CharacterSyntaxError("constant minimal polynomial in '" + text + "'");
    if (!is_irreducible(f)) throw CharacterSyntaxError("reducible minimal polynomial in '" + text + "'");
    auto field = std::make_shared<const RealNumberField>(
        monic(f), RationalInterval{parse_rational(parts[1]), parse_rational(parts[2])});
    return {field, UniPoly::x()};
  } catch (const CharacterSyntaxError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw CharacterSyntaxError("bad coordinate '" + text + "': " + e.what());
  }
}

bool at_least_two_in_abs(const RealAlgebraic& v) { return (v - 2).sign() >= 0 || (v + 2).sign() <= 0; }

}  // namespace

RealNumberField::RealNumberField(const UniPoly& minpoly, const RationalInterval& where) : minpoly_(monic(minpoly)) {
  if (minpoly_.degree() < 1) throw std::invalid_argument("real field: constant minimal polynomial");
  if (minpoly_.degree() == 1) {
    const BigRational r = -minpoly_[0];
    interval_ = {r, r};
    return;
  }
  if (!(where.lo < where.hi)) throw std::invalid_argument("real field: interval needs lo < hi");
  if (sturm_count(minpoly_, where.lo, where.hi) != 1) {
    throw std::invalid_argument("real field: interval does not isolate exactly one root");
  }
  interval_ = where;
}

std::shared_ptr<const RealNumberField> RealNumberField::rationals() {
  static const auto q = std::make_shared<const RealNumberField>(UniPoly::x(), RationalInterval{0, 0});
  return q;
}

RationalInterval RealNumberField::refined(const BigRational& w) const {
  if (interval_.is_point() || interval_.width() <= w) return interval_;
  return refine_root(minpoly_, interval_, w);
}

int RealNumberField::sign_of(const UniPoly& v) const {
  const UniPoly r = v % minpoly_;
  if (r.is_zero_poly()) return 0;
  if (r.is_constant()) return sgn(r[0]);
  RationalInterval iv = interval_;
  while (true) {
    const Range e = eval_range(r, iv);
    if (sgn(e.lo) > 0) return 1;
    if (sgn(e.hi) < 0) return -1;
    iv = refine_root(minpoly_, iv, iv.width() / 4);
  }
}

double RealNumberField::approx(const UniPoly& v) const {
  const RationalInterval iv = refined(BigRational(1, BigInt(1) << 80));
  return eval_range(v % minpoly_, {iv.midpoint(), iv.midpoint()}).lo.get_d();
}

RealAlgebraic::RealAlgebraic(const UniPoly& v, RealFieldPtr field)
    : value_(field ? v % field->minpoly() : v), field_(std::move(field)) {}

int RealAlgebraic::sign() const {
  if (field_) return field_->sign_of(value_);
  return value_.is_zero_poly() ? 0 : sgn(value_[0]);
}

double RealAlgebraic::to_double() const {
  if (field_) return field_->approx(value_);
  return value_.is_zero_poly() ? 0.0 : value_[0].get_d();
}

std::string RealAlgebraic::str() const {
  if (value_.is_constant()) return value_.is_zero_poly() ? "0" : value_[0].get_str();
  std::ostringstream os;
  os << format_poly(value_, "theta") << " (~" << to_double() << ")";
  return os.str();
}

RealAlgebraic operator+(const RealAlgebraic& a, const RealAlgebraic& b) {
  return {a.value_ + b.value_, pick_field(a.field_, b.field_), RealAlgebraic::raw_tag{}};
}

RealAlgebraic operator-(const RealAlgebraic& a, const RealAlgebraic& b) {
  return {a.value_ - b.value_, pick_field(a.field_, b.field_), RealAlgebraic::raw_tag{}};
}

RealAlgebraic operator*(const RealAlgebraic& a, const RealAlgebraic& b) {
  const RealFieldPtr& f = pick_field(a.field_, b.field_);
  UniPoly p = a.value_ * b.value_;
  if (f) p = p % f->minpoly();
  return {std::move(p), f, RealAlgebraic::raw_tag{}};
}

QuadReal::QuadReal(const RealAlgebraic& a, const RealAlgebraic& b, std::shared_ptr<const RealAlgebraic> d)
    : a_(a), b_(b), d_(std::move(d)) {
  if (d_ && d_->sign() < 0) throw std::invalid_argument("QuadReal: negative radicand");
}

int QuadReal::sign() const {
  const int sa = a_.sign();
  const int sb = (d_ && d_->sign() != 0) ? b_.sign() : 0;
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 d
  const int s = (a_ * a_ - b_ * b_ * *d_).sign();
  if (s == 0) return 0;
  return s > 0 ? sa : sb;
}

double QuadReal::to_double() const {
  const double root = d_ ? std::sqrt(std::max(0.0, d_->to_double())) : 0.0;
  return a_.to_double() + b_.to_double() * root;
}

QuadReal QuadReal::operator-() const { return {-a_, -b_, d_}; }

namespace {

std::shared_ptr<const RealAlgebraic> pick_radicand(const std::shared_ptr<const RealAlgebraic>& x,
                                                   const std::shared_ptr<const RealAlgebraic>& y) {
  if (x && y && x != y && *x != *y) throw std::invalid_argument("QuadReal arithmetic across different radicands");
  return x ? x : y;
}

}  // namespace

QuadReal operator+(const QuadReal& x, const QuadReal& y) {
  QuadReal r;
  r.a_ = x.a_ + y.a_;
  r.b_ = x.b_ + y.b_;
  r.d_ = pick_radicand(x.d_, y.d_);
  return r;
}

QuadReal operator-(const QuadReal& x, const QuadReal& y) { return x + (-y); }

QuadReal operator*(const QuadReal& x, const QuadReal& y) {
  QuadReal r;
  r.d_ = pick_radicand(x.d_, y.d_);
  r.a_ = x.a_ * y.a_;
  if (r.d_) r.a_ += x.b_ * y.b_ * *r.d_;
  r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  return r;
}

Compositum real_compositum(const RealFieldPtr& a, const RealFieldPtr& b) {
  if (a->degree() == 1) return {b, UniPoly(a->interval().lo), UniPoly::x()};
  if (b->degree() == 1) return {a, UniPoly::x(), UniPoly(b->interval().lo)};
  const ZPoly fz = primitive_integer(a->minpoly());
  const ZPoly gz = primitive_integer(b->minpoly());
  using ZPolyT = Poly<ZPoly>;
  std::vector<ZPoly> gc;
  for (const auto& c : gz.coeffs()) gc.emplace_back(c);
  const ZPolyT G(std::move(gc));
  const ZPolyT X(ZPoly{BigInt(0), BigInt(1)});
  const ZPolyT T = ZPolyT::monomial(ZPoly(BigInt(1)), 1);
  const int n = a->degree() * b->degree();
  for (long s = 1; s <= 40; ++s) {
    // gamma = alpha + s beta is a root of Res_t(g(t), f(X - s t))
    const ZPolyT base = X - T.scaled(ZPoly(BigInt(s)));
    ZPolyT F;
    for (int i = fz.degree(); i >= 0; --i) F = F * base + ZPolyT(ZPoly(fz[i]));
    const UniPoly norm = to_rational(resultant(G, F));
    if (norm.degree() != n || !is_squarefree(norm)) continue;
    const auto factors = factor_rationals(norm, n);
    UniPoly h;
    RationalInterval J;
    for (BigRational w(1);; w /= 4) {
      const RationalInterval ia = a->refined(w), ib = b->refined(w);
      J = {ia.lo + s * ib.lo, ia.hi + s * ib.hi};
      int hits = 0;
      for (const auto& [p, m] : factors) {
        const int k = sturm_count(p, J.lo, J.hi);
        hits += k;
        if (k) h = monic(p);
      }
      if (hits == 1) break;
    }
    const NumberField H(h);
    std::vector<NFElem> gcoef;
    for (const auto& c : b->minpoly().coeffs()) gcoef.push_back(H.constant(c));
    const Poly<NFElem> Gt(std::move(gcoef));
    const Poly<NFElem> lin{H.gen(), H.constant(BigRational(-s))};
    Poly<NFElem> Ft;
    for (int i = a->minpoly().degree(); i >= 0; --i) Ft = Ft * lin + Poly<NFElem>(H.constant(a->minpoly()[i]));
    const Poly<NFElem> g = gcd(Gt, Ft);
    if (g.degree() != 1) continue;
    const NFElem beta = -(g[0] / g[1]);
    const NFElem alpha = H.gen() - H.constant(BigRational(s)) * beta;
    return {std::make_shared<const RealNumberField>(h, J), alpha.value(), beta.value()};
  }
  throw std::runtime_error("real_compositum: no primitive element found");
}

RealCharacter RealCharacter::rational(const BigRational& x, const BigRational& y, const BigRational& z) {
  return {{RealAlgebraic(x), RealAlgebraic(y), RealAlgebraic(z)}};
}

std::string RealCharacter::str() const {
  return "(" + coords[0].str() + ", " + coords[1].str() + ", " + coords[2].str() + ")";
}

RealCharacter parse_real_character(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw CharacterSyntaxError("expected three comma-separated coordinates");
  std::array<ParsedCoordinate, 3> pc;
  for (int i = 0; i < 3; ++i) pc[i] = parse_coordinate(parts[i]);
  RealFieldPtr field;
  std::array<UniPoly, 3> vals;
  for (int i = 0; i < 3; ++i) {
    vals[i] = pc[i].value;
    if (!pc[i].field) continue;
    if (!field) {
      field = pc[i].field;
      continue;
    }
    const Compositum c = real_compositum(field, pc[i].field);
    for (int j = 0; j < i; ++j) {
      if (pc[j].field || !vals[j].is_constant()) vals[j] = vals[j].compose(c.embed_a) % c.field->minpoly();
    }
    vals[i] = c.embed_b;
    field = c.field;
  }
  RealCharacter out;
  for (int i = 0; i < 3; ++i) out.coords[i] = field ? RealAlgebraic(vals[i], field) : RealAlgebraic(vals[i].coeff(0));
  return out;
}

std::pair<Mat2<QuadReal>, Mat2<QuadReal>> char_to_matrices(const RealCharacter& c) {
  const auto& p = c.coords;
  if ((c.residual() - 4).sign() == 0) {
    throw ReducibleCharacterError("character " + c.str() + " is reducible (commutator trace 2)");
  }
  int k = 0;
  while (k < 3 && !at_least_two_in_abs(p[(k + 2) % 3])) ++k;
  if (k == 3) throw EllipticCharacterError("elliptic character not realizable in this normal form: " + c.str());
  // marking with traces (p[k], p[k+1], p[k+2])
  const RealAlgebraic x = p[k % 3], y = p[(k + 1) % 3], z = p[(k + 2) % 3];
  const auto d = std::make_shared<const RealAlgebraic>(z * z - 4);
  const RealAlgebraic half(BigRational(1, 2));
  const QuadReal xi(z * half, half, d);
  const QuadReal xi_inv = QuadReal(z) - xi;
  Mat2<QuadReal> A, B;
  A << QuadReal(x), QuadReal(-1), QuadReal(1), QuadReal(0);
  B << QuadReal(0), xi, -xi_inv, QuadReal(y);
  for (int i = 0; i < k; ++i) {
    const Mat2<QuadReal> A0 = sl2_inverse<QuadReal>(A * B);
    B = A;
    A = A0;
  }
  const Mat2<QuadReal> AB = A * B;
  const Mat2<QuadReal> comm = sl2_inverse<QuadReal>(A) * sl2_inverse<QuadReal>(B) * AB;
  if (A.trace() != QuadReal(p[0]) || B.trace() != QuadReal(p[1]) || AB.trace() != QuadReal(p[2]) ||
      comm.trace() != QuadReal(c.residual() - 2)) {
    throw std::logic_error("char_to_matrices: trace check failed for " + c.str());
  }
  return {A, B};
}

EulerResult euler_from_matrices(const Mat2<QuadReal>& A, const Mat2<QuadReal>& B) {
  const Mat2<QuadReal> AB = A * B;
  const Mat2<QuadReal> C = sl2_inverse<QuadReal>(A) * sl2_inverse<QuadReal>(B) * AB;
  BoundaryPoint<QuadReal> v = BoundaryPoint<QuadReal>::infinity();
  if (C(1, 0).sign() != 0) v = {C(0, 0) - C(1, 1), C(1, 0) * QuadReal(2)};
  EulerResult r;
  r.t1 = {v, act(A, v), act<QuadReal>(AB, v)};
  r.t2 = {v, act<QuadReal>(AB, v), act(B, v)};
  r.s1 = r.t1.orientation();
  r.s2 = r.t2.orientation();
  r.degenerate = r.s1 == 0 || r.s2 == 0 || (r.s1 + r.s2) % 2 != 0;
  if (!r.degenerate) r.e = (r.s1 + r.s2) / 2;
  return r;
}

EulerResult relative_euler_class(const RealCharacter& c) {
  if (c.residual().sign() != 0) {
    throw EulerPreconditionError("markov residual of " + c.str() + " is " + c.residual().str() + ", not 0");
  }
  const auto [A, B] = char_to_matrices(c);
  return euler_from_matrices(A, B);
}

MilnorWoodVerdict milnor_wood_parity_check(const EulerResult& r) {
  if (r.degenerate || !r.e) throw std::invalid_argument("milnor_wood_parity_check: degenerate Euler result");
  return {std::abs(*r.e) <= -r.chi, *r.e % 2 != 0};
}

}  // namespace ptb
