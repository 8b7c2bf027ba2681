#include "ptb/numberfield.hpp"

#include <stdexcept>

#include "ptb/factor.hpp"
#include "ptb/realroots.hpp"

namespace ptb {
namespace {

using Vec = std::vector<BigRational>;

Vec to_vec(const UniPoly& p, int n) {
  Vec v(static_cast<std::size_t>(n));
  for (int i = 0; i <= p.degree() && i < n; ++i) v[i] = p[i];
  return v;
}

// Incremental row echelon form that remembers how each row was built.
class Echelon {
 public:
  Echelon(int width, int tags) : width_(width), tags_(tags) {}

  // Reduces v (with combination tag) against the rows. Returns true and
  // stores the row when v is independent; otherwise leaves the relation in tag.
  bool add(Vec v, Vec& tag) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const int pc = pivots_[r];
      if (sgn(v[pc]) == 0) continue;
      const BigRational m = v[pc];
      for (int j = 0; j < width_; ++j) {
        if (sgn(rows_[r][j]) != 0) v[j] -= m * rows_[r][j];
      }
      for (int j = 0; j < tags_; ++j) {
        if (sgn(row_tags_[r][j]) != 0) tag[j] -= m * row_tags_[r][j];
      }
    }
    int pc = -1;
    for (int j = 0; j < width_; ++j) {
      if (sgn(v[j]) != 0) {
        pc = j;
        break;
      }
    }
    if (pc < 0) return false;
    const BigRational inv = 1 / v[pc];
    for (auto& e : v) e *= inv;
    for (auto& e : tag) e *= inv;
    rows_.push_back(std::move(v));
    row_tags_.push_back(tag);
    pivots_.push_back(pc);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  int width_;
  int tags_;
  std::vector<Vec> rows_;
  std::vector<Vec> row_tags_;
  std::vector<int> pivots_;
};

UniPoly normalized_modulus(const UniPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("number field modulus must have positive degree");
  return monic(f);
}

void require_irreducible(const UniPoly& f, const char* who) {
  if (!is_irreducible(f, std::max(64, f.degree()))) {
    throw std::invalid_argument(std::string(who) + ": polynomial is reducible");
  }
}

}  // namespace

NumberFieldSignature signature_unchecked(const UniPoly& f) {
  NumberFieldSignature s;
  s.degree = f.degree();
  s.r1 = sturm_count(f);
  s.r2 = (s.degree - s.r1) / 2;
  return s;
}

NumberFieldSignature signature_of_poly(const UniPoly& f) {
  require_irreducible(f, "signature_of_poly");
  return signature_unchecked(f);
}

NFElem::NFElem(const UniPoly& v, std::shared_ptr<const UniPoly> modulus) : mod_(std::move(modulus)) {
  value_ = mod_ ? v % *mod_ : v;
}

NFElem operator+(const NFElem& a, const NFElem& b) {
  return {a.value_ + b.value_, a.mod_ ? a.mod_ : b.mod_, NFElem::raw_tag{}};
}

NFElem operator-(const NFElem& a, const NFElem& b) {
  return {a.value_ - b.value_, a.mod_ ? a.mod_ : b.mod_, NFElem::raw_tag{}};
}

NFElem operator*(const NFElem& a, const NFElem& b) {
  const auto& m = a.mod_ ? a.mod_ : b.mod_;
  if (a.value_.is_constant() || b.value_.is_constant()) {
    UniPoly p = a.value_.is_constant() ? b.value_.scaled(a.value_.coeff(0)) : a.value_.scaled(b.value_.coeff(0));
    return {std::move(p), m, NFElem::raw_tag{}};
  }
  return {a.value_ * b.value_, m};
}

NFElem NFElem::inverse() const {
  if (value_.is_zero_poly()) throw std::domain_error("number field: division by zero");
  if (value_.is_constant()) return {UniPoly(BigRational(1) / value_[0]), mod_, raw_tag{}};
  if (!mod_) throw std::domain_error("number field: element without modulus");
  // Extended Euclid: s * value = r (mod f).
  UniPoly r0 = *mod_, r1 = value_, s0, s1(BigRational(1));
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    UniPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.is_zero_poly()) throw std::domain_error("number field: element is a zero divisor");
  return {s1.scaled(BigRational(1) / r1[0]), mod_};
}

NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

NumberField::NumberField(const UniPoly& f)
    : modulus_(std::make_shared<const UniPoly>(normalized_modulus(f))) {}

UniPoly minpoly_in_quotient_unchecked(const UniPoly& f, const UniPoly& g) {
  const int n = f.degree();
  if (n < 1) throw std::invalid_argument("minpoly_in_quotient: modulus must have positive degree");
  const UniPoly gr = g % f;
  Echelon ech(n, n + 1);
  UniPoly power(BigRational(1));
  for (int k = 0; k <= n; ++k) {
    Vec tag(static_cast<std::size_t>(n) + 1);
    tag[k] = 1;
    if (!ech.add(to_vec(power, n), tag)) {
      // tag holds the relation sum tag_i g^i = 0 with tag_k = 1.
      tag.resize(static_cast<std::size_t>(k) + 1);
      return monic(UniPoly(std::move(tag)));
    }
    power = (power * gr) % f;
  }
  throw std::logic_error("minpoly_in_quotient: no dependency found");
}

UniPoly minpoly_in_quotient(const UniPoly& f, const UniPoly& g) {
  require_irreducible(f, "minpoly_in_quotient");
  if (g.degree() >= f.degree()) throw std::invalid_argument("minpoly_in_quotient: deg g must be below deg f");
  return minpoly_in_quotient_unchecked(f, g);
}

int subalgebra_dimension(const UniPoly& f, const std::vector<UniPoly>& gens) {
  const int n = f.degree();
  Echelon ech(n, 0);
  std::vector<UniPoly> basis;
  std::vector<UniPoly> queue{UniPoly(BigRational(1))};
  while (!queue.empty()) {
    UniPoly v = queue.back();
    queue.pop_back();
    Vec tag;
    if (!ech.add(to_vec(v, n), tag)) continue;
    basis.push_back(v);
    for (const auto& g : gens) queue.push_back((v * g) % f);
  }
  return static_cast<int>(ech.rank());
}

bool fields_isomorphic(const UniPoly& f, const UniPoly& g) {
  require_irreducible(f, "fields_isomorphic");
  require_irreducible(g, "fields_isomorphic");
  const int n = f.degree();
  if (n != g.degree()) return false;
  if (n == 1) return true;
  const ZPoly fz = primitive_integer(f);
  const ZPoly gz = primitive_integer(g);
  using ZPolyT = Poly<ZPoly>;  // polynomials in t over Z[x]
  std::vector<ZPoly> gc;
  for (const auto& c : gz.coeffs()) gc.emplace_back(c);
  const ZPolyT G(std::move(gc));
  const ZPolyT X(ZPoly{BigInt(0), BigInt(1)});
  const ZPolyT T = ZPolyT::monomial(ZPoly(BigInt(1)), 1);
  for (long s = 1; s <= 40; ++s) {
    const ZPolyT base = X - T.scaled(ZPoly(BigInt(s)));
    ZPolyT F;
    for (int i = fz.degree(); i >= 0; --i) F = F * base + ZPolyT(ZPoly(fz[i]));
    const UniPoly norm = to_rational(resultant(G, F));
    if (norm.degree() != n * n || !is_squarefree(norm)) continue;
    for (const auto& [h, m] : factor_rationals(norm, n * n)) {
      if (h.degree() == n) return true;
    }
    return false;
  }
  throw std::runtime_error("fields_isomorphic: no squarefree norm found");
}

}  // namespace ptb
