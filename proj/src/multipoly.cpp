#include "ptb/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace ptb {

MultiPoly::MultiPoly(const BigRational& c) {
  if (sgn(c) != 0) terms_[{0, 0, 0}] = c;
}

MultiPoly MultiPoly::var(int i) {
  Exponent e{0, 0, 0};
  e.at(static_cast<std::size_t>(i)) = 1;
  return monomial(BigRational(1), e);
}

MultiPoly MultiPoly::monomial(const BigRational& c, const Exponent& e) {
  MultiPoly r;
  if (sgn(c) != 0) r.terms_[e] = c;
  return r;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

int MultiPoly::degree_in(int v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      r.terms_[e] += ca * cb;
    }
  }
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    if (sgn(it->second) == 0) {
      it = r.terms_.erase(it);
    } else {
      ++it;
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const { return power(*this, e); }

MultiPoly MultiPoly::compose(const std::array<MultiPoly, 3>& s) const {
  return eval<MultiPoly>(s, [](const BigRational& q) { return MultiPoly(q); });
}

BigRational MultiPoly::eval(const BigRational& x, const BigRational& y, const BigRational& z) const {
  return eval<BigRational>({x, y, z}, [](const BigRational& q) { return q; });
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  static const char* names[3] = {"x", "y", "z"};
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigRational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = e[0] == 0 && e[1] == 0 && e[2] == 0;
    bool need_star = false;
    if (a != 1 || constant) {
      os << a.get_str();
      need_star = true;
    }
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (need_star) os << "*";
      os << names[v];
      if (e[v] > 1) os << "^" << e[v];
      need_star = true;
    }
  }
  return os.str();
}

ZPoly3 to_recursive(const MultiPoly& f, int outer, int mid, int inner, BigInt* scale) {
  BigInt den = 1;
  for (const auto& [e, c] : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  if (scale) *scale = den;
  const int d_outer = std::max(f.degree_in(outer), 0);
  std::vector<std::vector<std::vector<BigInt>>> grid(static_cast<std::size_t>(d_outer) + 1);
  const int d_mid = std::max(f.degree_in(mid), 0);
  const int d_inner = std::max(f.degree_in(inner), 0);
  for (auto& row : grid) {
    row.assign(static_cast<std::size_t>(d_mid) + 1, std::vector<BigInt>(static_cast<std::size_t>(d_inner) + 1));
  }
  for (const auto& [e, c] : f.terms()) {
    const BigRational scaled = c * BigRational(den);
    grid[e[outer]][e[mid]][e[inner]] = scaled.get_num();
  }
  std::vector<ZPoly2> outer_c;
  outer_c.reserve(grid.size());
  for (auto& row : grid) {
    std::vector<ZPoly> mid_c;
    mid_c.reserve(row.size());
    for (auto& col : row) mid_c.emplace_back(std::move(col));
    outer_c.emplace_back(std::move(mid_c));
  }
  return ZPoly3(std::move(outer_c));
}

MultiPoly from_recursive(const ZPoly3& f, int outer, int mid, int inner) {
  MultiPoly r;
  for (int i = 0; i <= f.degree(); ++i) {
    for (int j = 0; j <= f[i].degree(); ++j) {
      for (int k = 0; k <= f[i][j].degree(); ++k) {
        if (f[i][j][k] == 0) continue;
        Exponent e{0, 0, 0};
        e[outer] = i;
        e[mid] = j;
        e[inner] = k;
        r += MultiPoly::monomial(BigRational(f[i][j][k]), e);
      }
    }
  }
  return r;
}

MultiPoly from_recursive2(const ZPoly2& f, int outer, int inner) {
  MultiPoly r;
  for (int j = 0; j <= f.degree(); ++j) {
    for (int k = 0; k <= f[j].degree(); ++k) {
      if (f[j][k] == 0) continue;
      Exponent e{0, 0, 0};
      e[outer] = j;
      e[inner] = k;
      r += MultiPoly::monomial(BigRational(f[j][k]), e);
    }
  }
  return r;
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero input");
  const int df = f.degree_in(var);
  const int dg = g.degree_in(var);
  if (df <= 0 && dg <= 0) throw std::invalid_argument("resultant: both inputs are constant in the variable");
  int others[2];
  int n = 0;
  for (int v = 0; v < 3; ++v) {
    if (v != var) others[n++] = v;
  }
  BigInt sf, sg;
  const ZPoly3 rf = to_recursive(f, var, others[0], others[1], &sf);
  const ZPoly3 rg = to_recursive(g, var, others[0], others[1], &sg);
  MultiPoly r = from_recursive2(resultant(rf, rg), others[0], others[1]);
  // res(sf f, sg g) = sf^dg sg^df res(f, g)
  const BigRational unit(pow(sf, static_cast<unsigned long>(dg)) * pow(sg, static_cast<unsigned long>(df)));
  return r * MultiPoly(BigRational(1) / unit);
}

}  // namespace ptb
