#include "ptb/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace ptb {

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto slash = s.find('/');
  auto check_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!check_int(num) || !check_int(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  BigRational r(BigInt(num[0] == '+' ? num.substr(1) : num), BigInt(den));
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

UniPoly to_rational(const ZPoly& p) {
  std::vector<BigRational> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return UniPoly(std::move(c));
}

BigInt content(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& v : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero_poly()) return p;
  BigInt g = content(p);
  if (sgn(p.lead()) < 0) g = -g;
  std::vector<BigInt> c = p.coeffs();
  for (auto& v : c) v = exact_div(v, g);
  return ZPoly(std::move(c));
}

ZPoly gcd_primitive(ZPoly a, ZPoly b) {
  if (a.is_zero_poly()) return primitive_part(b);
  if (b.is_zero_poly()) return primitive_part(a);
  BigInt g;
  const BigInt ca = content(a), cb = content(b);
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero_poly()) {
    ZPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero_poly() ? r : primitive_part(r);
  }
  return a.scaled(g);
}

ZPoly primitive_integer(const UniPoly& p) {
  if (p.is_zero_poly()) return {};
  BigInt l = 1;
  for (const auto& v : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::vector<BigInt> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(v.get_num() * exact_div(l, v.get_den()));
  return primitive_part(ZPoly(std::move(c)));
}

UniPoly monic(const UniPoly& p) {
  if (p.is_zero_poly()) return p;
  return p.scaled(BigRational(1) / p.lead());
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero_poly()) throw std::invalid_argument("squarefree_part: zero polynomial");
  if (f.degree() == 0) return UniPoly(BigRational(1));
  const UniPoly g = gcd(f, f.derivative());
  return to_rational(primitive_integer(divmod(f, g).first));
}

bool is_squarefree(const UniPoly& f) {
  if (f.is_zero_poly()) return false;
  return gcd(f, f.derivative()).degree() == 0;
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero_poly()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<UniPoly, int>> out;
  if (f.degree() == 0) return out;
  const UniPoly df = f.derivative();
  UniPoly a = gcd(f, df);
  UniPoly b = divmod(f, a).first;
  UniPoly c = divmod(df, a).first;
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    if (g.degree() > 0) out.emplace_back(to_rational(primitive_integer(g)), i);
    ++i;
  }
  return out;
}

std::vector<std::string> to_coeff_strings(const UniPoly& p) {
  std::vector<std::string> out;
  for (const auto& v : p.coeffs()) out.push_back(v.get_str());
  if (out.empty()) out.emplace_back("0");
  return out;
}

UniPoly from_coeff_strings(const std::vector<std::string>& coeffs) {
  std::vector<BigRational> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  return UniPoly(std::move(c));
}

std::string format_poly(const UniPoly& p, const std::string& var) {
  if (p.is_zero_poly()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const BigRational& c = p[i];
    if (sgn(c) == 0) continue;
    BigRational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (!unit) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

int sign_at(const UniPoly& p, const BigRational& at) { return sgn(p.eval(at)); }

}  // namespace ptb
