#include "ptb/realroots.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptb {
namespace {

int count_variations(const std::vector<int>& signs) {
  int prev = 0;
  int changes = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

// Rescale by a positive rational so coefficients stay small; signs are preserved.
UniPoly positive_normalize(const UniPoly& p) {
  if (p.is_zero_poly()) return p;
  UniPoly q = to_rational(primitive_integer(p));
  if (sgn(q.lead()) != sgn(p.lead())) q = -q;
  return q;
}

void require_squarefree(const UniPoly& f, const char* who) {
  if (f.is_zero_poly() || !is_squarefree(f)) {
    throw std::invalid_argument(std::string(who) + ": input must be a nonzero squarefree polynomial");
  }
}

ZPoly taylor_shift_one(const ZPoly& p) {
  std::vector<BigInt> c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) c[j] += c[j + 1];
  }
  return ZPoly(std::move(c));
}

// Descartes bound for roots in (0, 1): variations of (x+1)^n p(1/(x+1)).
int descartes_01(const ZPoly& p) {
  std::vector<BigInt> c(p.coeffs().rbegin(), p.coeffs().rend());
  ZPoly q = taylor_shift_one(ZPoly(std::move(c)));
  std::vector<int> signs;
  for (const auto& v : q.coeffs()) signs.push_back(sgn(v));
  return count_variations(signs);
}

// 2^n p(x/2)
ZPoly halve(const ZPoly& p) {
  std::vector<BigInt> c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) c[i] <<= static_cast<mp_bitcnt_t>(n - 1 - i);
  return ZPoly(std::move(c));
}

// Roots of p in (0,1) correspond to roots in (c / 2^k, (c + 1) / 2^k) * scale.
void isolate_unit(const ZPoly& p, const BigInt& c, unsigned k, const BigRational& scale,
                  std::vector<RationalInterval>& out) {
  if (p.degree() <= 0) return;
  const int v = descartes_01(p);
  if (v == 0) return;
  BigRational denom(BigInt(1) << k);
  if (v == 1) {
    out.push_back({BigRational(c) / denom * scale, BigRational(c + 1) / denom * scale});
    return;
  }
  ZPoly left = halve(p);
  ZPoly right_src = left;
  // Root exactly at the midpoint x = 1 of `left`.
  BigInt at_one = 0;
  for (const auto& v2 : left.coeffs()) at_one += v2;
  if (at_one == 0) {
    out.push_back({BigRational(2 * c + 1) / (2 * denom) * scale,
                   BigRational(2 * c + 1) / (2 * denom) * scale});
    right_src = exact_div(left, ZPoly{BigInt(-1), BigInt(1)});
    left = right_src;
  }
  isolate_unit(left, 2 * c, k + 1, scale, out);
  isolate_unit(taylor_shift_one(right_src), 2 * c + 1, k + 1, scale, out);
}

// Isolate positive roots of a squarefree integer polynomial with p(0) != 0.
std::vector<RationalInterval> isolate_positive(const ZPoly& p) {
  // Cauchy bound 1 + max |a_i / a_n|, rounded up to a power of two.
  BigRational bound = 0;
  for (int i = 0; i < p.degree(); ++i) {
    BigRational r = BigRational(abs(p[i])) / BigRational(abs(p.lead()));
    if (r > bound) bound = r;
  }
  bound += 1;
  unsigned e = 0;
  while (BigRational(BigInt(1) << e) <= bound) ++e;
  const BigInt scale_int = BigInt(1) << e;
  // q(x) = p(scale * x)
  std::vector<BigInt> c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= pow(scale_int, static_cast<unsigned long>(i));
  std::vector<RationalInterval> out;
  isolate_unit(primitive_part(ZPoly(std::move(c))), 0, 0, BigRational(scale_int), out);
  return out;
}

}  // namespace

SturmSequence::SturmSequence(const UniPoly& f) {
  chain_.push_back(positive_normalize(f));
  if (f.degree() <= 0) return;
  chain_.push_back(positive_normalize(f.derivative()));
  while (chain_.back().degree() > 0) {
    const UniPoly& a = chain_[chain_.size() - 2];
    const UniPoly& b = chain_.back();
    UniPoly r = -divmod(a, b).second;
    if (r.is_zero_poly()) break;
    chain_.push_back(positive_normalize(r));
  }
}

int SturmSequence::variations_at(const BigRational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sign_at(p, x));
  return count_variations(signs);
}

int SturmSequence::variations_at_neg_inf() const {
  std::vector<int> signs;
  for (const auto& p : chain_) {
    if (p.is_zero_poly()) continue;
    const int s = sgn(p.lead());
    signs.push_back(p.degree() % 2 == 0 ? s : -s);
  }
  return count_variations(signs);
}

int SturmSequence::variations_at_pos_inf() const {
  std::vector<int> signs;
  for (const auto& p : chain_) {
    if (!p.is_zero_poly()) signs.push_back(sgn(p.lead()));
  }
  return count_variations(signs);
}

int sturm_count(const UniPoly& f, const std::optional<BigRational>& lo,
                const std::optional<BigRational>& hi) {
  require_squarefree(f, "sturm_count");
  if (lo && hi && *hi <= *lo) return 0;
  const SturmSequence seq(f);
  const int vlo = lo ? seq.variations_at(*lo) : seq.variations_at_neg_inf();
  const int vhi = hi ? seq.variations_at(*hi) : seq.variations_at_pos_inf();
  return vlo - vhi;
}

std::vector<RationalInterval> isolate_real_roots(const UniPoly& f) {
  require_squarefree(f, "isolate_real_roots");
  ZPoly p = primitive_integer(f);
  std::vector<RationalInterval> out;
  if (p.degree() <= 0) return out;
  bool zero_root = false;
  if (sgn(p[0]) == 0) {
    zero_root = true;
    p = exact_div(p, ZPoly{BigInt(0), BigInt(1)});
  }
  std::vector<RationalInterval> pos = isolate_positive(p);
  std::vector<BigInt> neg_c = p.coeffs();
  for (std::size_t i = 1; i < neg_c.size(); i += 2) neg_c[i] = -neg_c[i];
  std::vector<RationalInterval> neg = isolate_positive(ZPoly(std::move(neg_c)));
  for (auto it = neg.rbegin(); it != neg.rend(); ++it) out.push_back({-it->hi, -it->lo});
  if (zero_root) out.push_back({BigRational(0), BigRational(0)});
  out.insert(out.end(), pos.begin(), pos.end());
  for (auto& iv : out) iv = refine_root(f, iv, BigRational(1, 2));
  return out;
}

RationalInterval refine_root(const UniPoly& f, RationalInterval iv, const BigRational& width) {
  if (iv.is_point()) return iv;
  int slo = sign_at(f, iv.lo);
  while (iv.width() > width) {
    const BigRational mid = iv.midpoint();
    const int sm = sign_at(f, mid);
    if (sm == 0) return {mid, mid};
    if (sm == slo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

}  // namespace ptb
