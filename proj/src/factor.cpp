#include "ptb/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace ptb {
namespace {

using u64 = std::uint64_t;
// Dense polynomial over F_p, lowest degree first, no trailing zeros.
using MP = std::vector<u64>;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(MP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const MP& a) { return static_cast<int>(a.size()) - 1; }

MP mp_sub(const MP& a, const MP& b, const Fp& F) {
  MP r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

MP mp_mul(const MP& a, const MP& b, const Fp& F) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
  }
  MP r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<u64>(acc[i] % F.p);
  trim(r);
  return r;
}

std::pair<MP, MP> mp_divmod(const MP& a, const MP& b, const Fp& F) {
  if (deg(a) < deg(b)) return {{}, a};
  MP r = a;
  const int db = deg(b);
  MP q(static_cast<std::size_t>(deg(a) - db + 1), 0);
  const u64 il = F.inv(b.back());
  for (int i = deg(a); i >= db; --i) {
    const u64 c = F.mul(r[i], il);
    q[i - db] = c;
    if (!c) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
  }
  r.resize(static_cast<std::size_t>(db));
  trim(r);
  trim(q);
  return {q, r};
}

MP mp_mod(const MP& a, const MP& b, const Fp& F) { return mp_divmod(a, b, F).second; }

MP mp_monic(MP a, const Fp& F) {
  if (a.empty()) return a;
  const u64 il = F.inv(a.back());
  for (auto& v : a) v = F.mul(v, il);
  return a;
}

MP mp_gcd(MP a, MP b, const Fp& F) {
  while (!b.empty()) {
    MP r = mp_mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(std::move(a), F);
}

// s, t with s*a + t*b = 1 for coprime a, b.
std::pair<MP, MP> mp_xgcd(const MP& a, const MP& b, const Fp& F) {
  MP r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = mp_divmod(r0, r1, F);
    MP s2 = mp_sub(s0, mp_mul(q, s1, F), F);
    MP t2 = mp_sub(t0, mp_mul(q, t1, F), F);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw std::logic_error("mp_xgcd: inputs not coprime");
  const u64 il = F.inv(r0[0]);
  for (auto& v : s0) v = F.mul(v, il);
  for (auto& v : t0) v = F.mul(v, il);
  return {s0, t0};
}

MP mp_powmod(MP base, const BigInt& e, const MP& mod, const Fp& F) {
  MP r{1};
  base = mp_mod(base, mod, F);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mp_mod(mp_mul(r, r, F), mod, F);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mp_mod(mp_mul(r, base, F), mod, F);
  }
  return r;
}

MP to_mp(const ZPoly& f, const Fp& F) {
  MP r(f.coeffs().size());
  BigInt m = static_cast<unsigned long>(F.p);
  for (std::size_t i = 0; i < r.size(); ++i) {
    BigInt v;
    mpz_mod(v.get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    r[i] = v.get_ui();
  }
  trim(r);
  return r;
}

ZPoly to_z(const MP& a) {
  std::vector<BigInt> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = static_cast<unsigned long>(a[i]);
  return ZPoly(std::move(c));
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<MP, int>> ddf(MP f, const Fp& F) {
  std::vector<std::pair<MP, int>> out;
  const MP x{0, 1};
  MP h = x;
  int i = 0;
  const BigInt p = static_cast<unsigned long>(F.p);
  while (deg(f) >= 2 * (i + 1)) {
    ++i;
    h = mp_powmod(h, p, f, F);
    MP g = mp_gcd(mp_sub(h, x, F), f, F);
    if (deg(g) > 0) {
      out.emplace_back(g, i);
      f = mp_divmod(f, g, F).first;
      h = mp_mod(h, f, F);
    }
  }
  if (deg(f) > 0) out.emplace_back(f, deg(f));
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus), p odd.
void edf(const MP& g, int d, const Fp& F, std::mt19937_64& rng, std::vector<MP>& out) {
  if (deg(g) == d) {
    out.push_back(mp_monic(g, F));
    return;
  }
  BigInt e = pow(BigInt(static_cast<unsigned long>(F.p)), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, F.p - 1);
  while (true) {
    MP a(static_cast<std::size_t>(deg(g)));
    for (auto& v : a) v = dist(rng);
    trim(a);
    if (deg(a) <= 0) continue;
    MP b = mp_powmod(a, e, g, F);
    b = mp_sub(b, MP{1}, F);
    MP u = mp_gcd(b, g, F);
    if (deg(u) > 0 && deg(u) < deg(g)) {
      edf(u, d, F, rng, out);
      edf(mp_divmod(g, u, F).first, d, F, rng, out);
      return;
    }
  }
}

bool is_prime_small(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

BigInt mod_nonneg(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

ZPoly zmod(const ZPoly& a, const BigInt& m) {
  std::vector<BigInt> c = a.coeffs();
  for (auto& v : c) v = mod_nonneg(v, m);
  return ZPoly(std::move(c));
}

ZPoly zsym(const ZPoly& a, const BigInt& m) {
  std::vector<BigInt> c = a.coeffs();
  const BigInt half = m / 2;
  for (auto& v : c) {
    v = mod_nonneg(v, m);
    if (v > half) v -= m;
  }
  return ZPoly(std::move(c));
}

// Division by a monic integer polynomial.
std::pair<ZPoly, ZPoly> zdivmod_monic(const ZPoly& a, const ZPoly& h) {
  if (a.degree() < h.degree()) return {ZPoly(), a};
  std::vector<BigInt> r = a.coeffs();
  const int dh = h.degree();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - dh + 1));
  for (int i = a.degree(); i >= dh; --i) {
    const BigInt c = r[i];
    q[i - dh] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dh; ++j) r[i - dh + j] -= c * h[j];
  }
  r.resize(static_cast<std::size_t>(dh));
  return {ZPoly(std::move(q)), ZPoly(std::move(r))};
}

struct Lift {
  ZPoly g, h, s, t;
};

// One quadratic Hensel step from modulus m to m^2 (h monic).
Lift hensel_step(const ZPoly& f, const Lift& in, const BigInt& m) {
  const BigInt m2 = m * m;
  const ZPoly e = zmod(f - in.g * in.h, m2);
  auto [q, r] = zdivmod_monic(zmod(in.s * e, m2), in.h);
  q = zmod(q, m2);
  r = zmod(r, m2);
  const ZPoly g2 = zmod(in.g + in.t * e + q * in.g, m2);
  const ZPoly h2 = zmod(in.h + r, m2);
  const ZPoly b = zmod(in.s * g2 + in.t * h2 - ZPoly(BigInt(1)), m2);
  auto [c, d] = zdivmod_monic(zmod(in.s * b, m2), h2);
  c = zmod(c, m2);
  d = zmod(d, m2);
  const ZPoly s2 = zmod(in.s - d, m2);
  const ZPoly t2 = zmod(in.t - in.t * b - c * g2, m2);
  return {g2, h2, s2, t2};
}

// Lift f = lc * prod(facs) mod p to monic factors mod p^(2^steps).
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<MP>& facs, const Fp& F, int steps,
                               BigInt& modulus) {
  const BigInt p = static_cast<unsigned long>(F.p);
  modulus = p;
  for (int i = 0; i < steps; ++i) modulus *= modulus;
  std::vector<ZPoly> out;
  ZPoly current = f;
  for (std::size_t k = 0; k + 1 < facs.size(); ++k) {
    MP rest{1};
    for (std::size_t j = k + 1; j < facs.size(); ++j) rest = mp_mul(rest, facs[j], F);
    const u64 lc = to_mp(ZPoly(current.lead()), F)[0];
    MP g0 = facs[k];
    for (auto& v : g0) v = F.mul(v, lc);
    auto [s0, t0] = mp_xgcd(g0, rest, F);
    Lift L{to_z(g0), to_z(rest), to_z(s0), to_z(t0)};
    BigInt m = p;
    for (int i = 0; i < steps; ++i) {
      L = hensel_step(current, L, m);
      m *= m;
    }
    BigInt lc_inv;
    const BigInt lcm = mod_nonneg(current.lead(), modulus);
    mpz_invert(lc_inv.get_mpz_t(), lcm.get_mpz_t(), modulus.get_mpz_t());
    out.push_back(zmod(L.g.scaled(lc_inv), modulus));
    current = L.h;
  }
  {
    BigInt lc_inv;
    const BigInt lcm = mod_nonneg(current.lead(), modulus);
    mpz_invert(lc_inv.get_mpz_t(), lcm.get_mpz_t(), modulus.get_mpz_t());
    out.push_back(zmod(current.scaled(lc_inv), modulus));
  }
  return out;
}

bool try_divide(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  if (a.degree() < b.degree()) return false;
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  std::vector<BigInt> quo(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.lead().get_mpz_t())) return false;
    const BigInt c = exact_div(r[i], b.lead());
    quo[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
  }
  for (int i = 0; i < db; ++i) {
    if (r[i] != 0) return false;
  }
  q = ZPoly(std::move(quo));
  return true;
}

BigInt coefficient_bound(const ZPoly& f) {
  BigInt sq = 0;
  for (const auto& c : f.coeffs()) sq += c * c;
  BigInt norm;
  mpz_sqrt(norm.get_mpz_t(), sq.get_mpz_t());
  norm += 1;
  BigInt lc = abs(f.lead());
  return lc * norm * (BigInt(1) << static_cast<mp_bitcnt_t>(f.degree()));
}

bool less_poly(const ZPoly& a, const ZPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

ZPoly normalize_sign(ZPoly g) {
  g = primitive_part(g);
  if (sgn(g.lead()) < 0) g = -g;
  return g;
}

}  // namespace

std::vector<ZPoly> factor_squarefree_integer(const ZPoly& input) {
  ZPoly f = normalize_sign(input);
  std::vector<ZPoly> result;
  if (f.degree() <= 0) return result;
  if (f[0] == 0) {
    result.push_back(ZPoly{BigInt(0), BigInt(1)});
    f = exact_div(f, ZPoly{BigInt(0), BigInt(1)});
    if (f.degree() <= 0) return result;
  }
  if (f.degree() == 1) {
    result.push_back(f);
    return result;
  }

  // Pick the prime with the fewest modular factors among several candidates.
  const ZPoly df = f.derivative();
  std::mt19937_64 rng(0x5eedULL);
  u64 best_p = 0;
  std::vector<std::pair<MP, int>> best_ddf;
  std::size_t best_count = 0;
  int tried = 0;
  for (u64 p = 3; tried < 6; p += 2) {
    if (!is_prime_small(p)) continue;
    const Fp F{p};
    const MP fp = to_mp(f, F);
    if (deg(fp) != f.degree()) continue;
    if (deg(mp_gcd(fp, to_mp(df, F), F)) != 0) continue;
    auto d = ddf(mp_monic(fp, F), F);
    std::size_t count = 0;
    for (const auto& [g, k] : d) count += static_cast<std::size_t>(deg(g) / k);
    ++tried;
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_ddf = std::move(d);
      best_count = count;
    }
    if (count == 1) break;
  }
  if (best_count == 1) {
    result.push_back(f);
    std::sort(result.begin(), result.end(), less_poly);
    return result;
  }

  const Fp F{best_p};
  std::vector<MP> modfacs;
  for (const auto& [g, k] : best_ddf) edf(g, k, F, rng, modfacs);

  const BigInt bound = 2 * coefficient_bound(f) + 1;
  int steps = 0;
  BigInt pm = static_cast<unsigned long>(best_p);
  while (pm <= bound) {
    pm *= pm;
    ++steps;
  }
  BigInt modulus;
  std::vector<ZPoly> lifted = hensel_lift(f, modfacs, F, steps, modulus);

  // Recombination by subsets of increasing size.
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly g(f.lead());
      for (std::size_t i : idx) g = zsym(g * lifted[i], modulus);
      g = normalize_sign(g);
      ZPoly q;
      if (try_divide(f, g, q)) {
        result.push_back(g);
        f = normalize_sign(q);
        std::vector<ZPoly> rest;
        for (std::size_t i = 0; i < lifted.size(); ++i) {
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(lifted[i]);
        }
        lifted = std::move(rest);
        found = true;
        break;
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == lifted.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (f.degree() > 0) result.push_back(f);
  std::sort(result.begin(), result.end(), less_poly);
  return result;
}

std::vector<std::pair<UniPoly, int>> factor_rationals(const UniPoly& f, int max_degree) {
  if (f.is_zero_poly()) throw std::invalid_argument("factor_rationals: zero polynomial");
  if (f.degree() > max_degree) {
    throw DegreeBoundError("factor_rationals: degree " + std::to_string(f.degree()) + " exceeds bound " +
                           std::to_string(max_degree));
  }
  std::vector<std::pair<ZPoly, int>> parts;
  for (const auto& [g, m] : squarefree_decomposition(f)) {
    for (auto& h : factor_squarefree_integer(primitive_integer(g))) parts.emplace_back(std::move(h), m);
  }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (less_poly(a.first, b.first)) return true;
    if (less_poly(b.first, a.first)) return false;
    return a.second < b.second;
  });
  std::vector<std::pair<UniPoly, int>> out;
  out.reserve(parts.size());
  for (auto& [g, m] : parts) out.emplace_back(to_rational(g), m);
  return out;
}

bool is_irreducible(const UniPoly& f, int max_degree) {
  if (f.degree() <= 0) return false;
  const auto fs = factor_rationals(f, max_degree);
  return fs.size() == 1 && fs[0].second == 1;
}

}  // namespace ptb
