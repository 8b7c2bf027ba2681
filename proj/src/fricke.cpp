#include "ptb/fricke.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "ptb/factor.hpp"
#include "ptb/numberfield.hpp"
#include "ptb/realroots.hpp"

namespace ptb {
namespace {

using Triple = std::array<MultiPoly, 3>;

Triple symbolic_point() { return {MultiPoly::var(0), MultiPoly::var(1), MultiPoly::var(2)}; }

long sat_add(long a, long b) { return (a > LONG_MAX - b) ? LONG_MAX : a + b; }

void require_hyperbolic(const MonodromyWord& w) {
  if (!is_hyperbolic(w)) throw NotHyperbolicError("word " + format_word(w) + " is not hyperbolic");
}

void check_budget(const MonodromyWord& w, long budget) {
  const auto d = trace_map_degrees(w);
  const long m = std::max({d[0], d[1], d[2]});
  if (m > budget) {
    throw BudgetError("trace map of " + format_word(w) + " has degree " + std::to_string(m) +
                      ", above the elimination budget " + std::to_string(budget));
  }
}

ZPoly2 primitive2(const ZPoly2& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    const BigInt ci = content(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ci.get_mpz_t());
  }
  if (g == 0 || g == 1) return p;
  std::vector<ZPoly> out;
  for (const auto& c : p.coeffs()) {
    std::vector<BigInt> v = c.coeffs();
    for (auto& e : v) e = exact_div(e, g);
    out.emplace_back(std::move(v));
  }
  return ZPoly2(std::move(out));
}

// The split fixed-point system for one sign class: u(p) = v^-1(e p) with u
// the first half of the letters and v the second half, plus the Markov
// polynomial, in the coordinates (t, y, z) with x = t - c y - c^2 z.
struct ClassSystem {
  SignClass eps;
  long c = 0;
  std::vector<ZPoly3> S;       // outer z, mid y, inner t
  std::vector<ZPoly2> zres;    // z eliminated: y over Z[t]
  ZPoly eliminant;             // gcd of the y-resultants
};

std::vector<MultiPoly> split_equations(const std::string& letters, const SignClass& eps) {
  const std::size_t k = letters.size() / 2;
  Triple u = apply_word(letters.substr(0, k), symbolic_point());
  Triple q = symbolic_point();
  for (int i = 0; i < 3; ++i) q[i] = q[i] * MultiPoly(static_cast<long>(eps[i]));
  for (std::size_t i = letters.size(); i-- > k;) q = apply_letter_inverse(static_cast<Letter>(letters[i]), q);
  return {markov_poly(), u[0] - q[0], u[1] - q[1], u[2] - q[2]};
}

ClassSystem build_system(const std::vector<MultiPoly>& eqs, const SignClass& eps, long c) {
  ClassSystem sys;
  sys.eps = eps;
  sys.c = c;
  const MultiPoly t = MultiPoly::var(0), y = MultiPoly::var(1), z = MultiPoly::var(2);
  const Triple sub{t - MultiPoly(c) * y - MultiPoly(c * c) * z, y, z};
  for (const auto& e : eqs) sys.S.push_back(to_recursive(e.compose(sub), 2, 1, 0));
  for (std::size_t i = 0; i < sys.S.size(); ++i) {
    for (std::size_t j = i + 1; j < sys.S.size(); ++j) {
      ZPoly2 r = resultant(sys.S[i], sys.S[j]);
      if (!r.is_zero_poly()) sys.zres.push_back(primitive2(r));
    }
  }
  std::sort(sys.zres.begin(), sys.zres.end(), [](const ZPoly2& a, const ZPoly2& b) { return a.degree() < b.degree(); });
  ZPoly g;
  for (std::size_t i = 0; i < sys.zres.size(); ++i) {
    for (std::size_t j = i + 1; j < sys.zres.size(); ++j) {
      ZPoly r = resultant(sys.zres[i], sys.zres[j]);
      if (r.is_zero_poly()) continue;
      g = gcd_primitive(g, r);
    }
  }
  sys.eliminant = g;
  return sys;
}

enum class Separation { ok, extraneous, ambiguous };

template <class F>
Separation common_linear_root(const std::vector<Poly<F>>& polys, F& root) {
  Poly<F> g;
  bool any = false;
  for (const auto& p : polys) {
    if (p.is_zero_poly()) continue;
    g = any ? gcd(g, p) : p;
    any = true;
    if (g.degree() <= 1) break;
  }
  if (!any) return Separation::ambiguous;
  if (g.degree() == 0) return Separation::extraneous;
  if (g.degree() > 1) return Separation::ambiguous;
  root = -(g[0] / g[1]);
  return Separation::ok;
}

// Only the origin may lie on t = 0; otherwise the coordinate must be shifted.
bool origin_isolated(const ClassSystem& sys) {
  std::vector<UniPoly> ys;
  for (const auto& r : sys.zres) {
    std::vector<BigRational> c;
    for (const auto& coeff : r.coeffs()) c.emplace_back(coeff.coeff(0));
    ys.emplace_back(std::move(c));
  }
  UniPoly g;
  bool any = false;
  for (const auto& p : ys) {
    if (p.is_zero_poly()) continue;
    g = any ? gcd(g, p) : monic(p);
    any = true;
  }
  if (!any) return false;
  if (g != UniPoly::monomial(BigRational(1), static_cast<std::size_t>(g.degree()))) return false;
  if (g.degree() == 0) return true;
  // y = 0 as well: z must vanish.
  UniPoly gz;
  any = false;
  for (const auto& s : sys.S) {
    std::vector<BigRational> c;
    for (const auto& coeff : s.coeffs()) c.emplace_back(coeff.coeff(0).coeff(0));
    UniPoly p(std::move(c));
    if (p.is_zero_poly()) continue;
    gz = any ? gcd(gz, p) : monic(p);
    any = true;
  }
  if (!any) return false;
  return gz == UniPoly::monomial(BigRational(1), static_cast<std::size_t>(gz.degree()));
}

struct ComponentAttempt {
  Separation status = Separation::extraneous;
  CharacterComponent comp;
};

ComponentAttempt solve_factor(const ClassSystem& sys, const UniPoly& f, const FixedPointIdeal& ideal) {
  ComponentAttempt out;
  const NumberField F(f);
  auto lift = [&](const ZPoly& p) { return F.element(to_rational(p)); };
  std::vector<Poly<NFElem>> ys;
  for (const auto& r : sys.zres) {
    std::vector<NFElem> c;
    for (const auto& coeff : r.coeffs()) c.push_back(lift(coeff));
    ys.emplace_back(std::move(c));
  }
  std::sort(ys.begin(), ys.end(), [](const auto& a, const auto& b) {
    if (a.is_zero_poly() != b.is_zero_poly()) return b.is_zero_poly();
    return a.degree() < b.degree();
  });
  NFElem y;
  out.status = common_linear_root(ys, y);
  if (out.status != Separation::ok) return out;
  std::vector<Poly<NFElem>> zs;
  for (const auto& s : sys.S) {
    std::vector<NFElem> c;
    for (const auto& coeff : s.coeffs()) {
      NFElem acc;
      for (int j = coeff.degree(); j >= 0; --j) acc = acc * y + lift(coeff[j]);
      c.push_back(acc);
    }
    zs.emplace_back(std::move(c));
  }
  std::sort(zs.begin(), zs.end(), [](const auto& a, const auto& b) {
    if (a.is_zero_poly() != b.is_zero_poly()) return b.is_zero_poly();
    return a.degree() < b.degree();
  });
  NFElem z;
  out.status = common_linear_root(zs, z);
  if (out.status != Separation::ok) return out;
  const NFElem x = F.gen() - F.constant(BigRational(sys.c)) * y - F.constant(BigRational(sys.c * sys.c)) * z;
  out.comp = {monic(f), sys.c, x.value(), y.value(), z.value(), sys.eps};
  if (!back_substitution_ok(out.comp, ideal)) out.status = Separation::extraneous;
  return out;
}

bool less_component(const CharacterComponent& a, const CharacterComponent& b) {
  const auto ia = std::find(kSignClasses.begin(), kSignClasses.end(), a.sign_class);
  const auto ib = std::find(kSignClasses.begin(), kSignClasses.end(), b.sign_class);
  if (ia != ib) return ia < ib;
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  return to_coeff_strings(a.factor) < to_coeff_strings(b.factor);
}

// n duplicates e when n, or its image under an even sign change, lies on e.
bool duplicate_of(const CharacterComponent& n, const CharacterComponent& e, const FixedPointIdeal& ideal_e) {
  if (n.factor.degree() != e.factor.degree()) return false;
  for (const auto& d : kSignClasses) {
    CharacterComponent m = n;
    m.rur_x = n.rur_x.scaled(BigRational(d[0]));
    m.rur_y = n.rur_y.scaled(BigRational(d[1]));
    m.rur_z = n.rur_z.scaled(BigRational(d[2]));
    if (!back_substitution_ok(m, ideal_e)) continue;
    const UniPoly u = m.rur_x + m.rur_y.scaled(BigRational(e.c)) + m.rur_z.scaled(BigRational(e.c * e.c));
    if (minpoly_in_quotient_unchecked(m.factor, u) == e.factor) return true;
  }
  return false;
}

std::complex<double> to_complex(const ComplexBall& b) { return {b.mid.re.to_double(), b.mid.im.to_double()}; }

// Sign of Im(shape) over the layered triangulation of the word, or 0 when
// the shapes are not coherently oriented (or undecided at this precision).
int shape_orientation(const std::string& letters, CharacterPoint<ComplexBall> p) {
  int common = 0;
  for (char ch : letters) {
    const Letter l = static_cast<Letter>(ch);
    ComplexBall ratio(p[0].precision());
    try {
      ratio = (l == Letter::R) ? p[0] / p[2] : p[2] / p[1];
    } catch (const std::domain_error&) {
      return 0;
    }
    const ComplexBall shape = -(ratio * ratio);
    const int s = shape.im_sign();
    if (s == 0) return 0;
    if (common == 0) common = s;
    if (s != common) return 0;
    p = apply_letter(l, p);
  }
  return common;
}

bool close(const std::complex<double>& a, const std::complex<double>& b) {
  return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a));
}

// Even sign changes and complex conjugation give the same PSL(2,C) class.
bool equivalent_points(const CharacterPoint<std::complex<double>>& p, const CharacterPoint<std::complex<double>>& q) {
  auto inv = [](const CharacterPoint<std::complex<double>>& a) {
    return std::array<std::complex<double>, 4>{a[0] * a[0], a[1] * a[1], a[2] * a[2], a[0] * a[1] * a[2]};
  };
  const auto a = inv(p), b = inv(q);
  bool same = true, conj = true;
  for (int i = 0; i < 4; ++i) {
    same = same && close(a[i], b[i]);
    conj = conj && close(a[i], std::conj(b[i]));
  }
  return same || conj;
}

}  // namespace

MultiPoly markov_poly() {
  const MultiPoly x = MultiPoly::var(0), y = MultiPoly::var(1), z = MultiPoly::var(2);
  return x * x + y * y + z * z - x * y * z;
}

CharacterPoint<BigRational> TraceMap::operator()(const CharacterPoint<BigRational>& p) const {
  return {components[0].eval(p[0], p[1], p[2]), components[1].eval(p[0], p[1], p[2]),
          components[2].eval(p[0], p[1], p[2])};
}

TraceMap TraceMap::then(const TraceMap& other) const {
  return {{other.components[0].compose(components), other.components[1].compose(components),
           other.components[2].compose(components)}};
}

TraceMap identity_trace_map() { return {symbolic_point()}; }

TraceMap generator_trace_map(Letter l) { return {apply_letter(l, symbolic_point())}; }

TraceMap word_trace_map(const MonodromyWord& w) { return {apply_word(w.letters(), symbolic_point())}; }

std::array<long, 3> trace_map_degrees(const MonodromyWord& w) {
  std::array<long, 3> d{1, 1, 1};
  for (const auto& s : w.syllables) {
    for (long i = 0; i < s.exponent; ++i) {
      if (s.letter == Letter::R) {
        d = {d[0], d[2], std::max(sat_add(d[0], d[2]), d[1])};
      } else {
        d = {d[2], d[1], std::max(sat_add(d[1], d[2]), d[0])};
      }
      if (d[2] == LONG_MAX) return d;
    }
  }
  return d;
}

std::string format_sign_class(const SignClass& s) {
  std::string out = "(";
  for (int i = 0; i < 3; ++i) out += (i ? "," : "") + std::string(s[i] > 0 ? "+" : "-");
  return out + ")";
}

FixedPointIdeal fixed_point_ideal(const MonodromyWord& w, const SignClass& sign_class, long degree_budget) {
  require_hyperbolic(w);
  check_budget(w, degree_budget);
  const TraceMap T = word_trace_map(w);
  const Triple p = symbolic_point();
  FixedPointIdeal I{w, sign_class, {}};
  for (int i = 0; i < 3; ++i) I.generators.push_back(T.components[i] - MultiPoly(static_cast<long>(sign_class[i])) * p[i]);
  I.generators.push_back(markov_poly());
  return I;
}

bool back_substitution_ok(const CharacterComponent& comp, const FixedPointIdeal& ideal) {
  const NumberField F(comp.factor);
  const CharacterPoint<NFElem> p{F.element(comp.rur_x), F.element(comp.rur_y), F.element(comp.rur_z)};
  for (const auto& g : ideal.generators) {
    const NFElem v = g.eval<NFElem>(p, [&](const BigRational& q) { return F.constant(q); });
    if (!v.is_zero_elem()) return false;
  }
  return true;
}

std::vector<CharacterComponent> solve_characters(const MonodromyWord& w, const SolveOptions& opt) {
  require_hyperbolic(w);
  check_budget(w, opt.degree_budget);
  const std::string letters = w.letters();
  std::vector<CharacterComponent> out;
  std::vector<FixedPointIdeal> ideals;
  for (const auto& eps : kSignClasses) {
    const FixedPointIdeal ideal = fixed_point_ideal(w, eps, opt.degree_budget);
    const std::vector<MultiPoly> eqs = split_equations(letters, eps);
    bool done = false;
    std::vector<CharacterComponent> found;
    for (long c = 0; c <= opt.max_separation_shift && !done; ++c) {
      const ClassSystem sys = build_system(eqs, eps, c);
      if (sys.eliminant.is_zero_poly()) continue;
      std::vector<std::pair<UniPoly, int>> factors;
      try {
        factors = factor_rationals(to_rational(sys.eliminant), opt.factor_degree_bound);
      } catch (const DegreeBoundError& e) {
        throw BudgetError("eliminant of " + format_word(w) + " in class " + format_sign_class(eps) +
                          " exceeds the factorization bound: " + e.what());
      }
      found.clear();
      bool separated = true;
      for (const auto& [f, m] : factors) {
        if (f == UniPoly::x()) {
          if (!origin_isolated(sys)) separated = false;
          continue;
        }
        if (!separated) break;
        ComponentAttempt a = solve_factor(sys, f, ideal);
        if (a.status == Separation::ambiguous) {
          separated = false;
          break;
        }
        if (a.status == Separation::ok) found.push_back(std::move(a.comp));
      }
      if (separated) done = true;
    }
    if (!done) {
      throw std::runtime_error("solve_characters: no separating coordinate found for " + format_word(w) +
                               " in class " + format_sign_class(eps));
    }
    ideals.push_back(ideal);
    for (auto& n : found) {
      bool dup = false;
      for (std::size_t i = 0; i < out.size() && !dup; ++i) {
        const auto idx = static_cast<std::size_t>(
            std::find(kSignClasses.begin(), kSignClasses.end(), out[i].sign_class) - kSignClasses.begin());
        dup = duplicate_of(n, out[i], ideals[idx]);
      }
      if (!dup) out.push_back(std::move(n));
    }
  }
  std::stable_sort(out.begin(), out.end(), less_component);
  return out;
}

GrowthStats primitive_trace_growth(const CharacterPoint<std::complex<double>>& p, int depth) {
  GrowthStats st;
  struct Node {
    CharacterPoint<std::complex<double>> t;
    int last;
  };
  auto inspect = [&](const std::complex<double>& v, int level) {
    ++st.visited;
    const double a = std::abs(v);
    if (!std::isfinite(a) || a > 2.0) return;
    ++st.small;
    if (2 * level > depth) ++st.small_deep;
    if (std::abs(v.imag()) <= 1e-9 * std::max(1.0, a)) ++st.real_elliptic;
  };
  for (int i = 0; i < 3; ++i) inspect(p[i], 0);
  std::vector<Node> frontier{{p, -1}};
  for (int level = 1; level <= depth; ++level) {
    if (2 * level > depth) ++st.deep_levels;
    std::vector<Node> next;
    next.reserve(frontier.size() * 2 + 1);
    for (const auto& n : frontier) {
      for (int i = 0; i < 3; ++i) {
        if (i == n.last) continue;
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        Node m = n;
        m.t[i] = n.t[j] * n.t[k] - n.t[i];
        m.last = i;
        inspect(m.t[i], level);
        next.push_back(m);
      }
    }
    frontier = std::move(next);
  }
  return st;
}

GeometricSolution identify_geometric(const std::vector<CharacterComponent>& candidates, const MonodromyWord& w,
                                     const IdentifyOptions& opt) {
  if (candidates.empty()) throw IdentificationError("geometric character not identified: no candidates");
  const std::string letters = w.letters();
  GeometricSolution sol;
  std::vector<CharacterPoint<std::complex<double>>> reps;
  std::ostringstream diag;
  for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
    const auto& comp = candidates[idx];
    const int r1 = sturm_count(comp.factor);
    diag << "  factor " << format_poly(comp.factor, "t") << " class " << format_sign_class(comp.sign_class);
    if (r1 == comp.factor.degree()) {
      diag << ": totally real\n";
      continue;
    }
    const auto roots =
        isolate_complex_roots_adaptive(comp.factor, opt.precision_bits, std::max(4096L, opt.precision_bits * 8));
    int shape_ok = 0, growth_ok = 0;
    for (const auto& r : roots) {
      if (r.real) continue;
      const ComplexBall t = ComplexBall::from_box(r);
      CharacterPoint<ComplexBall> p{eval_ball(comp.rur_x, t), eval_ball(comp.rur_y, t), eval_ball(comp.rur_z, t)};
      const int s = shape_orientation(letters, p);
      if (s <= 0) continue;
      ++shape_ok;
      const CharacterPoint<std::complex<double>> pd{to_complex(p[0]), to_complex(p[1]), to_complex(p[2])};
      const GrowthStats g = primitive_trace_growth(pd, opt.growth_depth);
      if (!g.passes()) continue;
      ++growth_ok;
      bool seen = false;
      for (const auto& q : reps) seen = seen || equivalent_points(pd, q);
      Witness wit{idx, r, p, g, s};
      if (!seen) {
        reps.push_back(pd);
        sol.selected.push_back(comp);
        sol.witnesses.push_back(std::move(wit));
      }
    }
    diag << ": " << roots.size() - static_cast<std::size_t>(r1) << " non-real roots, " << shape_ok
         << " with coherent shapes, " << growth_ok << " passing growth\n";
  }
  if (sol.selected.empty()) {
    throw IdentificationError("geometric character not identified for " + format_word(w) + "\n" + diag.str());
  }
  sol.ambiguous = sol.selected.size() > 1;
  return sol;
}

}  // namespace ptb
