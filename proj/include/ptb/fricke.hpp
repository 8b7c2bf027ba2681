#pragma once

// Trace coordinates x = tr A, y = tr B, z = tr AB of punctured-torus
// characters, the action of R and L on them, and the fixed-point systems
// whose solutions contain the character of the hyperbolic structure.

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptb/complexroots.hpp"
#include "ptb/multipoly.hpp"
#include "ptb/wordalg.hpp"

namespace ptb {

template <class T>
using CharacterPoint = std::array<T, 3>;

/// R: (x, y, z) -> (x, z, xz - y); L: (x, y, z) -> (z, y, yz - x).
template <class T>
CharacterPoint<T> apply_letter(Letter l, const CharacterPoint<T>& p) {
  if (l == Letter::R) return {p[0], p[2], p[0] * p[2] - p[1]};
  return {p[2], p[1], p[1] * p[2] - p[0]};
}

/// Inverses: R^-1 (x, y, z) = (x, xy - z, y); L^-1 (x, y, z) = (xy - z, y, x).
template <class T>
CharacterPoint<T> apply_letter_inverse(Letter l, const CharacterPoint<T>& p) {
  if (l == Letter::R) return {p[0], p[0] * p[1] - p[2], p[1]};
  return {p[1] * p[0] - p[2], p[1], p[0]};
}

/// Apply the letters of a word in reading order (first letter first).
template <class T>
CharacterPoint<T> apply_word(const std::string& letters, CharacterPoint<T> p) {
  for (char c : letters) p = apply_letter(static_cast<Letter>(c), p);
  return p;
}

template <class T>
T markov_residual(const CharacterPoint<T>& p) {
  return p[0] * p[0] + p[1] * p[1] + p[2] * p[2] - p[0] * p[1] * p[2];
}

/// The polynomial x^2 + y^2 + z^2 - xyz.
MultiPoly markov_poly();

struct TraceMap {
  std::array<MultiPoly, 3> components;

  CharacterPoint<BigRational> operator()(const CharacterPoint<BigRational>& p) const;
  /// (this then other): p -> other(this(p)).
  TraceMap then(const TraceMap& other) const;
  friend bool operator==(const TraceMap&, const TraceMap&) = default;
};

TraceMap identity_trace_map();
TraceMap generator_trace_map(Letter l);
TraceMap word_trace_map(const MonodromyWord& w);

/// Degrees of the three components of word_trace_map, computed without
/// expanding (saturating at LONG_MAX).
std::array<long, 3> trace_map_degrees(const MonodromyWord& w);

using SignClass = std::array<int, 3>;
inline constexpr std::array<SignClass, 4> kSignClasses{
    {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};

std::string format_sign_class(const SignClass& s);

struct FixedPointIdeal {
  MonodromyWord word;
  SignClass sign_class;
  std::vector<MultiPoly> generators;
};

class NotHyperbolicError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr long kDefaultDegreeBudget = 1L << 14;

/// {W_X - e1 x, W_Y - e2 y, W_Z - e3 z, x^2 + y^2 + z^2 - xyz}.
FixedPointIdeal fixed_point_ideal(const MonodromyWord& w, const SignClass& sign_class,
                                  long degree_budget = kDefaultDegreeBudget);

/// One irreducible component of the fixed-point solutions: t = x + c y + c^2 z
/// is a root of `factor` and x, y, z are polynomials in t modulo it.
struct CharacterComponent {
  UniPoly factor;
  long c = 0;
  UniPoly rur_x, rur_y, rur_z;
  SignClass sign_class{1, 1, 1};
};

struct SolveOptions {
  long degree_budget = kDefaultDegreeBudget;
  int factor_degree_bound = 64;
  long max_separation_shift = 12;
};

/// All non-origin fixed-point characters of the word, over the four sign
/// classes, deduplicated. Throws NotHyperbolicError or BudgetError.
std::vector<CharacterComponent> solve_characters(const MonodromyWord& w, const SolveOptions& opt = {});

/// Exact check that the component annihilates every generator of the ideal.
bool back_substitution_ok(const CharacterComponent& comp, const FixedPointIdeal& ideal);

struct GrowthStats {
  long visited = 0;
  long small = 0;       // |tr| <= 2
  long small_deep = 0;  // |tr| <= 2 beyond half the depth
  long deep_levels = 0;
  long real_elliptic = 0;  // real traces in [-2, 2]

  /// Traces along the monodromy axis repeat, so a fixed character keeps a
  /// bounded number of small traces per level; anything else grows exponentially.
  bool passes() const { return real_elliptic == 0 && small_deep <= 4 * deep_levels; }
};

/// Breadth-first walk of the Markov tree from (x, y, z) to the given depth.
GrowthStats primitive_trace_growth(const CharacterPoint<std::complex<double>>& p, int depth);

struct Witness {
  std::size_t component = 0;  // index into the candidate list
  ComplexRootBox root;
  CharacterPoint<ComplexBall> point;
  GrowthStats growth;
  int shape_sign = 0;  // common sign of Im(shape) along the layered triangulation
};

struct GeometricSolution {
  std::vector<CharacterComponent> selected;  // one per inequivalent passing candidate
  std::vector<Witness> witnesses;
  bool ambiguous = false;
};

struct IdentifyOptions {
  int growth_depth = 12;
  long precision_bits = 128;
};

class IdentificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pick the component carrying the discrete faithful character: drop
/// totally real components, require coherent tetrahedron shapes and the
/// primitive-trace growth test, and flag ambiguity when inequivalent
/// candidates survive.
GeometricSolution identify_geometric(const std::vector<CharacterComponent>& candidates, const MonodromyWord& w,
                                     const IdentifyOptions& opt = {});

}  // namespace ptb
