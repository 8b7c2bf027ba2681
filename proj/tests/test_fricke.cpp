#include <doctest.h>

#include <climits>
#include <random>

#include "ptb/fricke.hpp"
#include "ptb/numberfield.hpp"
#include "ptb/realroots.hpp"

using namespace ptb;

namespace {

const MultiPoly X = MultiPoly::var(0);
const MultiPoly Y = MultiPoly::var(1);
const MultiPoly Z = MultiPoly::var(2);

UniPoly P(std::initializer_list<long> c) {
  std::vector<BigRational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

CharacterPoint<BigRational> Q3(long a, long b, long c) { return {BigRational(a), BigRational(b), BigRational(c)}; }

}  // namespace

TEST_CASE("generator maps") {
  CHECK(generator_trace_map(Letter::R)(Q3(3, 3, 3)) == Q3(3, 3, 6));
  CHECK(generator_trace_map(Letter::L)(Q3(0, 0, 0)) == Q3(0, 0, 0));
  const TraceMap r = generator_trace_map(Letter::R);
  CHECK(r.components[0].total_degree() == 1);
  CHECK(r.components[1].total_degree() == 1);
  CHECK(r.components[2].total_degree() == 2);
}

TEST_CASE("word maps") {
  const TraceMap rl = word_trace_map(parse_word("RL"));
  CHECK(rl.components[0] == X * Z - Y);
  CHECK(rl.components[1] == Z);
  CHECK(rl.components[2] == Z * (X * Z - Y) - X);
  CHECK(rl(Q3(3, 3, 6)) == Q3(15, 6, 87));
  CHECK(identity_trace_map()(Q3(2, 5, 7)) == Q3(2, 5, 7));
  CHECK(generator_trace_map(Letter::R).then(generator_trace_map(Letter::L)) == rl);
}

TEST_CASE("markov residual") {
  CHECK(markov_residual(Q3(3, 3, 3)) == 0);
  CHECK(markov_residual(Q3(0, 0, 0)) == 0);
  CHECK(markov_residual(Q3(2, 2, 2)) == 4);
}

TEST_CASE("markov polynomial is invariant") {
  const MultiPoly m = markov_poly();
  for (Letter l : {Letter::R, Letter::L}) CHECK(m.compose(generator_trace_map(l).components) == m);
  for (const char* w : {"RL", "RL4", "-R2L3", "RL2RL"}) CHECK(m.compose(word_trace_map(parse_word(w)).components) == m);
}

TEST_CASE("inverse generator maps") {
  for (Letter l : {Letter::R, Letter::L}) {
    const TraceMap inv{apply_letter_inverse(l, std::array<MultiPoly, 3>{X, Y, Z})};
    CHECK(generator_trace_map(l).then(inv) == identity_trace_map());
    CHECK(inv.then(generator_trace_map(l)) == identity_trace_map());
  }
}

TEST_CASE("word maps respect concatenation") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  const MonodromyWord u = parse_word("RL2R");
  const MonodromyWord v = parse_word("L3RL");
  const TraceMap uv = word_trace_map(parse_word("RL2RL3RL"));
  const TraceMap tu = word_trace_map(u), tv = word_trace_map(v);
  for (int i = 0; i < 50; ++i) {
    CharacterPoint<BigRational> p;
    for (auto& c : p) c = BigRational(num(rng), den(rng));
    for (auto& c : p) c.canonicalize();
    CHECK(uv(p) == tv(tu(p)));
    CHECK(uv(p) == apply_word(u.letters() + v.letters(), p));
  }
}

TEST_CASE("fixed point ideal") {
  const FixedPointIdeal I = fixed_point_ideal(parse_word("RL"), {1, 1, 1});
  REQUIRE(I.generators.size() == 4);
  CHECK(I.generators[0] == X * Z - Y - X);
  CHECK(I.generators[1] == Z - Y);
  CHECK(I.generators[2] == Z * (X * Z - Y) - X - Z);
  CHECK(I.generators[3] == markov_poly());
  CHECK(fixed_point_ideal(parse_word("RL4"), {1, 1, 1}).generators.size() == 4);
  for (const auto& g : fixed_point_ideal(parse_word("RL4"), {1, 1, 1}).generators) CHECK(g.eval(0, 0, 0) == 0);
  CHECK_THROWS_AS(fixed_point_ideal(parse_word("R"), {1, 1, 1}), NotHyperbolicError);
  CHECK_THROWS_AS(solve_characters(parse_word("R2")), NotHyperbolicError);
}

TEST_CASE("degree budget") {
  CHECK(trace_map_degrees(parse_word("R")) == std::array<long, 3>{1, 1, 2});
  SolveOptions opt;
  opt.degree_budget = 4;
  CHECK_THROWS_AS(solve_characters(parse_word("RL4"), opt), BudgetError);
  CHECK(trace_map_degrees(parse_word("RL1000"))[2] == 1002);
  std::string alternating;
  for (int i = 0; i < 100; ++i) alternating += "RL";
  CHECK(trace_map_degrees(parse_word(alternating))[2] == LONG_MAX);
}

TEST_CASE("RL solves to the figure-eight character") {
  const auto comps = solve_characters(parse_word("RL"));
  REQUIRE(comps.size() == 1);
  const CharacterComponent& c = comps[0];
  CHECK(c.factor == P({3, -3, 1}));
  CHECK(sturm_count(c.factor) == 0);
  const NumberField F(c.factor);
  const NFElem x = F.element(c.rur_x), y = F.element(c.rur_y), z = F.element(c.rur_z);
  CHECK(y == z);
  CHECK(y * (x - F.constant(1)) == x);
  CHECK(back_substitution_ok(c, fixed_point_ideal(parse_word("RL"), c.sign_class)));

  const GeometricSolution g = identify_geometric(comps, parse_word("RL"));
  CHECK(!g.ambiguous);
  REQUIRE(g.selected.size() == 1);
  CHECK(g.selected[0].factor == P({3, -3, 1}));
  const auto& p = g.witnesses.at(0).point[0];
  CHECK(p.mid.re.to_double() == doctest::Approx(1.5));
  CHECK(std::abs(p.mid.im.to_double()) == doctest::Approx(0.8660254));
}

TEST_CASE("identification errors") {
  CHECK_THROWS_AS(identify_geometric({}, parse_word("RL")), IdentificationError);
  // a totally real candidate is never geometric
  CharacterComponent fake{P({-2, 0, 1}), 0, UniPoly::x(), UniPoly::x(), UniPoly::x(), {1, 1, 1}};
  CHECK_THROWS_AS(identify_geometric({fake}, parse_word("RL")), IdentificationError);
}

TEST_CASE("components are exact and never real") {
  for (const auto& w : enumerate_words(5)) {
    const auto comps = solve_characters(w);
    CHECK(!comps.empty());
    for (const auto& c : comps) {
      CHECK(sturm_count(c.factor) == 0);
      CHECK(back_substitution_ok(c, fixed_point_ideal(w, c.sign_class)));
    }
  }
}

TEST_CASE("geometric components of the examples") {
  const auto rl4 = identify_geometric(solve_characters(parse_word("RL4")), parse_word("RL4"));
  CHECK(!rl4.ambiguous);
  CHECK(rl4.selected.at(0).factor.degree() == 6);
  const auto b = identify_geometric(solve_characters(parse_word("-R4L2")), parse_word("-R4L2"));
  CHECK(!b.ambiguous);
  CHECK(b.selected.at(0).factor.degree() == 12);
}

TEST_CASE("primitive trace growth") {
  const GrowthStats fuchsian = primitive_trace_growth({{3, 3, 3}}, 8);
  CHECK(fuchsian.small == 0);
  CHECK(fuchsian.passes());
  const GrowthStats elliptic = primitive_trace_growth({{1, 1, 1}}, 8);
  CHECK(elliptic.real_elliptic > 0);
  CHECK(!elliptic.passes());
}
