#include <doctest.h>

#include <random>
#include <set>

#include "ptb/homology.hpp"
#include "ptb/wordalg.hpp"

using namespace ptb;

namespace {

IntMatrix2 mat(long a, long b, long c, long d) {
  IntMatrix2 m;
  m << BigInt(a), BigInt(b), BigInt(c), BigInt(d);
  return m;
}

MonodromyWord random_word(std::mt19937& rng, int max_syllables, long max_exp) {
  std::uniform_int_distribution<int> ns(1, max_syllables);
  std::uniform_int_distribution<long> ex(1, max_exp);
  MonodromyWord w;
  w.sign = rng() % 2 ? 1 : -1;
  const int n = ns(rng);
  const Letter first = rng() % 2 ? Letter::R : Letter::L;
  for (int i = 0; i < n; ++i) {
    const Letter l = (i % 2 == 0) ? first : (first == Letter::R ? Letter::L : Letter::R);
    w.syllables.push_back({l, ex(rng)});
  }
  return w;
}

std::vector<BigInt> ints(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("parse_word examples") {
  MonodromyWord w = parse_word("RL4");
  CHECK(w.sign == 1);
  REQUIRE(w.syllables.size() == 2);
  CHECK(w.syllables[0] == Syllable{Letter::R, 1});
  CHECK(w.syllables[1] == Syllable{Letter::L, 4});
  w = parse_word("-R4L2");
  CHECK(w.sign == -1);
  CHECK(w.syllables == std::vector<Syllable>{{Letter::R, 4}, {Letter::L, 2}});
  w = parse_word("R");
  CHECK(w.syllables == std::vector<Syllable>{{Letter::R, 1}});
  CHECK(parse_word("RRL") == parse_word("R2L"));
}

TEST_CASE("parse_word errors carry offsets") {
  auto offset_of = [](const char* s) -> long {
    try {
      parse_word(s);
    } catch (const WordParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("RX") == 1);
  CHECK(offset_of("RL0") == 2);
  CHECK(offset_of("R01") == 1);
  CHECK(offset_of("-") == 1);
  CHECK(offset_of("R L") == 1);
  CHECK(offset_of("R99999999999999999999") == 1);
  CHECK(offset_of("--R") == 1);
}

TEST_CASE("format and parse round trip") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const MonodromyWord w = random_word(rng, 6, 20);
    CHECK(parse_word(format_word(w)) == w);
  }
  CHECK(format_word(parse_word("-RL4")) == "-RL4");
}

TEST_CASE("word matrices") {
  CHECK(word_matrix(parse_word("RL4")) == mat(5, 1, 4, 1));
  CHECK(trace(word_matrix(parse_word("RL4"))) == 6);
  CHECK(word_matrix(parse_word("R")) == mat(1, 1, 0, 1));
  CHECK(word_matrix(parse_word("RL2RL3")) == mat(15, 4, 11, 3));
  CHECK(trace(word_matrix(parse_word("RL2RL3"))) == 18);
  CHECK(word_matrix(parse_word("-R")) == mat(-1, -1, 0, -1));
}

TEST_CASE("matrix properties") {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    const MonodromyWord u = random_word(rng, 5, 20);
    const MonodromyWord v = random_word(rng, 5, 20);
    const IntMatrix2 mu = word_matrix(u);
    CHECK(mu.determinant() == 1);
    MonodromyWord uv = parse_word(format_word(u) + format_word(v).substr(v.sign < 0 ? 1 : 0));
    uv.sign = u.sign * v.sign;
    CHECK(word_matrix(uv) == (mu * word_matrix(v)).eval());
    CHECK(trace(word_matrix(canonical_cyclic_form(u))) == trace(mu));
  }
}

TEST_CASE("hyperbolicity") {
  CHECK(is_hyperbolic(parse_word("RL4")));
  CHECK(!is_hyperbolic(parse_word("R")));
  CHECK(is_hyperbolic(parse_word("-RL4")));
  CHECK(trace(word_matrix(parse_word("-RL4"))) == -6);
  CHECK(!is_hyperbolic(parse_word("R5")));
}

TEST_CASE("canonical cyclic form") {
  CHECK(format_word(canonical_cyclic_form(parse_word("L4R"))) == "RL4");
  CHECK(format_word(canonical_cyclic_form(parse_word("RL4"))) == "RL4");
  const MonodromyWord c = canonical_cyclic_form(parse_word("L2RL3R"));
  CHECK(format_word(c) == "RL2RL3");
  CHECK(trace(word_matrix(c)) == trace(word_matrix(parse_word("RL3RL2"))));
  CHECK(format_word(canonical_cyclic_form(parse_word("-LRL"))) == "-RL2");
}

TEST_CASE("enumeration") {
  auto words = enumerate_words(2);
  REQUIRE(words.size() == 2);
  CHECK(format_word(words[0]) == "RL");
  CHECK(format_word(words[1]) == "-RL");
  CHECK(enumerate_words(1).empty());
  std::set<std::string> five;
  for (const auto& w : enumerate_words(5)) five.insert(format_word(w));
  CHECK(five.count("RL4") == 1);
  CHECK(five.count("-R4L") == 1);
  CHECK(five.count("R5") == 0);
  // each conjugacy class once: canonical forms are distinct and fixed
  std::set<std::string> seen;
  for (const auto& w : enumerate_words(8)) {
    CHECK(canonical_cyclic_form(w) == w);
    CHECK(is_hyperbolic(w));
    CHECK(seen.insert(format_word(w)).second);
  }
}

TEST_CASE("smith normal form examples") {
  IntMatrix M(2, 2);
  M << BigInt(14), BigInt(4), BigInt(11), BigInt(2);
  auto s = smith_normal_form(M);
  CHECK(s.diagonal() == ints({1, 16}));
  CHECK((s.U * M * s.V).eval() == s.D);
  IntMatrix I = IntMatrix::Identity(2, 2);
  CHECK(smith_normal_form(I).diagonal() == ints({1, 1}));
  IntMatrix C(2, 2);
  C << BigInt(2), BigInt(0), BigInt(0), BigInt(4);
  CHECK(smith_normal_form(C).diagonal() == ints({2, 4}));
  IntMatrix E(2, 2);
  E << BigInt(4), BigInt(0), BigInt(0), BigInt(6);
  CHECK(smith_normal_form(E).diagonal() == ints({2, 12}));
  IntMatrix Zr = IntMatrix::Zero(2, 3);
  CHECK(smith_normal_form(Zr).diagonal() == ints({0, 0}));
}

TEST_CASE("smith normal form on random rectangular matrices") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> d(-30, 30);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = dim(rng), n = dim(rng);
    IntMatrix M(m, n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) M(i, j) = d(rng);
    }
    const auto s = smith_normal_form(M);
    CHECK((s.U * M * s.V).eval() == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    const auto diag = s.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      if (sgn(diag[i + 1]) != 0) CHECK(mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t()));
      if (sgn(diag[i]) == 0) CHECK(sgn(diag[i + 1]) == 0);
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) CHECK(sgn(s.D(i, j)) == 0);
      }
    }
  }
}

TEST_CASE("bundle homology") {
  auto g = h1_of_bundle(parse_word("RL4"));
  CHECK(g.betti == 1);
  CHECK(g.torsion == ints({4}));
  g = h1_of_bundle(parse_word("-RL4"));
  CHECK(g.betti == 1);
  CHECK(g.torsion == ints({8}));
  g = h1_of_bundle(parse_word("-R4L2"));
  CHECK(g.torsion == ints({2, 6}));
  g = h1_of_bundle(parse_word("RL2RL3"));
  CHECK(g.torsion == ints({16}));
  g = h1_of_bundle(parse_word("R"));
  CHECK(g.betti == 2);
  CHECK(g.torsion.empty());
  CHECK(format_group(h1_of_bundle(parse_word("-R4L2"))) == "Z + Z/2 + Z/6");
}

TEST_CASE("two torsion") {
  CHECK(has_two_torsion({1, ints({4})}));
  CHECK(!has_two_torsion({1, {}}));
  CHECK(!has_two_torsion({1, ints({3})}));
}

TEST_CASE("torsion order closed form") {
  for (const auto& w : enumerate_words(10)) {
    const auto g = h1_of_bundle(w);
    BigInt order = 1;
    for (const auto& d : g.torsion) order *= d;
    const BigInt tr = trace(word_matrix(w));
    CHECK(order == abs(2 - tr));
    CHECK(has_two_torsion(g) == mpz_even_p(tr.get_mpz_t()));
  }
}
