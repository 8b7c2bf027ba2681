#include <doctest.h>

#include <random>

#include "ptb/factor.hpp"
#include "ptb/tracefield.hpp"

using namespace ptb;

namespace {

UniPoly P(std::initializer_list<long> c) {
  std::vector<BigRational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

}  // namespace

TEST_CASE("RL trace fields") {
  const auto [K, sK] = trace_field(parse_word("RL"));
  CHECK(K == P({3, -3, 1}));
  CHECK(sK.r1 == 0);
  CHECK(sK.r2 == 1);
  const auto r = theorem_a_verdict(parse_word("RL"));
  CHECK(r.k_minpoly == P({3, -3, 1}));
  CHECK(r.index_log2 == 0);
  CHECK(r.part1_ok);
  CHECK(r.part2_ok);
  CHECK(!r.ambiguous);
}

TEST_CASE("RL4 and its negative") {
  const auto r = theorem_a_verdict(parse_word("RL4"));
  CHECK(r.K_signature.r1 == 0);
  CHECK(r.k_minpoly.degree() == 3);
  CHECK(fields_isomorphic(r.k_minpoly, P({1, 1, -1, 1})));
  CHECK(r.k_signature.r1 == 1);
  CHECK(r.h1.torsion == std::vector<BigInt>{4});
  CHECK(r.part2_ok);
  const auto n = theorem_a_verdict(parse_word("-RL4"));
  CHECK(n.h1.torsion == std::vector<BigInt>{8});
  CHECK(fields_isomorphic(n.k_minpoly, P({1, 1, -1, 1})));
}

TEST_CASE("RL2RL3 invariant trace field") {
  const auto r = theorem_a_verdict(parse_word("RL2RL3"));
  CHECK(r.k_minpoly.degree() == 7);
  CHECK(fields_isomorphic(r.k_minpoly, P({-2, 4, -2, -2, 0, -3, 0, 1})));
  CHECK(r.h1.torsion == std::vector<BigInt>{16});
}

TEST_CASE("-R4L2 degrees") {
  const auto r = theorem_a_verdict(parse_word("-R4L2"));
  CHECK(r.K_minpoly.degree() == 12);
  CHECK(r.k_minpoly.degree() == 3);
  CHECK(r.index_log2 == 2);
  CHECK(r.k_signature.r1 >= 1);
  CHECK(r.part2_ok);
}

TEST_CASE("fields_isomorphic examples and symmetry") {
  CHECK(fields_isomorphic(P({-2, 0, 1}), P({-8, 0, 1})));
  CHECK(!fields_isomorphic(P({-2, 0, 1}), P({-3, 0, 1})));
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> coef(-4, 4);
  std::vector<UniPoly> pool;
  while (pool.size() < 12) {
    const int d = 2 + static_cast<int>(rng() % 2);
    std::vector<BigRational> c;
    for (int i = 0; i < d; ++i) c.emplace_back(coef(rng));
    c.emplace_back(1);
    const UniPoly f(std::move(c));
    if (is_irreducible(f)) pool.push_back(f);
  }
  for (const auto& f : pool) {
    CHECK(fields_isomorphic(f, f));
    const UniPoly shifted = f.compose(P({3, 2}));
    CHECK(fields_isomorphic(f, monic(shifted)));
    for (const auto& g : pool) CHECK(fields_isomorphic(f, g) == fields_isomorphic(g, f));
  }
}

TEST_CASE("sweep to bound 2") {
  const SweepResult s = sweep(2, 2);
  REQUIRE(s.reports.size() == 2);
  CHECK(format_word(s.reports[0].word) == "RL");
  CHECK(format_word(s.reports[1].word) == "-RL");
  CHECK(s.failures.empty());
  CHECK(s.all_ok());
}

TEST_CASE("sweep order does not depend on jobs") {
  const SweepResult a = sweep(4, 1);
  const SweepResult b = sweep(4, 3);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(a.reports[i].word == b.reports[i].word);
    CHECK(a.reports[i].K_minpoly == b.reports[i].K_minpoly);
  }
  for (const auto& r : a.reports) {
    CHECK(r.K_minpoly.degree() % 2 == 0);
    CHECK(r.part1_ok);
  }
}

TEST_CASE("report json round trip") {
  const auto r = theorem_a_verdict(parse_word("RL4"));
  const nlohmann::json j = to_json(r);
  CHECK(j.at("word") == "RL4");
  CHECK(j.at("matrix") == nlohmann::json({"5", "1", "4", "1"}));
  CHECK(j.at("trace") == "6");
  const TraceFieldReport back = report_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.word == r.word);
  CHECK(back.K_minpoly == r.K_minpoly);
  CHECK(back.k_minpoly == r.k_minpoly);
  CHECK(back.h1 == r.h1);
  CHECK(back.index_log2 == r.index_log2);
  CHECK(back.part2_ok == r.part2_ok);
  CHECK(to_json(back) == j);
}
