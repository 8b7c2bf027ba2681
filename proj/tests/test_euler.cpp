#include <doctest.h>

#include <random>
#include <set>

#include "ptb/euler.hpp"

using namespace ptb;

namespace {

using QPoint = BoundaryPoint<BigRational>;

RealCharacter Qc(long x, long y, long z) { return RealCharacter::rational(x, y, z); }

Mat2<BigRational> random_sl2(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
  Mat2<BigRational> g = Mat2<BigRational>::Identity();
  for (int i = 0; i < 3; ++i) {
    BigRational a(num(rng), den(rng));
    a.canonicalize();
    Mat2<BigRational> e = Mat2<BigRational>::Identity();
    e(i % 2, 1 - i % 2) = a;
    g = (g * e).eval();
  }
  return g;
}

QPoint random_point(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  if (rng() % 6 == 0) return QPoint::infinity();
  return QPoint::finite(BigRational(num(rng), 2));
}

// Markov-tree neighbours of (3, 3, 3) up to the given depth.
std::vector<std::array<long, 3>> markov_tree(int depth) {
  std::set<std::array<long, 3>> seen{{3, 3, 3}};
  std::vector<std::array<long, 3>> frontier{{3, 3, 3}};
  for (int d = 0; d < depth; ++d) {
    std::vector<std::array<long, 3>> next;
    for (const auto& t : frontier) {
      for (int i = 0; i < 3; ++i) {
        auto u = t;
        u[i] = t[(i + 1) % 3] * t[(i + 2) % 3] - t[i];
        if (seen.insert(u).second) next.push_back(u);
      }
    }
    frontier = next;
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

TEST_CASE("cyclic orientation anchors") {
  const QPoint zero = QPoint::finite(0), one = QPoint::finite(1), inf = QPoint::infinity();
  CHECK(cyclic_orientation(zero, one, inf) == 1);
  CHECK(cyclic_orientation(zero, inf, one) == -1);
  CHECK(cyclic_orientation(zero, one, QPoint::finite(2)) == 1);
  CHECK(cyclic_orientation(zero, zero, one) == 0);
  const Mat2<BigRational> I = Mat2<BigRational>::Identity();
  CHECK(thurston_cocycle(I, I, I, one) == 0);
  CHECK(cocycle_coboundary(I, I, I, I, one) == 0);
}

TEST_CASE("thurston cocycle is a cocycle and homogeneous") {
  std::mt19937 rng(23);
  int nonzero = 0;
  for (int i = 0; i < 1000; ++i) {
    const Mat2<BigRational> g0 = random_sl2(rng), g1 = random_sl2(rng), g2 = random_sl2(rng), g3 = random_sl2(rng);
    const QPoint p = random_point(rng);
    CHECK(cocycle_coboundary(g0, g1, g2, g3, p) == 0);
    // degenerate mixtures
    CHECK(cocycle_coboundary(g0, g0, g2, g3, p) == 0);
    const Mat2<BigRational> h = random_sl2(rng);
    const int c = thurston_cocycle(g0, g1, g2, p);
    nonzero += c != 0;
    CHECK(thurston_cocycle<BigRational>(h * g0, h * g1, h * g2, p) == c);
  }
  CHECK(nonzero > 500);
}

TEST_CASE("matrices for (3,3,3)") {
  const auto [A, B] = char_to_matrices(Qc(3, 3, 3));
  CHECK(A.trace() == QuadReal(3));
  CHECK(B.trace() == QuadReal(3));
  const Mat2<QuadReal> AB = A * B;
  CHECK(AB.trace() == QuadReal(3));
  const Mat2<QuadReal> C = sl2_inverse<QuadReal>(A) * sl2_inverse<QuadReal>(B) * AB;
  CHECK(C.trace() == QuadReal(-2));
  CHECK((A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0)) == QuadReal(1));
  CHECK((B(0, 0) * B(1, 1) - B(0, 1) * B(1, 0)) == QuadReal(1));
}

TEST_CASE("excluded characters") {
  CHECK_THROWS_AS(char_to_matrices(Qc(0, 0, 0)), EllipticCharacterError);
  CHECK_THROWS_AS(char_to_matrices(Qc(2, 2, 2)), ReducibleCharacterError);
  CHECK_THROWS_AS(relative_euler_class(Qc(2, 2, 2)), EulerPreconditionError);
  CHECK_THROWS_AS(relative_euler_class(Qc(3, 3, 4)), EulerPreconditionError);
  // |z| < 2 is handled by a change of marking
  const auto [A, B] = char_to_matrices(Qc(3, 1, 5));
  CHECK(A.trace() == QuadReal(3));
  CHECK(B.trace() == QuadReal(1));
  CHECK(Mat2<QuadReal>(A * B).trace() == QuadReal(5));
}

TEST_CASE("Fuchsian anchor and Markov neighbours") {
  const EulerResult r = relative_euler_class(Qc(3, 3, 3));
  REQUIRE(!r.degenerate);
  CHECK(r.s1 == r.s2);
  CHECK(std::abs(*r.e) == 1);
  const auto tree = markov_tree(3);
  CHECK(tree.size() >= 11);
  for (const auto& t : tree) {
    const EulerResult n = relative_euler_class(Qc(t[0], t[1], t[2]));
    CHECK(!n.degenerate);
    CHECK(n.s1 == n.s2);
    CHECK(n.e == r.e);
  }
}

TEST_CASE("even sign change keeps |e|") {
  const EulerResult r = relative_euler_class(Qc(3, -3, -3));
  REQUIRE(!r.degenerate);
  CHECK(std::abs(*r.e) == 1);
  CHECK(r.s1 == r.s2);
}

TEST_CASE("orientation reversal negates e") {
  for (const auto& t : markov_tree(2)) {
    const auto [A, B] = char_to_matrices(Qc(t[0], t[1], t[2]));
    Mat2<QuadReal> J;
    J << QuadReal(1), QuadReal(0), QuadReal(0), QuadReal(-1);
    const EulerResult r = euler_from_matrices(A, B);
    const EulerResult m = euler_from_matrices(J * A * J, J * B * J);
    CHECK(m.s1 == -r.s1);
    CHECK(m.s2 == -r.s2);
    CHECK(*m.e == -*r.e);
  }
}

TEST_CASE("algebraic characters") {
  // (4, 4, 8 + 4 sqrt 2) is on the Markov cubic and Fuchsian
  const RealCharacter c = parse_real_character("4,4,algebraic:32;-16;1:13:14");
  CHECK(c.residual().sign() == 0);
  CHECK(c.coords[2].to_double() == doctest::Approx(8 + 4 * std::sqrt(2.0)));
  const EulerResult r = relative_euler_class(c);
  CHECK(r.e == relative_euler_class(Qc(3, 3, 3)).e);
  // sqrt 2 and sqrt 3 meet in a common field
  const RealCharacter d = parse_real_character("algebraic:-2;0;1:1:2,algebraic:-3;0;1:1:2,1/2");
  CHECK(d.coords[0] * d.coords[0] == RealAlgebraic(2));
  CHECK(d.coords[1] * d.coords[1] == RealAlgebraic(3));
  CHECK(d.coords[0].sign() == 1);
  CHECK(d.coords[1].to_double() == doctest::Approx(std::sqrt(3.0)));
  CHECK(d.coords[2] == RealAlgebraic(BigRational(1, 2)));
  CHECK_THROWS_AS(parse_real_character("1,2"), CharacterSyntaxError);
  CHECK_THROWS_AS(parse_real_character("1,2,x"), CharacterSyntaxError);
  CHECK_THROWS_AS(parse_real_character("1,2,algebraic:-4;0;1:1:3"), CharacterSyntaxError);
}

TEST_CASE("milnor wood and parity") {
  EulerResult r;
  r.e = 1;
  auto v = milnor_wood_parity_check(r);
  CHECK(v.mw_ok);
  CHECK(v.parity_odd);
  r.e = 0;
  v = milnor_wood_parity_check(r);
  CHECK(v.mw_ok);
  CHECK(!v.parity_odd);
  r.e = 2;
  CHECK(!milnor_wood_parity_check(r).mw_ok);
  r.degenerate = true;
  CHECK_THROWS(milnor_wood_parity_check(r));
  for (const auto& t : markov_tree(2)) {
    const EulerResult e = relative_euler_class(Qc(t[0], t[1], t[2]));
    CHECK(milnor_wood_parity_check(e).mw_ok);
  }
}
