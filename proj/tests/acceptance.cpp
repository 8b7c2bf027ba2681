// End-to-end acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "ptb/euler.hpp"
#include "ptb/factor.hpp"
#include "ptb/homology.hpp"
#include "ptb/numberfield.hpp"
#include "ptb/realroots.hpp"
#include "ptb/tracefield.hpp"

using namespace ptb;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail, Clock::time_point start) {
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("%s %d %s: %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++failures;
}

int worker_count() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < worker_count(); ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

UniPoly P(std::initializer_list<long> c) {
  std::vector<BigRational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

UniPoly random_poly(std::mt19937& rng, int degree, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  std::vector<BigRational> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(d(rng));
  long lead = d(rng);
  c.emplace_back(lead == 0 ? 1 : lead);
  return UniPoly(std::move(c));
}

void criterion_fixtures() {
  const auto start = Clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"verify-paper"}, out, err);
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const std::string text = out.str();
  const long passes = std::count(text.begin(), text.end(), '\n') - 1;
  const bool ok = code == 0 && text.find("FAIL") == std::string::npos && secs < 60;
  report(1, "regression fixtures", ok, std::to_string(passes) + " rows, exit " + std::to_string(code), start);
}

void criteria_sweep(const SweepResult& res, Clock::time_point start) {
  long r1_zero = 0, implication = 0, even = 0, two_power = 0, negative = 0;
  std::set<std::string> words;
  for (const auto& r : res.reports) {
    words.insert(format_word(r.word));
    negative += r.word.sign < 0;
    r1_zero += r.K_signature.r1 == 0;
    implication += r.k_signature.r1 == 0 || has_two_torsion(r.h1);
    even += r.K_signature.degree % 2 == 0;
    two_power += r.index_log2 >= 0;
  }
  const long n = static_cast<long>(res.reports.size());
  const bool base = res.failures.empty() && n > 0 && negative > 0;
  std::ostringstream a;
  a << words.size() << " words, " << res.failures.size() << " failures, r1(K)=0 on " << r1_zero << "/" << n;
  report(2, "sweep r1(K) = 0", base && r1_zero == n, a.str(), start);
  std::ostringstream b;
  b << "real k => 2-torsion on " << implication << "/" << n << ", even deg K " << even << "/" << n
    << ", 2-power index " << two_power << "/" << n;
  report(3, "sweep invariant field", base && implication == n && even == n && two_power == n, b.str(), start);
}

void criterion_calibration() {
  const auto start = Clock::now();
  const UniPoly target = P({3, -3, 1});
  const auto [K, sig] = trace_field(parse_word("RL"));
  const TraceFieldReport r = theorem_a_verdict(parse_word("RL"));
  const bool ok = K == target && sig.r1 == 0 && sig.r2 == 1 && r.k_minpoly == target && r.k_signature.r1 == 0;
  report(4, "RL calibration", ok, "K = " + format_poly(K) + ", k = " + format_poly(r.k_minpoly), start);
}

void criterion_homology() {
  const auto start = Clock::now();
  long checked = 0, bad = 0;
  for (const auto& w : enumerate_words(10)) {
    const BigInt t = trace(word_matrix(w));
    const AbelianGroupInfo g = h1_of_bundle(w);
    BigInt order = 1;
    for (const auto& d : g.torsion) order *= d;
    ++checked;
    if (g.betti != 1 || order != abs(BigInt(2 - t))) ++bad;
  }
  report(5, "homology closed form", checked > 0 && bad == 0,
         std::to_string(checked) + " words, " + std::to_string(bad) + " mismatches", start);
}

void criterion_reality(const std::vector<MonodromyWord>& words) {
  const auto start = Clock::now();
  std::atomic<long> comps{0}, real{0}, empty{0}, errors{0};
  parallel_for(words.size(), [&](std::size_t i) {
    try {
      const auto cs = solve_characters(words[i]);
      if (cs.empty()) ++empty;
      for (const auto& c : cs) {
        ++comps;
        if (sturm_count(c.factor) != 0) ++real;
      }
    } catch (const std::exception&) {
      ++errors;
    }
  });
  std::ostringstream d;
  d << words.size() << " words, " << comps << " components, " << real << " with real roots, " << errors << " errors";
  report(6, "fixed points never real", real == 0 && empty == 0 && errors == 0, d.str(), start);
}

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

void criterion_euler() {
  const auto start = Clock::now();
  bool ok = true;
  const EulerResult base = relative_euler_class(RealCharacter::rational(3, 3, 3));
  ok = ok && !base.degenerate && base.s1 == base.s2 && base.e && std::abs(*base.e) == 1;

  std::set<std::array<long, 3>> seen{{3, 3, 3}};
  std::vector<std::array<long, 3>> frontier{{3, 3, 3}};
  for (int d = 0; d < 3; ++d) {
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
  long neighbours = 0, reversed = 0, mw = 0;
  Mat2<QuadReal> J;
  J << QuadReal(1), QuadReal(0), QuadReal(0), QuadReal(-1);
  for (const auto& t : seen) {
    const RealCharacter c = RealCharacter::rational(t[0], t[1], t[2]);
    const EulerResult r = relative_euler_class(c);
    if (t != std::array<long, 3>{3, 3, 3}) ++neighbours;
    ok = ok && !r.degenerate && r.s1 == r.s2 && r.e == base.e;
    const auto [A, B] = char_to_matrices(c);
    const EulerResult m = euler_from_matrices(J * A * J, J * B * J);
    reversed += !m.degenerate && m.e && r.e && *m.e == -*r.e;
    mw += milnor_wood_parity_check(r).mw_ok && milnor_wood_parity_check(m).mw_ok;
  }
  ok = ok && neighbours >= 10 && reversed == static_cast<long>(seen.size()) && mw == static_cast<long>(seen.size());

  std::mt19937 rng(101);
  std::uniform_int_distribution<long> num(-5, 5);
  long cob = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto g0 = random_sl2(rng), g1 = random_sl2(rng), g2 = random_sl2(rng), g3 = random_sl2(rng);
    const auto p = rng() % 6 == 0 ? BoundaryPoint<BigRational>::infinity()
                                  : BoundaryPoint<BigRational>::finite(BigRational(num(rng), 2));
    cob += cocycle_coboundary(g0, g1, g2, g3, p) == 0;
  }
  ok = ok && cob == 1000;
  std::ostringstream d;
  d << "e(3,3,3) = " << (base.e ? *base.e : 0) << ", " << neighbours << " neighbours, " << reversed << "/"
    << seen.size() << " reversed, " << cob << "/1000 coboundaries, MW " << mw << "/" << seen.size();
  report(7, "euler anchors", ok, d.str(), start);
}

void criterion_kernel() {
  const auto start = Clock::now();
  std::mt19937 rng(2024);
  long snf_ok = 0;
  std::uniform_int_distribution<long> entry(-40, 40);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int i = 0; i < 1000; ++i) {
    const int m = dim(rng), n = dim(rng);
    IntMatrix M(m, n);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < n; ++b) M(a, b) = entry(rng);
    }
    const auto s = smith_normal_form(M);
    bool ok = (s.U * M * s.V).eval() == s.D && abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1;
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < n; ++b) ok = ok && (a == b || sgn(s.D(a, b)) == 0);
    }
    const auto diag = s.diagonal();
    for (std::size_t k = 0; k + 1 < diag.size(); ++k) {
      if (sgn(diag[k]) == 0) ok = ok && sgn(diag[k + 1]) == 0;
      else ok = ok && mpz_divisible_p(diag[k + 1].get_mpz_t(), diag[k].get_mpz_t());
    }
    snf_ok += ok;
  }

  long sturm_ok = 0;
  std::uniform_int_distribution<long> root(-60, 60), den(1, 7), count(0, 6), extra(1, 20);
  for (int i = 0; i < 1000; ++i) {
    std::set<BigRational> roots;
    const long k = count(rng);
    while (static_cast<long>(roots.size()) < k) {
      BigRational r(root(rng), den(rng));
      r.canonicalize();
      roots.insert(r);
    }
    UniPoly f(BigRational(1 + static_cast<long>(rng() % 5)));
    for (const auto& r : roots) f = f * UniPoly(std::vector<BigRational>{-r, BigRational(1)});
    if (i % 2) {  // rootless factor (x - a)^2 + b with b > 0
      BigRational a(root(rng), den(rng)), b(extra(rng), den(rng));
      a.canonicalize();
      b.canonicalize();
      f = f * UniPoly(std::vector<BigRational>{a * a + b, BigRational(-2) * a, BigRational(1)});
    }
    const BigRational lo(root(rng));
    const BigRational hi = lo + extra(rng);
    long inside = 0;
    for (const auto& r : roots) inside += lo < r && r <= hi;
    sturm_ok += sturm_count(f) == k && sturm_count(f, lo, hi) == inside &&
                static_cast<long>(isolate_real_roots(f).size()) == k;
  }

  long factor_ok = 0;
  const int factor_trials = 200;
  for (int i = 0; i < factor_trials; ++i) {
    UniPoly f(BigRational(1 + i % 4));
    for (int p = 0; p < 1 + i % 4; ++p) {
      UniPoly g = random_poly(rng, 1 + (i + p) % 5, 9);
      f = f * (p % 2 && i % 3 == 0 ? g * g : g);
    }
    const auto fs = factor_rationals(f);
    UniPoly prod(BigRational(1));
    bool irreducible = true;
    for (const auto& [g, e] : fs) {
      prod = prod * power(g, static_cast<unsigned>(e));
      irreducible = irreducible && is_irreducible(g);
    }
    factor_ok += monic(prod) == monic(f) && irreducible;
  }

  long minpoly_ok = 0, minpoly_trials = 0;
  while (minpoly_trials < 200) {
    const UniPoly f = random_poly(rng, 2 + static_cast<int>(rng() % 6), 7);
    if (!is_irreducible(f)) continue;
    ++minpoly_trials;
    const UniPoly g = random_poly(rng, static_cast<int>(rng() % f.degree()), 5);
    const UniPoly mp = minpoly_in_quotient(f, g);
    const bool annihilates = (mp.compose(g) % f).is_zero_poly();
    minpoly_ok += annihilates && f.degree() % mp.degree() == 0 && is_irreducible(mp);
  }

  const bool ok = snf_ok == 1000 && sturm_ok == 1000 && factor_ok == factor_trials && minpoly_ok == minpoly_trials;
  std::ostringstream d;
  d << "SNF " << snf_ok << "/1000, Sturm " << sturm_ok << "/1000, factor " << factor_ok << "/" << factor_trials
    << ", minpoly " << minpoly_ok << "/" << minpoly_trials;
  report(8, "kernel properties", ok, d.str(), start);
}

}  // namespace

int main() {
  criterion_fixtures();

  const auto sweep_start = Clock::now();
  SweepResult res;
  try {
    res = sweep(6, worker_count());
  } catch (const std::exception& e) {
    res.failures.push_back({"*", e.what()});
  }
  criteria_sweep(res, sweep_start);
  criterion_calibration();
  criterion_homology();
  criterion_reality(enumerate_words(6));
  criterion_euler();
  criterion_kernel();
  std::printf("%s\n", failures == 0 ? "ALL PASS" : "SOME FAILED");
  return failures == 0 ? 0 : 1;
}
