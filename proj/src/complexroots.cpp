#include "ptb/complexroots.hpp"

#include <cmath>
#include <string>

#include "ptb/realroots.hpp"

namespace ptb {
namespace {

MpReal eps_for(mpfr_prec_t prec) { return ldexp(MpReal(1.0, prec), 3 - static_cast<long>(prec)); }

struct Evaluation {
  MpComplex value;
  MpComplex derivative;
  MpReal abs_sum;  // sum |a_k| |z|^k, for the rounding bound
};

Evaluation horner(const std::vector<MpReal>& a, const MpComplex& z) {
  const mpfr_prec_t prec = z.precision();
  MpComplex p(prec);
  MpComplex dp(prec);
  MpReal s(prec);
  const MpReal az = z.abs();
  for (std::size_t k = a.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + MpComplex(a[k], MpReal(prec));
    s = s * az + abs(a[k]);
  }
  return {p, dp, s};
}

}  // namespace

bool ComplexRootBox::overlaps(const ComplexRootBox& o) const {
  const MpComplex d = center - o.center;
  const MpReal r = radius + o.radius;
  return d.norm2() <= r * r;
}

std::vector<ComplexRootBox> isolate_complex_roots(const UniPoly& f, long precision_bits) {
  if (precision_bits < 64) throw std::invalid_argument("isolate_complex_roots: precision_bits must be >= 64");
  if (f.is_zero_poly() || !is_squarefree(f)) {
    throw std::invalid_argument("isolate_complex_roots: input must be a nonzero squarefree polynomial");
  }
  const int n = f.degree();
  std::vector<ComplexRootBox> out;
  if (n <= 0) return out;
  const auto prec = static_cast<mpfr_prec_t>(precision_bits);

  std::vector<MpReal> a;
  a.reserve(static_cast<std::size_t>(n) + 1);
  for (const auto& c : f.coeffs()) a.emplace_back(c, prec);

  // Initial guesses on a circle whose radius is the geometric mean of the root moduli.
  double r0 = 1.0;
  if (!a[0].is_zero()) r0 = std::pow(std::abs(a[0].to_double() / a[n].to_double()), 1.0 / n);
  if (!std::isfinite(r0) || r0 <= 0) r0 = 1.0;
  std::vector<MpComplex> z;
  const MpReal two_pi = ldexp(MpReal::pi(prec), 1);
  for (int k = 0; k < n; ++k) {
    MpReal angle = two_pi * MpReal(static_cast<double>(k) / n, prec) + MpReal(0.4, prec);
    MpReal rad(r0 * (1.0 + 0.01 * k / n), prec);
    z.emplace_back(rad * cos(angle), rad * sin(angle));
  }

  // Aberth-Ehrlich simultaneous iteration.
  const MpReal tol = ldexp(MpReal(1.0, prec), 20 - static_cast<long>(prec));
  const int max_iter = 400 + 20 * n;
  int settled = 0;
  for (int iter = 0; iter < max_iter && settled < 3; ++iter) {
    MpReal worst(prec);
    for (int i = 0; i < n; ++i) {
      const Evaluation e = horner(a, z[i]);
      if (e.value.re.is_zero() && e.value.im.is_zero()) continue;
      if (e.derivative.re.is_zero() && e.derivative.im.is_zero()) continue;
      const MpComplex ratio = e.value / e.derivative;
      MpComplex s(prec);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const MpComplex d = z[i] - z[j];
        if (d.re.is_zero() && d.im.is_zero()) continue;
        s = s + MpComplex(MpReal(1.0, prec), MpReal(prec)) / d;
      }
      const MpComplex denom = MpComplex(MpReal(1.0, prec), MpReal(prec)) - ratio * s;
      const MpComplex w = (denom.re.is_zero() && denom.im.is_zero()) ? ratio : ratio / denom;
      z[i] = z[i] - w;
      const MpReal rel = w.abs() / (z[i].abs() + MpReal(1.0, prec));
      if (rel > worst) worst = rel;
    }
    settled = (worst < tol) ? settled + 1 : 0;
  }

  // Smith's inclusion disks: radius n |f(z_i)| / |a_n prod_{j != i} (z_i - z_j)|.
  const MpReal eps = eps_for(prec);
  const MpReal gamma = eps * MpReal(static_cast<double>(4 * n + 10), prec);
  const MpReal abs_lead = abs(a[n]);
  for (int i = 0; i < n; ++i) {
    const Evaluation e = horner(a, z[i]);
    MpReal prod = abs_lead;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const MpReal d = (z[i] - z[j]).abs();
      if (d.is_zero()) throw PrecisionError("complex root isolation: coincident approximations; raise precision");
      prod = prod * d;
    }
    const MpReal num = e.value.abs() + gamma * e.abs_sum;
    MpReal radius = MpReal(static_cast<double>(n), prec) * num / prod;
    radius = radius * (MpReal(1.0, prec) + eps) + eps * z[i].abs();
    out.push_back({z[i], radius, false});
  }

  auto disjoint = [&]() {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (out[i].overlaps(out[j])) return false;
      }
    }
    return true;
  };
  if (!disjoint()) {
    throw PrecisionError("complex root isolation: enclosures overlap at " + std::to_string(precision_bits) +
                         " bits; retry with higher precision");
  }

  const int r1 = sturm_count(f);
  int touching = 0;
  for (const auto& b : out) {
    if (abs(b.center.im) <= b.radius) ++touching;
  }
  if (touching != r1) {
    throw PrecisionError("complex root isolation: cannot separate real roots at " +
                         std::to_string(precision_bits) + " bits; retry with higher precision");
  }
  for (auto& b : out) {
    if (abs(b.center.im) <= b.radius) {
      b.real = true;
      b.center.im = MpReal(prec);
    }
  }
  if (!disjoint()) {
    throw PrecisionError("complex root isolation: real enclosures overlap; retry with higher precision");
  }
  return out;
}

std::vector<ComplexRootBox> isolate_complex_roots_adaptive(const UniPoly& f, long start_bits, long max_bits) {
  long bits = std::max(64L, start_bits);
  while (true) {
    try {
      return isolate_complex_roots(f, bits);
    } catch (const PrecisionError&) {
      if (bits * 2 > max_bits) throw;
      bits *= 2;
    }
  }
}

ComplexBall ComplexBall::from_rational(const BigRational& q, mpfr_prec_t prec) {
  MpReal re(q, prec);
  MpReal rad = abs(re) * eps_for(prec);
  return {MpComplex(re, MpReal(prec)), rad};
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  MpComplex m = a.mid + b.mid;
  MpReal r = a.rad + b.rad + m.abs() * eps_for(m.precision());
  return {m, r};
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
  MpComplex m = a.mid - b.mid;
  MpReal r = a.rad + b.rad + m.abs() * eps_for(m.precision());
  return {m, r};
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  MpComplex m = a.mid * b.mid;
  MpReal r = a.mid.abs() * b.rad + b.mid.abs() * a.rad + a.rad * b.rad + m.abs() * eps_for(m.precision());
  return {m, r};
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
  const MpReal bm = b.mid.abs();
  if (bm <= b.rad) throw std::domain_error("complex ball division: divisor contains zero");
  const mpfr_prec_t prec = b.precision();
  MpComplex inv_mid = MpComplex(MpReal(1.0, prec), MpReal(prec)) / b.mid;
  MpReal inv_rad = b.rad / (bm * (bm - b.rad)) + inv_mid.abs() * eps_for(prec);
  return a * ComplexBall(inv_mid, inv_rad);
}

int ComplexBall::im_sign() const {
  if (abs(mid.im) <= rad) return 0;
  return mid.im.sign();
}

int ComplexBall::re_sign() const {
  if (abs(mid.re) <= rad) return 0;
  return mid.re.sign();
}

bool ComplexBall::contains_zero() const { return mid.abs() <= rad; }

MpReal ComplexBall::abs_upper() const { return mid.abs() + rad; }

MpReal ComplexBall::abs_lower() const {
  MpReal v = mid.abs() - rad;
  if (v.sign() < 0) return MpReal(v.precision());
  return v;
}

ComplexBall eval_ball(const UniPoly& p, const ComplexBall& at) {
  const mpfr_prec_t prec = at.precision();
  ComplexBall acc(prec);
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    acc = acc * at + ComplexBall::from_rational(p[k], prec);
  }
  return acc;
}

}  // namespace ptb
