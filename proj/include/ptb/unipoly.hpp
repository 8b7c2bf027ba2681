#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ptb/poly.hpp"

namespace ptb {

/// Univariate polynomial over the rationals, lowest degree first.
using UniPoly = Poly<BigRational>;
/// Univariate polynomial over the integers.
using ZPoly = Poly<BigInt>;

UniPoly to_rational(const ZPoly& p);

/// Clear denominators and divide out the content; leading coefficient > 0.
ZPoly primitive_integer(const UniPoly& p);
ZPoly primitive_part(const ZPoly& p);
BigInt content(const ZPoly& p);
/// Gcd over Z by the primitive remainder sequence; positive leading coefficient.
ZPoly gcd_primitive(ZPoly a, ZPoly b);

UniPoly monic(const UniPoly& p);

/// f / gcd(f, f'), primitive with positive leading coefficient.
/// Throws std::invalid_argument on the zero polynomial.
UniPoly squarefree_part(const UniPoly& f);

/// Yun's decomposition: f = c * prod(g_i ^ m_i) with g_i squarefree, coprime,
/// primitive. Factors of degree 0 are omitted.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

bool is_squarefree(const UniPoly& f);

/// Exact coefficient strings, lowest degree first: x^3-x^2+x+1 <-> ["1","1","-1","1"].
std::vector<std::string> to_coeff_strings(const UniPoly& p);
UniPoly from_coeff_strings(const std::vector<std::string>& coeffs);

/// Human-readable form in the variable `var`, highest degree first.
std::string format_poly(const UniPoly& p, const std::string& var = "x");

/// Sign of p at a rational point.
int sign_at(const UniPoly& p, const BigRational& at);

}  // namespace ptb
