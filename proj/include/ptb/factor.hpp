#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "ptb/unipoly.hpp"

namespace ptb {

class DegreeBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Irreducible factors over Q with multiplicities. Factors are primitive
/// integer polynomials (positive leading coefficient) returned as UniPoly,
/// sorted by degree and then coefficients. Their product equals f up to a
/// rational unit. Throws DegreeBoundError when deg f > max_degree and
/// std::invalid_argument on the zero polynomial.
std::vector<std::pair<UniPoly, int>> factor_rationals(const UniPoly& f, int max_degree = 64);

/// Factors of a squarefree primitive integer polynomial (Zassenhaus).
std::vector<ZPoly> factor_squarefree_integer(const ZPoly& f);

bool is_irreducible(const UniPoly& f, int max_degree = 64);

}  // namespace ptb
