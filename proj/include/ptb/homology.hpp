#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ptb/wordalg.hpp"

namespace ptb {

using IntMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

/// U * M * V = D with U, V unimodular and D diagonal with d1 | d2 | ...
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::vector<BigInt> diagonal() const;
};

struct AbelianGroupInfo {
  int betti = 0;
  std::vector<BigInt> torsion;
  friend bool operator==(const AbelianGroupInfo&, const AbelianGroupInfo&) = default;
};

SmithDecomposition smith_normal_form(const IntMatrix& M);

/// Exact determinant of a square integer matrix (fraction-free elimination).
BigInt determinant(const IntMatrix& M);

/// H1 of the mapping torus: Z plus the cokernel of word_matrix(w) - I.
AbelianGroupInfo h1_of_bundle(const MonodromyWord& w);

bool has_two_torsion(const AbelianGroupInfo& g);

/// "Z + Z/4" style rendering.
std::string format_group(const AbelianGroupInfo& g);

}  // namespace ptb
