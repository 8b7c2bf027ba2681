#include "ptb/homology.hpp"

#include <sstream>
#include <stdexcept>

namespace ptb {
namespace {

// Smallest nonzero |entry| in the lower-right block starting at (t, t).
bool find_pivot(const IntMatrix& A, Eigen::Index t, Eigen::Index& pr, Eigen::Index& pc) {
  bool found = false;
  BigInt best;
  for (Eigen::Index i = t; i < A.rows(); ++i) {
    for (Eigen::Index j = t; j < A.cols(); ++j) {
      if (sgn(A(i, j)) == 0) continue;
      const BigInt a = abs(A(i, j));
      if (!found || a < best) {
        best = a;
        pr = i;
        pc = j;
        found = true;
      }
    }
  }
  return found;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<BigInt> SmithDecomposition::diagonal() const {
  std::vector<BigInt> d;
  for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& M) {
  const Eigen::Index m = M.rows(), n = M.cols();
  IntMatrix A = M;
  IntMatrix U = IntMatrix::Identity(m, m);
  IntMatrix V = IntMatrix::Identity(n, n);
  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    Eigen::Index pr = 0, pc = 0;
    if (!find_pivot(A, t, pr, pc)) break;
    while (true) {
      A.row(t).swap(A.row(pr));
      U.row(t).swap(U.row(pr));
      A.col(t).swap(A.col(pc));
      V.col(t).swap(V.col(pc));
      bool dirty = false;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (sgn(A(i, t)) == 0) continue;
        const BigInt q = floor_div(A(i, t), A(t, t));
        A.row(i) -= q * A.row(t);
        U.row(i) -= q * U.row(t);
        if (sgn(A(i, t)) != 0) dirty = true;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (sgn(A(t, j)) == 0) continue;
        const BigInt q = floor_div(A(t, j), A(t, t));
        A.col(j) -= q * A.col(t);
        V.col(j) -= q * V.col(t);
        if (sgn(A(t, j)) != 0) dirty = true;
      }
      if (!dirty) {
        // Enforce divisibility of the remaining block by the pivot.
        for (Eigen::Index i = t + 1; i < m && !dirty; ++i) {
          for (Eigen::Index j = t + 1; j < n; ++j) {
            if (!mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) {
              A.row(t) += A.row(i);
              U.row(t) += U.row(i);
              dirty = true;
              break;
            }
          }
        }
      }
      if (!dirty) break;
      // Move the new minimal entry of row/column t into the pivot position.
      pr = t;
      pc = t;
      BigInt best = abs(A(t, t));
      for (Eigen::Index i = t; i < m; ++i) {
        if (sgn(A(i, t)) != 0 && abs(A(i, t)) < best) {
          best = abs(A(i, t));
          pr = i;
          pc = t;
        }
      }
      for (Eigen::Index j = t; j < n; ++j) {
        if (sgn(A(t, j)) != 0 && abs(A(t, j)) < best) {
          best = abs(A(t, j));
          pr = t;
          pc = j;
        }
      }
    }
    if (sgn(A(t, t)) < 0) {
      A.row(t) = -A.row(t);
      U.row(t) = -U.row(t);
    }
  }
  return {U, A, V};
}

BigInt determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("determinant: matrix is not square");
  IntMatrix A = M;
  const Eigen::Index n = A.rows();
  BigInt prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (sgn(A(k, k)) == 0) {
      Eigen::Index r = k + 1;
      while (r < n && sgn(A(r, k)) == 0) ++r;
      if (r == n) return 0;
      A.row(k).swap(A.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) A(i, j) = exact_div(A(i, j) * A(k, k) - A(i, k) * A(k, j), prev);
      A(i, k) = 0;
    }
    prev = A(k, k);
  }
  return n == 0 ? BigInt(1) : BigInt(sign * A(n - 1, n - 1));
}

AbelianGroupInfo h1_of_bundle(const MonodromyWord& w) {
  const IntMatrix2 m = word_matrix(w);
  IntMatrix P(2, 2);
  P << m(0, 0) - 1, m(0, 1), m(1, 0), m(1, 1) - 1;
  const SmithDecomposition s = smith_normal_form(P);
  AbelianGroupInfo g;
  g.betti = 1;
  for (const auto& d : s.diagonal()) {
    if (sgn(d) == 0) {
      ++g.betti;
    } else if (d > 1) {
      g.torsion.push_back(d);
    }
  }
  return g;
}

bool has_two_torsion(const AbelianGroupInfo& g) {
  for (const auto& d : g.torsion) {
    if (mpz_even_p(d.get_mpz_t())) return true;
  }
  return false;
}

std::string format_group(const AbelianGroupInfo& g) {
  std::ostringstream os;
  for (int i = 0; i < g.betti; ++i) os << (i ? " + " : "") << "Z";
  for (const auto& d : g.torsion) os << (g.betti || &d != &g.torsion.front() ? " + " : "") << "Z/" << d.get_str();
  if (g.betti == 0 && g.torsion.empty()) os << "0";
  return os.str();
}

}  // namespace ptb
