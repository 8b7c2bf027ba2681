#pragma once

#include <optional>
#include <vector>

#include "ptb/unipoly.hpp"

namespace ptb {

/// Closed rational interval; lo == hi marks an exactly known rational root.
struct RationalInterval {
  BigRational lo;
  BigRational hi;

  bool is_point() const { return lo == hi; }
  BigRational width() const { return hi - lo; }
  BigRational midpoint() const { return (lo + hi) / 2; }
};

/// Sturm chain of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly& f);

  /// Sign variations at a point; nullopt on the left means -inf, on the right +inf.
  int variations_at(const BigRational& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;

  const std::vector<UniPoly>& chain() const { return chain_; }

 private:
  std::vector<UniPoly> chain_;
};

/// Number of real roots of a squarefree f in (lo, hi]; a missing endpoint is infinite.
/// Throws std::invalid_argument when f is not squarefree.
int sturm_count(const UniPoly& f, const std::optional<BigRational>& lo = std::nullopt,
                const std::optional<BigRational>& hi = std::nullopt);

/// Disjoint isolating intervals for the real roots of a squarefree f, in
/// increasing order, each of width at most 1/2. Open intervals have dyadic
/// endpoints that are not roots.
std::vector<RationalInterval> isolate_real_roots(const UniPoly& f);

/// Bisect an isolating interval of a squarefree f until its width is at most `width`.
RationalInterval refine_root(const UniPoly& f, RationalInterval iv, const BigRational& width);

}  // namespace ptb
