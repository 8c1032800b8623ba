#pragma once

#include "radsolve/algebraic.hpp"
#include "radsolve/polynomial.hpp"

#include <vector>

namespace radsolve {

/// Sturm chain of a square-free polynomial.
///
/// variations(a) - variations(b) is the number of distinct real roots in the
/// half-open interval (a, b].
class SturmSequence {
public:
  explicit SturmSequence(const Polynomial &square_free_poly);

  int variations(const Rational &at) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;
  /// Distinct roots in (lo, hi].
  int count(const Rational &lo, const Rational &hi) const;
  int count_all() const;

  const std::vector<Polynomial> &chain() const noexcept { return chain_; }

private:
  std::vector<Polynomial> chain_;
};

/// 1 + max |a_i / a_n|: every real root lies strictly inside (-B, B).
Rational cauchy_bound(const Polynomial &p);

/// Number of distinct real roots of p in (lo, hi]. p must be nonzero.
int count_roots(const Polynomial &p, const Rational &lo, const Rational &hi);

/// One AlgebraicReal per distinct real root, ascending, with pairwise
/// disjoint isolating intervals. Rational roots come back as point intervals.
/// Throws ZeroPolynomial for p = 0.
std::vector<AlgebraicReal> isolate_real_roots(const Polynomial &p);

} // namespace radsolve
