#pragma once

#include "radsolve/polynomial.hpp"
#include "radsolve/rational_function.hpp"

#include <compare>
#include <string>

namespace radsolve {

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

Sign to_sign(int s);

/// Exact real algebraic number.
///
/// Rational numbers carry the defining polynomial x - r and the point
/// interval [r, r]. Irrational numbers carry a primitive square-free defining
/// polynomial and an interval [lo, hi], lo < hi, holding exactly one of its
/// roots (the number itself); the defining polynomial has opposite, nonzero
/// signs at lo and hi. Values produced by isolate_real_roots() additionally
/// use defining polynomials free of rational roots.
class AlgebraicReal {
public:
  AlgebraicReal() : AlgebraicReal(Rational(0)) {}
  AlgebraicReal(const Rational &value); // NOLINT: every rational is algebraic
  AlgebraicReal(long value) : AlgebraicReal(Rational(value)) {} // NOLINT

  /// Validating factory. Throws std::invalid_argument unless `defining` is
  /// square-free with exactly one root in [lo, hi] and nonzero at both ends.
  /// A rational root comes back as a point value.
  static AlgebraicReal from_interval(Polynomial defining, Rational lo,
                                     Rational hi);

  bool is_rational() const noexcept { return lo_ == hi_; }
  /// Precondition: is_rational().
  const Rational &rational_value() const;

  const Polynomial &defining() const noexcept { return defining_; }
  const Rational &lo() const noexcept { return lo_; }
  const Rational &hi() const noexcept { return hi_; }
  Rational width() const { return hi_ - lo_; }

  /// One bisection step; rational values are returned unchanged.
  AlgebraicReal bisect() const;

  /// Midpoint of the interval after refining to relative width ~1e-18.
  double to_double() const;

  /// "r" for rationals, "root of P in [lo, hi]" otherwise.
  std::string to_string() const;

private:
  struct Unchecked {};
  AlgebraicReal(Unchecked, Polynomial defining, Rational lo, Rational hi,
                int sign_at_lo);

  Polynomial defining_;
  Rational lo_;
  Rational hi_;
  int sign_lo_ = 0; // sign of defining_ at lo_, irrational values only

  friend class RootIsolator;
};

/// Same number, isolating interval no wider than `width` (> 0).
AlgebraicReal refine(const AlgebraicReal &alpha, const Rational &width);

/// Exact sign of p(alpha).
Sign sign_at(const Polynomial &p, const AlgebraicReal &alpha);
/// Exact sign of p(alpha); throws PoleAt when den(p) vanishes at alpha.
Sign sign_at(const RationalFunction &p, const AlgebraicReal &alpha);

/// Exact total order.
std::strong_ordering compare(const AlgebraicReal &a, const AlgebraicReal &b);

inline std::strong_ordering operator<=>(const AlgebraicReal &a,
                                        const AlgebraicReal &b) {
  return compare(a, b);
}
inline bool operator==(const AlgebraicReal &a, const AlgebraicReal &b) {
  return compare(a, b) == std::strong_ordering::equal;
}

/// A rational q with a < q < b. Precondition: a < b.
Rational rational_between(const AlgebraicReal &a, const AlgebraicReal &b);
/// A rational strictly below / above alpha.
Rational rational_below(const AlgebraicReal &alpha);
Rational rational_above(const AlgebraicReal &alpha);

} // namespace radsolve
