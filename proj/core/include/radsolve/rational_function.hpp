#pragma once

#include "radsolve/polynomial.hpp"

#include <string>

namespace radsolve {

/// Reduced quotient num/den of polynomials over Q.
///
/// Invariants: den is monic (hence nonzero) and gcd(num, den) = 1. The zero
/// function is 0/1. Removable singularities disappear on reduction, so the
/// domain of a value is the reals minus the real roots of den.
class RationalFunction {
public:
  RationalFunction() : den_(Polynomial::constant(Rational(1))) {}
  RationalFunction(Polynomial num); // NOLINT: implicit by design of the algebra
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction constant(const Rational &c);
  static RationalFunction x();

  const Polynomial &num() const noexcept { return num_; }
  const Polynomial &den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  bool is_constant() const noexcept {
    return is_polynomial() && num_.is_constant();
  }
  /// Value of a constant function; precondition is_constant().
  Rational constant_value() const;

  /// Throws PoleAt when den(at) = 0.
  Rational operator()(const Rational &at) const;
  double evaluate(double at) const;

  RationalFunction operator-() const;
  RationalFunction &operator+=(const RationalFunction &rhs);
  RationalFunction &operator-=(const RationalFunction &rhs);
  RationalFunction &operator*=(const RationalFunction &rhs);
  /// Throws std::domain_error when rhs is the zero function.
  RationalFunction &operator/=(const RationalFunction &rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction &b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction &b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction &b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction &b) { return a /= b; }

  RationalFunction pow(unsigned exponent) const;

  friend bool operator==(const RationalFunction &, const RationalFunction &) = default;

  /// Grammar-compatible text: "(num)" or "(num)/(den)".
  std::string to_string() const;

private:
  void reduce();
  Polynomial num_;
  Polynomial den_;
};

} // namespace radsolve
