#pragma once

#include "radsolve/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace radsolve {

/// Dense univariate polynomial over the rationals.
///
/// Coefficients are stored lowest degree first. The zero polynomial is the
/// empty coefficient list; every other value has a nonzero leading
/// coefficient. All operations return canonical values.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational &c);
  /// The monomial x.
  static Polynomial x();
  /// x - r
  static Polynomial linear_root(const Rational &r);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational> &coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^k (zero beyond the degree).
  Rational coefficient(std::size_t k) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;

  Rational operator()(const Rational &at) const;
  double evaluate(double at) const;
  int sign_at(const Rational &at) const;

  Polynomial derivative() const;
  /// Scaled to leading coefficient 1; zero stays zero.
  Polynomial monic() const;
  /// Positive rational multiple with coprime integer coefficients and a
  /// positive leading coefficient.
  Polynomial primitive() const;
  /// Same as primitive() but keeps the sign of the leading coefficient.
  Polynomial primitive_signed() const;
  /// Integer coefficients of primitive(); meaningful for nonzero values.
  std::vector<Integer> integer_coefficients() const;

  Polynomial operator-() const;
  Polynomial &operator+=(const Polynomial &rhs);
  Polynomial &operator-=(const Polynomial &rhs);
  Polynomial &operator*=(const Polynomial &rhs);
  Polynomial &operator*=(const Rational &rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial &b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational &b) { return a *= b; }
  friend Polynomial operator*(const Rational &a, Polynomial b) { return b *= a; }

  Polynomial pow(unsigned exponent) const;

  friend bool operator==(const Polynomial &, const Polynomial &) = default;

  /// Human-readable and parseable by the equation grammar, e.g. "3/2*x^2-x+1".
  std::string to_string() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

enum class Arith { add, sub, mul };

/// Exact a (op) b in canonical form.
Polynomial poly_arith(const Polynomial &a, const Polynomial &b, Arith op);

/// Euclidean division over Q; throws std::domain_error on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial &a,
                                         const Polynomial &b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial &a, const Polynomial &b);
/// p / gcd(p, p'), primitive. Same distinct roots as p, all simple.
Polynomial square_free(const Polynomial &p);

} // namespace radsolve
