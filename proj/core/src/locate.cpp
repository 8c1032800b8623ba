#include "radsolve/errors.hpp"
#include "radsolve/solver.hpp"

namespace radsolve {

const char *to_string(Location location) {
  switch (location) {
  case Location::left_of_both:
    return "left_of_both";
  case Location::between:
    return "between";
  case Location::right_of_both:
    return "right_of_both";
  case Location::at_root:
    return "at_root";
  }
  return "?";
}

Location locate_vs_quadratic(const Polynomial &q, const Rational &xi) {
  if (q.degree() != 2)
    throw DegenerateQuadratic("expected a polynomial of degree 2, got degree " +
                              std::to_string(q.degree()));
  Polynomial p = q.leading() < 0 ? -q : q;
  const Rational a = p.coefficient(2);
  const Rational b = p.coefficient(1);
  const Rational c = p.coefficient(0);
  if (b * b - 4 * a * c <= 0)
    throw DegenerateQuadratic("quadratic has no two distinct real roots");

  const int s = p.sign_at(xi);
  if (s == 0)
    return Location::at_root;
  if (s < 0)
    return Location::between;
  const Rational vertex = -b / (2 * a);
  return xi < vertex ? Location::left_of_both : Location::right_of_both;
}

} // namespace radsolve
