#pragma once

#include "radsolve/polynomial.hpp"

#include <optional>

namespace radsolve::detail {

/// p is primitive with integer coefficients and has exactly one root in
/// (lo, hi), with p(lo), p(hi) nonzero. Any rational root of p has the form
/// k / |lc(p)|, so bisecting until at most one such lattice point remains
/// decides rationality. Narrows [lo, hi] in place.
std::optional<Rational> find_rational_root(const Polynomial &p, Rational &lo,
                                           Rational &hi);

} // namespace radsolve::detail
