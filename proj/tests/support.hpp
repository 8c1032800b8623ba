#pragma once

#include "radsolve/algebraic.hpp"
#include "radsolve/equation.hpp"
#include "radsolve/expr.hpp"
#include "radsolve/realset.hpp"
#include "radsolve/parser.hpp"
#include "radsolve/roots.hpp"

#include <ostream>
#include <random>
#include <string_view>

namespace radsolve {

inline void PrintTo(const Expr &e, std::ostream *os) { *os << to_string(e); }
inline void PrintTo(const RealSet &s, std::ostream *os) { *os << s.to_string(); }
inline void PrintTo(const RadicalEquation &eq, std::ostream *os) { *os << render(eq); }
inline void PrintTo(Form form, std::ostream *os) { *os << form_name(form); }

} // namespace radsolve

namespace radsolve::test {

inline RationalFunction rf(std::string_view text) {
  return to_rational_function(parse_expression(text));
}

inline Polynomial poly(std::string_view text) { return rf(text).num(); }

inline Rational q(std::string_view text) { return parse_rational(text); }

/// The k-th real root (ascending) of p.
inline AlgebraicReal root_of(std::string_view p, std::size_t k) {
  return isolate_real_roots(poly(p)).at(k);
}

/// Deterministic draws for property tests.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long between(long lo, long hi) {
    return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long num_bound, long den_bound) {
    Rational r(between(-num_bound, num_bound), between(1, den_bound));
    r.canonicalize();
    return r;
  }

  Polynomial polynomial(int max_degree, long bound = 9) {
    std::vector<Rational> c;
    const int d = static_cast<int>(between(0, max_degree));
    for (int i = 0; i <= d; ++i)
      c.emplace_back(between(-bound, bound));
    return Polynomial(std::move(c));
  }

private:
  std::mt19937_64 gen_;
};

} // namespace radsolve::test
