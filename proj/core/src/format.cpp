#include "radsolve/format.hpp"

#include <stdexcept>

namespace radsolve {

namespace {

// floor(log10 q) for q > 0.
long decade(const Rational &q) {
  long e = static_cast<long>(q.get_num().get_str().size()) -
           static_cast<long>(q.get_den().get_str().size());
  while (q >= pow10(e + 1))
    ++e;
  while (q < pow10(e))
    --e;
  return e;
}

Integer round_half_even(const Rational &q) {
  Integer f = floor(q);
  Rational frac = q - Rational(f);
  if (frac > Rational(1, 2))
    return f + 1;
  if (frac < Rational(1, 2))
    return f;
  return (f % 2 == 0) ? f : Integer(f + 1);
}

std::string render(bool negative, const std::string &digits, long exponent,
                   int significant) {
  std::string out = negative ? "-" : "";
  if (exponent >= -5 && exponent < significant) {
    if (exponent >= 0) {
      out += digits.substr(0, static_cast<std::size_t>(exponent) + 1);
      auto rest = digits.substr(static_cast<std::size_t>(exponent) + 1);
      if (!rest.empty())
        out += "." + rest;
    } else {
      out += "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') +
             digits;
    }
    return out;
  }
  out += digits.substr(0, 1);
  if (digits.size() > 1)
    out += "." + digits.substr(1);
  out += exponent < 0 ? "e-" : "e+";
  long mag = exponent < 0 ? -exponent : exponent;
  if (mag < 10)
    out += "0";
  out += std::to_string(mag);
  return out;
}

} // namespace

std::string format_approx(const AlgebraicReal &value, int significant) {
  if (significant < 1)
    throw std::invalid_argument("need at least one significant digit");
  Sign s = sign_at(Polynomial::x(), value);
  if (s == Sign::zero)
    return "0." + std::string(static_cast<std::size_t>(significant - 1), '0');
  const bool negative = s == Sign::negative;

  AlgebraicReal a = value;
  Integer scaled;
  long exponent = 0;
  for (;;) {
    Rational lo = negative ? Rational(-a.hi()) : a.lo();
    Rational hi = negative ? Rational(-a.lo()) : a.hi();
    if (lo > 0) {
      long e = decade(lo);
      if (a.is_rational() || decade(hi) == e) {
        Rational scale = pow10(significant - 1 - e);
        Integer n_lo = round_half_even(lo * scale);
        Integer n_hi = round_half_even(hi * scale);
        if (n_lo == n_hi) {
          scaled = n_lo;
          exponent = e;
          break;
        }
      }
    }
    a = a.bisect();
  }
  // Rounding up may carry into a new decade (9.99... -> 10.0...).
  std::string digits = scaled.get_str();
  if (static_cast<int>(digits.size()) > significant) {
    digits.resize(static_cast<std::size_t>(significant));
    ++exponent;
  }
  return render(negative, digits, exponent, significant);
}

std::string format_value(const AlgebraicReal &value) {
  if (value.is_rational())
    return to_string(value.rational_value());
  return "≈" + format_approx(value);
}

} // namespace radsolve
