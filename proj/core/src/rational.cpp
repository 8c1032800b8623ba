#include "radsolve/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace radsolve {

int sign(const Rational &q) { return sgn(q); }
int sign(const Integer &z) { return sgn(z); }

std::string to_string(const Rational &q) { return q.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational: " + std::string(text));
    Integer d{std::string(den), 10};
    if (d == 0)
      throw std::invalid_argument("zero denominator: " + std::string(text));
    value = Rational(Integer(std::string(num), 10), d);
    value.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) ||
        (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("malformed decimal: " + std::string(text));
    std::string digits = std::string(whole) + std::string(frac);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Rational(Integer(digits, 10), scale);
    value.canonicalize();
  } else {
    if (!all_digits(s))
      throw std::invalid_argument("malformed rational: " + std::string(text));
    value = Rational(Integer(std::string(s), 10));
  }
  return negative ? Rational(-value) : value;
}

Rational pow(const Rational &base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent) {
    if (exponent & 1u)
      result *= b;
    exponent >>= 1u;
    if (exponent)
      b *= b;
  }
  return result;
}

Integer floor(const Rational &q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational &q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational pow10(long k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? Rational(Integer(1), p) : Rational(p);
}

} // namespace radsolve
