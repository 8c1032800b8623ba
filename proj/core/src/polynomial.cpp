#include "radsolve/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace radsolve {

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients)
    : coeffs_(coefficients) {
  trim();
}

Polynomial Polynomial::constant(const Rational &c) { return Polynomial({c}); }

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

Polynomial Polynomial::linear_root(const Rational &r) {
  return Polynomial({Rational(-r), Rational(1)});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::operator()(const Rational &at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

double Polynomial::evaluate(double at) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * at + it->get_d();
  return acc;
}

int Polynomial::sign_at(const Rational &at) const { return sign((*this)(at)); }

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1)
    return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero())
    return {};
  Polynomial r = *this;
  Rational lc = leading();
  for (auto &c : r.coeffs_)
    c /= lc;
  return r;
}

Polynomial Polynomial::primitive_signed() const {
  if (is_zero())
    return {};
  Integer den_lcm(1);
  for (const auto &c : coeffs_)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer content(0);
  std::vector<Integer> ints;
  ints.reserve(coeffs_.size());
  for (const auto &c : coeffs_) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto &v : ints)
    out.emplace_back(Integer(v / content));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::primitive() const {
  Polynomial p = primitive_signed();
  if (!p.is_zero() && p.leading() < 0)
    return -p;
  return p;
}

std::vector<Integer> Polynomial::integer_coefficients() const {
  std::vector<Integer> out;
  for (const auto &c : primitive().coeffs_)
    out.push_back(c.get_num());
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
    coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
    coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial &Polynomial::operator*=(const Polynomial &rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial &Polynomial::operator*=(const Rational &rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto &c : coeffs_)
    c *= rhs;
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(Rational(1));
  Polynomial b = *this;
  while (exponent) {
    if (exponent & 1u)
      result *= b;
    exponent >>= 1u;
    if (exponent)
      b *= b;
  }
  return result;
}

namespace {

std::string monomial(std::size_t k) {
  if (k == 0)
    return "";
  if (k == 1)
    return "x";
  return "x^" + std::to_string(k);
}

} // namespace

std::string Polynomial::to_string() const {
  if (is_zero())
    return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational &c = coeffs_[i];
    if (c == 0)
      continue;
    Rational mag = abs(c);
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (i == 0)
      out += radsolve::to_string(mag);
    else if (mag == 1)
      out += monomial(i);
    else
      out += radsolve::to_string(mag) + "*" + monomial(i);
  }
  return out;
}

Polynomial poly_arith(const Polynomial &a, const Polynomial &b, Arith op) {
  switch (op) {
  case Arith::add:
    return a + b;
  case Arith::sub:
    return a - b;
  case Arith::mul:
    return a * b;
  }
  throw std::logic_error("unknown arithmetic operation");
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial &a,
                                         const Polynomial &b) {
  if (b.is_zero())
    throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree())
    return {Polynomial(), a};
  std::vector<Rational> rem = a.coefficients();
  const auto &den = b.coefficients();
  const std::size_t db = den.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  const Rational &lc = den.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + db] / lc;
    if (q == 0)
      continue;
    for (std::size_t j = 0; j <= db; ++j)
      rem[k + j] -= q * den[j];
    quot[k] = std::move(q);
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial &a, const Polynomial &b) {
  Polynomial x = a.primitive();
  Polynomial y = b.primitive();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial square_free(const Polynomial &p) {
  if (p.degree() <= 0)
    return p.primitive();
  Polynomial g = gcd(p, p.derivative());
  return divmod(p, g).first.primitive();
}

} // namespace radsolve
