#include "radsolve/rational_function.hpp"

#include "radsolve/errors.hpp"

#include <stdexcept>

namespace radsolve {

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(Rational(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw std::domain_error("rational function with zero denominator");
  reduce();
}

RationalFunction RationalFunction::constant(const Rational &c) {
  return RationalFunction(Polynomial::constant(c));
}

RationalFunction RationalFunction::x() {
  return RationalFunction(Polynomial::x());
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  Rational lc = den_.leading();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::constant_value() const {
  if (!is_constant())
    throw std::logic_error("rational function is not constant");
  return num_.coefficient(0);
}

Rational RationalFunction::operator()(const Rational &at) const {
  Rational d = den_(at);
  if (d == 0)
    throw PoleAt(radsolve::to_string(at));
  return num_(at) / d;
}

double RationalFunction::evaluate(double at) const {
  return num_.evaluate(at) / den_.evaluate(at);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction &RationalFunction::operator+=(const RationalFunction &rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  reduce();
  return *this;
}

RationalFunction &RationalFunction::operator-=(const RationalFunction &rhs) {
  return *this += -rhs;
}

RationalFunction &RationalFunction::operator*=(const RationalFunction &rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

RationalFunction &RationalFunction::operator/=(const RationalFunction &rhs) {
  if (rhs.is_zero())
    throw std::domain_error("division by the zero rational function");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  reduce();
  return *this;
}

RationalFunction RationalFunction::pow(unsigned exponent) const {
  return RationalFunction(num_.pow(exponent), den_.pow(exponent));
}

std::string RationalFunction::to_string() const {
  if (is_polynomial())
    return "(" + num_.to_string() + ")";
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace radsolve
