#include "radsolve/algebraic.hpp"

#include "radsolve/errors.hpp"
#include "radsolve/roots.hpp"
#include "lattice.hpp"

#include <stdexcept>

namespace radsolve {

Sign to_sign(int s) {
  return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

AlgebraicReal::AlgebraicReal(const Rational &value)
    : defining_(Polynomial::linear_root(value).primitive()), lo_(value),
      hi_(value) {}

AlgebraicReal::AlgebraicReal(Unchecked, Polynomial defining, Rational lo,
                             Rational hi, int sign_at_lo)
    : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)),
      sign_lo_(sign_at_lo) {}

AlgebraicReal AlgebraicReal::from_interval(Polynomial defining, Rational lo,
                                           Rational hi) {
  if (defining.degree() < 1)
    throw std::invalid_argument("defining polynomial must be nonconstant");
  if (!(lo < hi))
    throw std::invalid_argument("isolating interval must satisfy lo < hi");
  defining = defining.primitive();
  if (gcd(defining, defining.derivative()).degree() > 0)
    throw std::invalid_argument("defining polynomial is not square-free");
  int slo = defining.sign_at(lo);
  int shi = defining.sign_at(hi);
  if (slo == 0 || shi == 0 || slo == shi)
    throw std::invalid_argument("defining polynomial must change sign strictly "
                                "inside the interval");
  if (SturmSequence(defining).count(lo, hi) != 1)
    throw std::invalid_argument("interval does not isolate a single root");
  if (auto root = detail::find_rational_root(defining, lo, hi))
    return AlgebraicReal(*root);
  int sign_lo = defining.sign_at(lo);
  return AlgebraicReal(Unchecked{}, std::move(defining), std::move(lo),
                       std::move(hi), sign_lo);
}

const Rational &AlgebraicReal::rational_value() const {
  if (!is_rational())
    throw std::logic_error("algebraic number is irrational");
  return lo_;
}

AlgebraicReal AlgebraicReal::bisect() const {
  if (is_rational())
    return *this;
  Rational mid = (lo_ + hi_) / 2;
  int s = defining_.sign_at(mid);
  if (s == 0) // unreachable for a valid irrational value
    return AlgebraicReal(mid);
  if (s == sign_lo_)
    return AlgebraicReal(Unchecked{}, defining_, mid, hi_, sign_lo_);
  return AlgebraicReal(Unchecked{}, defining_, lo_, mid, sign_lo_);
}

double AlgebraicReal::to_double() const {
  if (is_rational())
    return lo_.get_d();
  Rational scale = abs(lo_) > abs(hi_) ? Rational(abs(lo_)) : Rational(abs(hi_));
  if (scale < 1)
    scale = 1;
  Rational target = scale / Rational(Integer(1) << 62);
  AlgebraicReal r = refine(*this, target);
  return Rational((r.lo_ + r.hi_) / 2).get_d();
}

std::string AlgebraicReal::to_string() const {
  if (is_rational())
    return radsolve::to_string(lo_);
  return "root of " + defining_.to_string() + " in [" +
         radsolve::to_string(lo_) + ", " + radsolve::to_string(hi_) + "]";
}

AlgebraicReal refine(const AlgebraicReal &alpha, const Rational &width) {
  if (width <= 0)
    throw std::invalid_argument("refinement width must be positive");
  AlgebraicReal r = alpha;
  while (r.width() > width)
    r = r.bisect();
  return r;
}

Sign sign_at(const Polynomial &p, const AlgebraicReal &alpha) {
  if (alpha.is_rational())
    return to_sign(p.sign_at(alpha.rational_value()));
  if (p.is_zero())
    return Sign::zero;
  if (p.degree() == 0)
    return to_sign(sign(p.leading()));
  Polynomial common = gcd(p, alpha.defining());
  if (common.degree() > 0 &&
      SturmSequence(common).count(alpha.lo(), alpha.hi()) > 0)
    return Sign::zero;
  SturmSequence sturm(square_free(p));
  AlgebraicReal a = alpha;
  while (sturm.count(a.lo(), a.hi()) != 0)
    a = a.bisect();
  return to_sign(p.sign_at(a.hi()));
}

Sign sign_at(const RationalFunction &p, const AlgebraicReal &alpha) {
  Sign d = sign_at(p.den(), alpha);
  if (d == Sign::zero)
    throw PoleAt(alpha.to_string());
  Sign n = sign_at(p.num(), alpha);
  return to_sign(static_cast<int>(n) * static_cast<int>(d));
}

namespace {

std::strong_ordering order_of(int c) {
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

// r against an irrational beta.
std::strong_ordering compare_rational(const Rational &r,
                                      const AlgebraicReal &beta) {
  if (r <= beta.lo())
    return std::strong_ordering::less;
  if (r >= beta.hi())
    return std::strong_ordering::greater;
  int s = beta.defining().sign_at(r);
  int slo = beta.defining().sign_at(beta.lo());
  // Same sign as at lo: the root lies to the right of r.
  return s == slo ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering flip(std::strong_ordering o) {
  if (o == std::strong_ordering::less)
    return std::strong_ordering::greater;
  if (o == std::strong_ordering::greater)
    return std::strong_ordering::less;
  return o;
}

} // namespace

std::strong_ordering compare(const AlgebraicReal &a, const AlgebraicReal &b) {
  if (a.is_rational() && b.is_rational())
    return order_of(cmp(a.rational_value(), b.rational_value()));
  if (a.is_rational())
    return compare_rational(a.rational_value(), b);
  if (b.is_rational())
    return flip(compare_rational(b.rational_value(), a));

  if (a.defining() == b.defining() && a.lo() == b.lo() && a.hi() == b.hi())
    return std::strong_ordering::equal;
  if (a.hi() <= b.lo())
    return std::strong_ordering::less;
  if (b.hi() <= a.lo())
    return std::strong_ordering::greater;

  Polynomial common = gcd(a.defining(), b.defining());
  if (common.degree() > 0) {
    const Rational &lo = a.lo() > b.lo() ? a.lo() : b.lo();
    const Rational &hi = a.hi() < b.hi() ? a.hi() : b.hi();
    if (SturmSequence(common).count(lo, hi) > 0)
      return std::strong_ordering::equal;
  }
  AlgebraicReal x = a;
  AlgebraicReal y = b;
  for (;;) {
    x = x.bisect();
    y = y.bisect();
    if (x.hi() <= y.lo())
      return std::strong_ordering::less;
    if (y.hi() <= x.lo())
      return std::strong_ordering::greater;
  }
}

Rational rational_between(const AlgebraicReal &a, const AlgebraicReal &b) {
  AlgebraicReal x = a;
  AlgebraicReal y = b;
  while (!(x.hi() < y.lo())) {
    if (x.is_rational() && y.is_rational())
      throw std::invalid_argument("rational_between requires a < b");
    x = x.bisect();
    y = y.bisect();
  }
  return (x.hi() + y.lo()) / 2;
}

Rational rational_below(const AlgebraicReal &alpha) { return alpha.lo() - 1; }

Rational rational_above(const AlgebraicReal &alpha) { return alpha.hi() + 1; }

} // namespace radsolve
