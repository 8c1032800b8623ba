#include "radsolve/oracle.hpp"

#include "radsolve/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace radsolve {

ComplexVal principal_sqrt(ComplexVal z) {
  if (z.imag() == 0.0 && z.real() < 0.0)
    return {0.0, std::sqrt(-z.real())};
  return std::sqrt(z);
}

namespace {

ComplexVal checked(ComplexVal v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw NonFinite("non-finite value during evaluation");
  return v;
}

constexpr double pole_threshold = 1e-15;

} // namespace

ComplexVal eval_side(const Expr &e, double x) {
  using K = Expr::Kind;
  switch (e.kind) {
  case K::constant:
    return checked(e.value.get_d());
  case K::variable:
    return x;
  case K::parameter:
    throw std::invalid_argument("unbound parameter '" + e.name + "'");
  case K::add:
    return checked(eval_side(e.args[0], x) + eval_side(e.args[1], x));
  case K::sub:
    return checked(eval_side(e.args[0], x) - eval_side(e.args[1], x));
  case K::neg:
    return -eval_side(e.args[0], x);
  case K::mul:
    return checked(eval_side(e.args[0], x) * eval_side(e.args[1], x));
  case K::div: {
    ComplexVal d = eval_side(e.args[1], x);
    if (std::abs(d) < pole_threshold)
      throw PoleEncountered("division by a value of magnitude below 1e-15");
    return checked(eval_side(e.args[0], x) / d);
  }
  case K::pow: {
    ComplexVal base = eval_side(e.args[0], x);
    ComplexVal acc = 1.0;
    for (unsigned i = 0; i < e.exponent; ++i)
      acc = checked(acc * base);
    return acc;
  }
  case K::sqrt:
    return principal_sqrt(eval_side(e.args[0], x));
  }
  throw std::logic_error("unknown expression node");
}

namespace {

/// Rational function with double coefficients, for fast grid evaluation.
struct NumericRF {
  std::vector<double> num;
  std::vector<double> den;

  explicit NumericRF(const RationalFunction &r) {
    for (const auto &c : r.num().coefficients())
      num.push_back(c.get_d());
    for (const auto &c : r.den().coefficients())
      den.push_back(c.get_d());
  }

  static double horner(const std::vector<double> &p, double x) {
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  double operator()(double x) const {
    if (den.size() <= 1)
      return horner(num, x) / (den.empty() ? 1.0 : den[0]);
    double d = horner(den, x);
    if (std::abs(d) < pole_threshold)
      throw PoleEncountered("pole of a payload function");
    return horner(num, x) / d;
  }
};

/// lhs/rhs of the canonical shape from already evaluated payload values.
/// Radicands in [-clamp, 0) are read as zero.
Evaluation assemble(Form form, const std::vector<double> &v, double clamp = 0.0) {
  auto r = [clamp](double a) {
    return principal_sqrt(ComplexVal(a < 0.0 && a >= -clamp ? 0.0 : a));
  };
  Evaluation ev;
  switch (form) {
  case Form::roots:
    ev = {r(v[0]), r(v[1]), {v[0], v[1]}};
    break;
  case Form::b:
    ev = {r(v[0]), v[1], {v[0]}};
    break;
  case Form::d:
    ev = {r(v[0]) + r(v[1]), v[2], {v[0], v[1]}};
    break;
  case Form::e:
    ev = {r(v[0]) + r(v[1]), r(v[2]), {v[0], v[1], v[2]}};
    break;
  case Form::f:
    ev = {r(v[0]) - r(v[1]), v[2], {v[0], v[1]}};
    break;
  case Form::hf:
    ev = {v[2] * r(v[0]), v[1], {v[0]}};
    break;
  case Form::sum_zero: {
    ComplexVal sum = 0.0;
    for (double a : v)
      sum += r(a);
    ev = {sum, 0.0, v};
    break;
  }
  }
  for (double a : v)
    if (!std::isfinite(a))
      throw NonFinite("non-finite payload value");
  return ev;
}

class CompiledEquation {
public:
  explicit CompiledEquation(const RadicalEquation &eq) : form_(eq.form) {
    for (const auto &p : eq.functions())
      payload_.emplace_back(p);
    values_.resize(payload_.size());
  }

  Evaluation at(double x) const {
    std::vector<double> v;
    v.reserve(payload_.size());
    for (const auto &p : payload_)
      v.push_back(p(x));
    return assemble(form_, v);
  }

  /// Real residual; NaN outside the feasible region or at a pole.
  double residual(double x) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    try {
      for (std::size_t i = 0; i < payload_.size(); ++i)
        values_[i] = payload_[i](x);
    } catch (const Error &) {
      return nan;
    }
    const double *v = values_.data();
    auto root = [](double a) { return a < 0.0 ? nan : std::sqrt(a); };
    double r = nan;
    switch (form_) {
    case Form::roots:
      r = root(v[0]) - root(v[1]);
      break;
    case Form::b:
      r = root(v[0]) - v[1];
      break;
    case Form::d:
      r = root(v[0]) + root(v[1]) - v[2];
      break;
    case Form::e:
      r = root(v[0]) + root(v[1]) - root(v[2]);
      break;
    case Form::f:
      r = root(v[0]) - root(v[1]) - v[2];
      break;
    case Form::hf:
      r = v[2] * root(v[0]) - v[1];
      break;
    case Form::sum_zero:
      r = 0.0;
      for (double a : values_)
        r += root(a);
      break;
    }
    return std::isfinite(r) ? r : nan;
  }

private:
  Form form_;
  std::vector<NumericRF> payload_;
  std::vector<double> values_;
};

} // namespace

Evaluation evaluate(const RadicalEquation &eq, double x) {
  return CompiledEquation(eq).at(x);
}

namespace {

std::vector<double> exact_payload(const RadicalEquation &eq, const Rational &x) {
  std::vector<double> v;
  for (const auto &p : eq.functions()) {
    try {
      v.push_back(p(x).get_d());
    } catch (const PoleAt &) {
      throw PoleEncountered("pole of a payload function at " + to_string(x));
    }
  }
  return v;
}

} // namespace

Evaluation evaluate(const RadicalEquation &eq, const Rational &x) {
  return assemble(eq.form, exact_payload(eq, x));
}

const char *to_string(OracleVerdict verdict) {
  switch (verdict) {
  case OracleVerdict::strong:
    return "strong";
  case OracleVerdict::formal_only:
    return "formal_only";
  case OracleVerdict::neither:
    return "neither";
  }
  return "?";
}

VerifyResult verify_detail(const RadicalEquation &eq, const AlgebraicReal &alpha,
                           double tol) {
  if (!(tol > 0))
    throw std::invalid_argument("tolerance must be positive");
  const AlgebraicReal fine = refine(alpha, Rational(1) / pow10(40));
  const Rational mid = (fine.lo() + fine.hi()) / 2;
  const std::vector<double> payload = exact_payload(eq, mid);
  const Evaluation ev = assemble(eq.form, payload);

  VerifyResult out;
  out.complex_residual = ev.complex_residual();
  out.min_radicand = ev.radicands.empty()
                         ? 0.0
                         : *std::min_element(ev.radicands.begin(), ev.radicands.end());
  if (out.min_radicand >= -tol) {
    const Evaluation real = assemble(eq.form, payload, tol);
    out.real_residual = std::abs(real.lhs - real.rhs);
    out.verdict = out.real_residual < tol ? OracleVerdict::strong : OracleVerdict::neither;
  } else {
    out.real_residual = std::numeric_limits<double>::infinity();
    out.verdict = out.complex_residual < tol ? OracleVerdict::formal_only
                                             : OracleVerdict::neither;
  }
  return out;
}

OracleVerdict verify(const RadicalEquation &eq, const AlgebraicReal &alpha, double tol) {
  return verify_detail(eq, alpha, tol).verdict;
}

ScanResult scan(const RadicalEquation &eq, double lo, double hi, double step) {
  if (!(lo < hi) || !(step > 0))
    throw std::invalid_argument("scan needs lo < hi and step > 0");
  constexpr double zero_tol = 1e-8;
  constexpr double bracket_width = 1e-10;
  constexpr double accept_tol = 1e-6;

  CompiledEquation ce(eq);
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  ScanResult out;

  std::vector<double> hits;
  long run_start = -1;
  auto close_run = [&](long end) {
    if (run_start < 0)
      return;
    if (end - run_start >= 2)
      out.intervals.emplace_back(lo + run_start * step, lo + end * step);
    else
      for (long i = run_start; i <= end; ++i)
        hits.push_back(lo + i * step);
    run_start = -1;
  };

  double prev_x = lo;
  double prev_r = std::numeric_limits<double>::quiet_NaN();
  for (long i = 0; i <= n; ++i) {
    const double x = lo + i * step;
    const double r = ce.residual(x);
    if (!std::isnan(r) && std::abs(r) < zero_tol) {
      if (run_start < 0)
        run_start = i;
    } else {
      close_run(i - 1);
    }
    if (!std::isnan(r) && !std::isnan(prev_r) && std::abs(r) >= zero_tol &&
        std::abs(prev_r) >= zero_tol && (r > 0) != (prev_r > 0)) {
      double a = prev_x;
      double b = x;
      double ra = prev_r;
      bool ok = true;
      while (b - a > bracket_width) {
        const double m = 0.5 * (a + b);
        const double rm = ce.residual(m);
        if (std::isnan(rm)) {
          ok = false;
          break;
        }
        if (rm == 0.0) {
          a = b = m;
          break;
        }
        if ((rm > 0) == (ra > 0)) {
          a = m;
          ra = rm;
        } else {
          b = m;
        }
      }
      const double m = 0.5 * (a + b);
      const double rm = ce.residual(m);
      if (ok && !std::isnan(rm) && std::abs(rm) < accept_tol)
        hits.push_back(m);
    }
    prev_x = x;
    prev_r = r;
  }
  close_run(n);

  std::sort(hits.begin(), hits.end());
  for (double h : hits)
    if (out.solutions.empty() || h - out.solutions.back() > 2 * step)
      out.solutions.push_back(h);
  return out;
}

double distance(const RealSet &s, double x) {
  double best = std::numeric_limits<double>::infinity();
  for (const Component &c : s.components()) {
    const double lo = c.lo.is_finite() ? c.lo.value.to_double()
                                       : -std::numeric_limits<double>::infinity();
    const double hi = c.hi.is_finite() ? c.hi.value.to_double()
                                       : std::numeric_limits<double>::infinity();
    double d = 0.0;
    if (x < lo)
      d = lo - x;
    else if (x > hi)
      d = x - hi;
    best = std::min(best, d);
  }
  return best;
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Draw {
public:
  explicit Draw(std::uint64_t seed) : rng_(splitmix64(seed)) {}

  /// Uniform-ish integer in [lo, hi]; modulo reduction keeps results portable.
  long between(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational coefficient(bool nonzero) {
    long p = nonzero ? between(1, 9) * (between(0, 1) ? 1 : -1) : between(-9, 9);
    return Rational(p, between(1, 9));
  }

  Polynomial polynomial(int max_degree) {
    const int d = static_cast<int>(between(0, max_degree));
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i)
      c.push_back(coefficient(i == d && d > 0));
    for (auto &q : c)
      q.canonicalize();
    return Polynomial(std::move(c));
  }

private:
  std::mt19937_64 rng_;
};

} // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(splitmix64(base) ^ (index * 0xd1b54a32d192ed03ULL));
}

RadicalEquation random_equation(std::uint64_t seed, Form form, int max_degree) {
  if (max_degree < 0 || max_degree > 3)
    throw std::invalid_argument("max_degree must lie in [0, 3]");
  Draw d(seed);
  auto p = [&] { return RationalFunction(d.polynomial(max_degree)); };
  switch (form) {
  case Form::roots: {
    auto f = p();
    return RadicalEquation::roots(f, p());
  }
  case Form::b: {
    auto f = p();
    return RadicalEquation::form_b(f, p());
  }
  case Form::d: {
    auto f = p();
    auto g = p();
    return RadicalEquation::form_d(f, g, p());
  }
  case Form::e: {
    auto f = p();
    auto g = p();
    return RadicalEquation::form_e(f, g, p());
  }
  case Form::f: {
    auto f = p();
    auto g = p();
    return RadicalEquation::form_f(f, g, p());
  }
  case Form::hf: {
    auto h = p();
    auto f = p();
    return RadicalEquation::form_hf(h, f, p());
  }
  case Form::sum_zero: {
    auto a = p();
    auto b = p();
    return RadicalEquation::sum_zero({a, b, p()});
  }
  }
  throw std::logic_error("unknown form");
}

} // namespace radsolve
