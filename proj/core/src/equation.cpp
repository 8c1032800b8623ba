#include "radsolve/equation.hpp"

#include "radsolve/errors.hpp"
#include "radsolve/parser.hpp"

#include <stdexcept>

namespace radsolve {

const char *form_name(Form form) {
  switch (form) {
  case Form::roots:
    return "FormRoots";
  case Form::b:
    return "FormB";
  case Form::d:
    return "FormD";
  case Form::e:
    return "FormE";
  case Form::f:
    return "FormF";
  case Form::hf:
    return "FormHF";
  case Form::sum_zero:
    return "FormSumZero";
  }
  return "?";
}

std::optional<Form> form_from_name(std::string_view name) {
  for (Form f : {Form::roots, Form::b, Form::d, Form::e, Form::f, Form::hf,
                 Form::sum_zero})
    if (name == form_name(f))
      return f;
  return std::nullopt;
}

RadicalEquation RadicalEquation::roots(RationalFunction f, RationalFunction g) {
  return {Form::roots, std::move(f), std::move(g), {}, {}};
}

RadicalEquation RadicalEquation::form_b(RationalFunction f, RationalFunction g) {
  return {Form::b, std::move(f), std::move(g), {}, {}};
}

RadicalEquation RadicalEquation::form_d(RationalFunction f, RationalFunction g,
                                        RationalFunction h) {
  return {Form::d, std::move(f), std::move(g), std::move(h), {}};
}

RadicalEquation RadicalEquation::form_e(RationalFunction f, RationalFunction g,
                                        RationalFunction h) {
  return {Form::e, std::move(f), std::move(g), std::move(h), {}};
}

RadicalEquation RadicalEquation::form_f(RationalFunction f, RationalFunction g,
                                        RationalFunction h) {
  return {Form::f, std::move(f), std::move(g), std::move(h), {}};
}

RadicalEquation RadicalEquation::form_hf(RationalFunction h, RationalFunction f,
                                         RationalFunction g) {
  return {Form::hf, std::move(f), std::move(g), std::move(h), {}};
}

RadicalEquation RadicalEquation::sum_zero(std::vector<RationalFunction> terms) {
  if (terms.size() < 2)
    throw std::invalid_argument("a radical sum needs at least two terms");
  return {Form::sum_zero, {}, {}, {}, std::move(terms)};
}

std::vector<RationalFunction> RadicalEquation::radicands() const {
  switch (form) {
  case Form::b:
  case Form::hf:
    return {f};
  case Form::roots:
  case Form::d:
  case Form::f:
    return {f, g};
  case Form::e:
    return {f, g, h};
  case Form::sum_zero:
    return terms;
  }
  return {};
}

std::vector<RationalFunction> RadicalEquation::functions() const {
  switch (form) {
  case Form::b:
  case Form::roots:
    return {f, g};
  case Form::d:
  case Form::e:
  case Form::f:
  case Form::hf:
    return {f, g, h};
  case Form::sum_zero:
    return terms;
  }
  return {};
}

namespace {

std::string inner(const RationalFunction &r) {
  if (r.is_polynomial())
    return r.num().to_string();
  return r.to_string();
}

std::string root(const RationalFunction &r) { return "sqrt(" + inner(r) + ")"; }

} // namespace

std::string render(const RadicalEquation &eq) {
  switch (eq.form) {
  case Form::roots:
    return root(eq.f) + "=" + root(eq.g);
  case Form::b:
    return root(eq.f) + "=" + inner(eq.g);
  case Form::d:
    return root(eq.f) + "+" + root(eq.g) + "=" + inner(eq.h);
  case Form::e:
    return root(eq.f) + "+" + root(eq.g) + "=" + root(eq.h);
  case Form::f:
    return root(eq.f) + "-" + root(eq.g) + "=" + inner(eq.h);
  case Form::hf:
    return eq.h.to_string() + "*" + root(eq.f) + "=" + inner(eq.g);
  case Form::sum_zero: {
    if (eq.terms.size() == 2)
      return root(eq.terms[0]) + "=-" + root(eq.terms[1]);
    std::string out;
    for (std::size_t i = 0; i < eq.terms.size(); ++i)
      out += (i ? "+" : "") + root(eq.terms[i]);
    return out + "=0";
  }
  }
  return "";
}

namespace {

struct RadicalTerm {
  RationalFunction coeff;
  RationalFunction radicand;
};

/// rational + sum of coeff * sqrt(radicand)
struct RadicalSum {
  RationalFunction rational;
  std::vector<RadicalTerm> radicals;

  RadicalSum &scale(const RationalFunction &k) {
    rational *= k;
    for (auto &t : radicals)
      t.coeff *= k;
    return *this;
  }
};

RadicalSum decompose(const Expr &e) {
  using K = Expr::Kind;
  switch (e.kind) {
  case K::constant:
  case K::variable:
    return {to_rational_function(e), {}};
  case K::parameter:
    throw UnsupportedForm("unbound parameter '" + e.name + "'");
  case K::add:
  case K::sub: {
    RadicalSum a = decompose(e.args[0]);
    RadicalSum b = decompose(e.args[1]);
    if (e.kind == K::sub)
      b.scale(RationalFunction::constant(Rational(-1)));
    a.rational += b.rational;
    a.radicals.insert(a.radicals.end(), b.radicals.begin(), b.radicals.end());
    return a;
  }
  case K::neg:
    return decompose(e.args[0]).scale(RationalFunction::constant(Rational(-1)));
  case K::mul: {
    RadicalSum a = decompose(e.args[0]);
    RadicalSum b = decompose(e.args[1]);
    if (!a.radicals.empty() && !b.radicals.empty())
      throw UnsupportedForm("products of radicals are not supported");
    if (a.radicals.empty())
      return b.scale(a.rational);
    return a.scale(b.rational);
  }
  case K::div: {
    RadicalSum a = decompose(e.args[0]);
    RadicalSum b = decompose(e.args[1]);
    if (!b.radicals.empty())
      throw UnsupportedForm("radicals in a denominator are not supported");
    if (b.rational.is_zero())
      throw UnsupportedForm("division by zero");
    return a.scale(RationalFunction::constant(Rational(1)) / b.rational);
  }
  case K::pow: {
    RadicalSum base = decompose(e.args[0]);
    if (base.radicals.empty())
      return {base.rational.pow(e.exponent), {}};
    if (e.exponent == 1)
      return base;
    if (e.exponent == 0)
      return {RationalFunction::constant(Rational(1)), {}};
    throw UnsupportedForm("powers of radical expressions are not supported");
  }
  case K::sqrt: {
    if (has_sqrt(e.args[0]))
      throw UnsupportedForm("nested radicals are not supported");
    RadicalSum out;
    out.radicals.push_back({RationalFunction::constant(Rational(1)),
                            to_rational_function(e.args[0])});
    return out;
  }
  }
  throw UnsupportedForm("unknown expression node");
}

enum class Side { left, right };

struct Placed {
  RationalFunction coeff;
  RationalFunction radicand;
  Side side;
};

int unit_sign(const RationalFunction &c) {
  if (c.is_constant()) {
    Rational v = c.constant_value();
    if (v == 1)
      return 1;
    if (v == -1)
      return -1;
  }
  throw UnsupportedForm(
      "radical coefficients must be 1 or -1 (fold constants into the "
      "radicand, e.g. 2*sqrt(x) = sqrt(4*x))");
}

RadicalEquation classify(const RadicalSum &left, const RadicalSum &right) {
  std::vector<Placed> rad;
  for (const auto &t : left.radicals)
    if (!t.coeff.is_zero())
      rad.push_back({t.coeff, t.radicand, Side::left});
  for (const auto &t : right.radicals)
    if (!t.coeff.is_zero())
      rad.push_back({t.coeff, t.radicand, Side::right});

  // Rational part moved to the right: sum of left radicals - right radicals = rest.
  const RationalFunction rest = right.rational - left.rational;
  const RationalFunction neg_one = RationalFunction::constant(Rational(-1));

  switch (rad.size()) {
  case 0:
    throw UnsupportedForm("no radical in the equation");
  case 1: {
    // Keep the radical's own side: c * sqrt(f) = (other side) - (own rational).
    const Placed &t = rad[0];
    RationalFunction g = t.side == Side::left ? rest : -rest;
    if (!t.coeff.is_constant())
      return RadicalEquation::form_hf(t.coeff, t.radicand, g);
    int s = unit_sign(t.coeff);
    return RadicalEquation::form_b(t.radicand, s > 0 ? g : -g);
  }
  case 2: {
    const Placed &p = rad[0];
    const Placed &q = rad[1];
    int s1 = unit_sign(p.coeff);
    int s2 = unit_sign(q.coeff);
    if (p.side == q.side) {
      RationalFunction r = p.side == Side::left ? rest : -rest;
      if (s1 > 0 && s2 > 0)
        return RadicalEquation::form_d(p.radicand, q.radicand, r);
      if (s1 < 0 && s2 < 0)
        return RadicalEquation::form_d(p.radicand, q.radicand, -r);
      if (s1 > 0)
        return RadicalEquation::form_f(p.radicand, q.radicand, r);
      return RadicalEquation::form_f(q.radicand, p.radicand, r);
    }
    // One radical per side; orient as (left one) vs (right one).
    const Placed &l = p.side == Side::left ? p : q;
    const Placed &rr = p.side == Side::left ? q : p;
    int sl = l.side == p.side ? s1 : s2;
    int sr = rr.side == p.side ? s1 : s2;
    if (rest.is_zero()) {
      if (sl == sr)
        return RadicalEquation::roots(l.radicand, rr.radicand);
      return RadicalEquation::sum_zero({l.radicand, rr.radicand});
    }
    // sl*sqrt(fl) - sr*sqrt(fr) = rest
    if (sl > 0 && sr > 0)
      return RadicalEquation::form_f(l.radicand, rr.radicand, rest);
    if (sl > 0 && sr < 0)
      return RadicalEquation::form_d(l.radicand, rr.radicand, rest);
    if (sl < 0 && sr > 0)
      return RadicalEquation::form_d(l.radicand, rr.radicand, -rest);
    return RadicalEquation::form_f(rr.radicand, l.radicand, rest);
  }
  default:
    break;
  }

  // Three or more radicals: only sign patterns that square down twice.
  std::vector<RationalFunction> plus;
  std::vector<RationalFunction> minus;
  for (const auto &t : rad) {
    int s = unit_sign(t.coeff) * (t.side == Side::left ? 1 : -1);
    (s > 0 ? plus : minus).push_back(t.radicand);
  }
  if (!rest.is_zero())
    throw UnsupportedForm("three or more radicals together with a rational "
                          "term need more than two squaring steps");
  if (plus.empty() || minus.empty())
    return RadicalEquation::sum_zero(plus.empty() ? minus : plus);
  if (rad.size() == 3) {
    if (plus.size() == 2)
      return RadicalEquation::form_e(plus[0], plus[1], minus[0]);
    return RadicalEquation::form_e(minus[0], minus[1], plus[0]);
  }
  throw UnsupportedForm("mixed-sign sums of four or more radicals are not "
                        "supported");
}

} // namespace

RadicalEquation normalize(const EquationAst &ast) {
  if (has_parameter(ast.lhs) || has_parameter(ast.rhs))
    throw UnsupportedForm("equation has unbound parameters");
  try {
    return classify(decompose(ast.lhs), decompose(ast.rhs));
  } catch (const std::domain_error &e) {
    throw UnsupportedForm(std::string("division by zero: ") + e.what());
  }
}

RadicalEquation parse_radical_equation(std::string_view text) {
  return normalize(parse_equation(text));
}

} // namespace radsolve
