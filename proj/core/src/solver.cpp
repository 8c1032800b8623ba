#include "radsolve/solver.hpp"

#include "radsolve/format.hpp"
#include "radsolve/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace radsolve {

std::string Clause::label() const {
  if (names.empty())
    return "S0";
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i)
    out += (i ? "∩" : "") + names[i];
  return out;
}

std::string to_string(const Formula &formula) {
  std::string out;
  for (std::size_t i = 0; i < formula.size(); ++i) {
    const Clause &c = formula[i];
    std::string part = c.with_s0 ? "S0" : "";
    for (const auto &n : c.names)
      part += (part.empty() ? "" : " ∩ ") + n;
    if (formula.size() > 1 && c.names.size() + (c.with_s0 ? 1 : 0) > 1)
      part = "(" + part + ")";
    out += (i ? " ∪ " : "") + part;
  }
  return out.empty() ? "∅" : out;
}

const Restriction &RestrictionSystem::restriction(const std::string &name) const {
  for (const auto &r : restrictions)
    if (r.name == name)
      return r;
  throw std::out_of_range("unknown restriction " + name);
}

RealSet RestrictionSystem::evaluate(const Formula &formula) const {
  RealSet out;
  for (const Clause &c : formula) {
    std::vector<RealSet> parts;
    if (c.with_s0)
      parts.push_back(s0);
    for (const auto &n : c.names)
      parts.push_back(restriction(n).set);
    out = unite(out, parts.empty() ? domain : intersect_all(parts));
  }
  return out;
}

bool RestrictionSystem::satisfies(const Clause &clause, const AlgebraicReal &x) const {
  if (clause.with_s0 && !s0.contains(x))
    return false;
  for (const auto &n : clause.names)
    if (!restriction(n).set.contains(x))
      return false;
  return true;
}

namespace {

using RF = RationalFunction;

RF k(long c) { return RF::constant(Rational(c)); }

RealSet domain_of(const std::vector<RF> &payload) {
  std::vector<AlgebraicReal> poles;
  for (const RF &p : payload)
    if (!p.is_polynomial())
      for (auto &r : isolate_real_roots(p.den()))
        poles.push_back(std::move(r));
  return RealSet::all_except(std::move(poles));
}

class Builder {
public:
  explicit Builder(const std::vector<RF> &payload) { sys_.domain = domain_of(payload); }

  RealSet cond(const RF &p, Relation rel) const {
    return intersect(RealSet::from_sign_condition(p, rel), sys_.domain);
  }

  Builder &s0(const RF &fn, std::string description) {
    sys_.s0_function = fn;
    sys_.s0 = cond(fn, Relation::eq);
    sys_.s0_description = std::move(description) + " = 0";
    return *this;
  }

  Builder &add(std::string name, std::string description, RealSet set) {
    sys_.restrictions.push_back({std::move(name), std::move(description), std::move(set)});
    return *this;
  }

  Builder &strong(Formula f) {
    sys_.strong_formula = std::move(f);
    return *this;
  }

  Builder &formal(Formula f) {
    sys_.formal_formula = std::move(f);
    return *this;
  }

  Builder &steps(std::vector<std::string> lines) {
    sys_.squaring = std::move(lines);
    return *this;
  }

  RestrictionSystem done() { return std::move(sys_); }

private:
  RestrictionSystem sys_;
};

std::string poly_line(const RF &fn) {
  return "S0: " + fn.num().to_string() + " = 0";
}

} // namespace

RestrictionSystem solve_form_b(const RF &f, const RF &g) {
  const RF s0 = f - g * g;
  Builder b({f, g});
  b.s0(s0, "f - g²")
      .add("A1", "g ≥ 0", b.cond(g, Relation::ge))
      .strong({{true, {"A1"}}})
      .formal({{true, {"A1"}}})
      .steps({"√f = g", "square: f = g²", poly_line(s0)});
  return b.done();
}

RestrictionSystem solve_form_roots(const RF &f, const RF &g) {
  const RF s0 = f - g;
  Builder b({f, g});
  b.s0(s0, "f - g")
      .add("A1", "f ≥ 0", b.cond(f, Relation::ge))
      .strong({{true, {"A1"}}})
      .formal({{true, {}}})
      .steps({"√f = √g", "square: f = g", poly_line(s0)});
  return b.done();
}

RestrictionSystem solve_form_d(const RF &f, const RF &g, const RF &h) {
  const RF w = h * h - f - g;
  const RF s0 = k(4) * f * g - w * w;
  Builder b({f, g, h});
  // f, g >= 0 is part of A1: without it h = 0, f = g < 0 would pass.
  RealSet a1 = intersect_all({b.cond(f, Relation::ge), b.cond(g, Relation::ge),
                              b.cond(h, Relation::ge)});
  b.s0(s0, "4fg - (h² - f - g)²")
      .add("A1", "f ≥ 0 ∧ g ≥ 0 ∧ h ≥ 0", std::move(a1))
      .add("A2", "h² - f - g ≥ 0", b.cond(w, Relation::ge))
      .strong({{true, {"A1", "A2"}}})
      .formal({{true, {"A1", "A2"}}})
      .steps({"√f + √g = h", "square: f + g + 2√f√g = h²",
              "isolate: 2√f√g = h² - f - g", "square: 4fg = (h² - f - g)²",
              poly_line(s0)});
  return b.done();
}

RestrictionSystem solve_form_e(const RF &f, const RF &g, const RF &h) {
  const RF w = h - f - g;
  const RF s0 = k(4) * f * g - w * w;
  Builder b({f, g, h});
  RealSet a1 = intersect_all({b.cond(f, Relation::ge), b.cond(g, Relation::ge),
                              b.cond(h, Relation::ge)});
  RealSet a3 = intersect_all({b.cond(f, Relation::le), b.cond(g, Relation::le),
                              b.cond(h, Relation::le)});
  b.s0(s0, "4fg - (h - f - g)²")
      .add("A1", "f ≥ 0 ∧ g ≥ 0 ∧ h ≥ 0", std::move(a1))
      .add("A2", "h - f - g ≥ 0", b.cond(w, Relation::ge))
      .add("A3", "f ≤ 0 ∧ g ≤ 0 ∧ h ≤ 0", std::move(a3))
      .add("A4", "h - f - g ≤ 0", b.cond(w, Relation::le))
      .strong({{true, {"A1", "A2"}}})
      .formal({{true, {"A1", "A2"}}, {true, {"A3", "A4"}}})
      .steps({"√f + √g = √h", "square: f + g + 2√f√g = h",
              "isolate: 2√f√g = h - f - g", "square: 4fg = (h - f - g)²",
              poly_line(s0)});
  return b.done();
}

RestrictionSystem solve_form_hf(const RF &h, const RF &f, const RF &g) {
  const RF s0 = h * h * f - g * g;
  Builder b({f, g, h});
  const RealSet gh_ge = b.cond(g * h, Relation::ge);
  const RealSet h_zero = b.cond(h, Relation::eq);
  b.s0(s0, "h²f - g²")
      .add("A1", "gh ≥ 0 ∧ h ≠ 0", difference(gh_ge, h_zero))
      .add("A2", "h = 0 ∧ f ≥ 0", intersect(h_zero, b.cond(f, Relation::ge)))
      .add("A3", "gh ≥ 0", gh_ge)
      .strong({{true, {"A1"}}, {true, {"A2"}}})
      .formal({{true, {"A3"}}})
      .steps({"h√f = g", "square: h²f = g²", poly_line(s0)});
  return b.done();
}

RestrictionSystem solve_form_f(const RF &f, const RF &g, const RF &h) {
  const RF w = f + h * h - g;
  const RF s0 = k(4) * h * h * f - w * w;
  Builder b({f, g, h});
  RealSet a2 = unite(b.cond(h, Relation::le),
                     intersect(b.cond(h, Relation::ge), b.cond(f - h * h, Relation::ge)));
  RealSet b1 = intersect_all({b.cond(h, Relation::eq), b.cond(f - g, Relation::eq),
                              b.cond(f, Relation::lt)});
  b.s0(s0, "4h²f - (f + h² - g)²")
      .add("A1", "f ≥ 0", b.cond(f, Relation::ge))
      .add("A2", "h ≤ 0 ∨ (h ≥ 0 ∧ f - h² ≥ 0)", std::move(a2))
      .add("A3", "h(f + h² - g) ≥ 0", b.cond(h * w, Relation::ge))
      .add("B1", "h = 0 ∧ f - g = 0 ∧ f < 0", std::move(b1))
      .strong({{true, {"A1", "A2", "A3"}}})
      .formal({{true, {"A1", "A2", "A3"}}, {false, {"B1"}}})
      .steps({"√f - √g = h", "move: √f - h = √g", "square: f - 2h√f + h² = g",
              "isolate: 2h√f = f + h² - g", "square: 4h²f = (f + h² - g)²",
              poly_line(s0)});
  return b.done();
}

RestrictionSystem solve_form_sum_zero(const std::vector<RF> &fs) {
  if (fs.size() < 2)
    throw std::invalid_argument("a radical sum needs at least two terms");
  Builder b(fs);
  b.s0(fs[0], "f1");
  Clause all{true, {}};
  std::string eq = "√f1";
  for (std::size_t i = 1; i < fs.size(); ++i) {
    std::string name = "A" + std::to_string(i);
    std::string fi = "f" + std::to_string(i + 1);
    b.add(name, fi + " = 0", b.cond(fs[i], Relation::eq));
    all.names.push_back(name);
    eq += " + √" + fi;
  }
  b.strong({all}).steps({eq + " = 0", "every radicand vanishes: f1 = 0 ∧ … ∧ f" +
                                          std::to_string(fs.size()) + " = 0",
                         poly_line(fs[0])});
  return b.done();
}

RestrictionSystem restriction_system(const RadicalEquation &eq) {
  switch (eq.form) {
  case Form::b:
    return solve_form_b(eq.f, eq.g);
  case Form::roots:
    return solve_form_roots(eq.f, eq.g);
  case Form::d:
    return solve_form_d(eq.f, eq.g, eq.h);
  case Form::e:
    return solve_form_e(eq.f, eq.g, eq.h);
  case Form::f:
    return solve_form_f(eq.f, eq.g, eq.h);
  case Form::hf:
    return solve_form_hf(eq.h, eq.f, eq.g);
  case Form::sum_zero:
    return solve_form_sum_zero(eq.terms);
  }
  throw std::logic_error("unknown form");
}

const char *to_string(Verdict verdict) {
  switch (verdict) {
  case Verdict::strong:
    return "strong";
  case Verdict::formal_only:
    return "formal_only";
  case Verdict::rejected:
    return "rejected";
  }
  return "?";
}

std::vector<std::string> Candidate::failed_labels() const {
  std::vector<std::string> out;
  for (const auto &f : failed)
    out.push_back(f.label);
  return out;
}

namespace {

void collect_failures(const RestrictionSystem &sys, const Formula &formula,
                      const AlgebraicReal &x, std::vector<FailedClause> &out) {
  for (const Clause &c : formula) {
    if (sys.satisfies(c, x))
      continue;
    std::string label = c.label();
    if (std::any_of(out.begin(), out.end(),
                    [&](const FailedClause &f) { return f.label == label; }))
      continue;
    FailedClause fc{std::move(label), {}};
    if (c.with_s0 && !sys.s0.contains(x))
      fc.violated.push_back("S0");
    for (const auto &n : c.names)
      if (!sys.restriction(n).set.contains(x))
        fc.violated.push_back(n);
    out.push_back(std::move(fc));
  }
}

} // namespace

SolutionReport solve(const RadicalEquation &eq) {
  SolutionReport rep{eq, restriction_system(eq), {}, std::nullopt, {}, {}};
  const RestrictionSystem &sys = rep.system;
  rep.strong = sys.evaluate(sys.strong_formula);
  if (sys.formal_formula)
    rep.formal = sys.evaluate(*sys.formal_formula);
  else
    rep.notes.push_back("formal solutions are not supported for " +
                        std::string(form_name(eq.form)) +
                        "; only strong solutions are reported");

  std::vector<AlgebraicReal> points = sys.s0.isolated_points();
  for (auto &p : rep.strong.isolated_points())
    points.push_back(std::move(p));
  if (rep.formal)
    for (auto &p : rep.formal->isolated_points())
      points.push_back(std::move(p));
  std::sort(points.begin(), points.end(),
            [](const AlgebraicReal &a, const AlgebraicReal &b) { return a < b; });
  points.erase(std::unique(points.begin(), points.end()), points.end());

  for (auto &x : points) {
    Candidate c;
    if (rep.strong.contains(x))
      c.verdict = Verdict::strong;
    else if (rep.formal && rep.formal->contains(x))
      c.verdict = Verdict::formal_only;
    if (c.verdict != Verdict::strong)
      collect_failures(sys, sys.strong_formula, x, c.failed);
    if (c.verdict == Verdict::rejected && sys.formal_formula)
      collect_failures(sys, *sys.formal_formula, x, c.failed);
    c.approx = format_approx(x);
    c.value = std::move(x);
    rep.candidates.push_back(std::move(c));
  }

  if (sys.s0_function.is_zero())
    rep.notes.push_back("the squared identity " + sys.s0_description +
                        " holds identically, so S0 is the whole domain");
  if (!sys.domain.is_all())
    rep.notes.push_back("domain excludes poles: " + sys.domain.to_string());
  return rep;
}

} // namespace radsolve
