#include "support.hpp"

#include "radsolve/errors.hpp"
#include "radsolve/oracle.hpp"
#include "radsolve/solver.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace radsolve;
using namespace radsolve::test;

namespace {

RealSet pts(std::initializer_list<AlgebraicReal> xs) { return RealSet::points(xs); }

RealSet from(const Rational &a) {
  return RealSet::interval(Endpoint::at(a), true, Endpoint::pos_inf(), false);
}

std::vector<Verdict> verdicts(const SolutionReport &r) {
  std::vector<Verdict> v;
  for (const auto &c : r.candidates)
    v.push_back(c.verdict);
  return v;
}

SolutionReport solve_text(std::string_view text) { return solve(parse_radical_equation(text)); }

} // namespace

TEST(FormB, Classic) {
  const RestrictionSystem sys = solve_form_b(rf("4*x+1"), rf("x-5"));
  EXPECT_EQ(sys.s0, pts({2, 12}));
  EXPECT_EQ(sys.restriction("A1").set, from(5));
  EXPECT_EQ(sys.evaluate(sys.strong_formula), pts({12}));
  EXPECT_EQ(sys.evaluate(*sys.formal_formula), pts({12}));
}

TEST(FormB, AbsoluteValueIdentity) {
  const RestrictionSystem sys = solve_form_b(rf("x^2"), rf("x"));
  EXPECT_TRUE(sys.s0.is_all());
  EXPECT_EQ(sys.restriction("A1").set, from(0));
  EXPECT_EQ(sys.evaluate(sys.strong_formula), from(0));
}

TEST(FormB, Contradiction) {
  const RestrictionSystem sys = solve_form_b(rf("-1"), rf("1"));
  EXPECT_TRUE(sys.s0.is_empty());
  EXPECT_TRUE(sys.evaluate(sys.strong_formula).is_empty());
  EXPECT_TRUE(sys.evaluate(*sys.formal_formula).is_empty());
}

TEST(FormD, SquareShiftMiddleCase) {
  const SolutionReport r = solve(RadicalEquation::form_d(rf("x^2-1"), rf("x^2+1"), rf("3/2*x")));
  ASSERT_EQ(r.strong.components().size(), 1u);
  const AlgebraicReal x = r.strong.isolated_points().at(0);
  EXPECT_EQ(sign_at(poly("63*x^4-64"), x), Sign::zero);
  EXPECT_NEAR(x.to_double(), std::pow(64.0 / 63.0, 0.25), 1e-12);
  EXPECT_EQ(r.strong, *r.formal);
}

TEST(FormD, AbsoluteValueIdentity) {
  const RestrictionSystem sys = solve_form_d(rf("x^2"), rf("x^2"), rf("2*x"));
  EXPECT_TRUE(sys.s0.is_all());
  EXPECT_EQ(sys.evaluate(sys.strong_formula), from(0));
  EXPECT_TRUE(solve(RadicalEquation::form_d(rf("x^2"), rf("x^2"), rf("2*x"))).candidates.empty());
}

TEST(FormD, SquareShiftOuterCase) {
  const SolutionReport r = solve(RadicalEquation::form_d(rf("x^2-1"), rf("x^2+1"), rf("2*x")));
  EXPECT_TRUE(r.strong.is_empty());
  EXPECT_TRUE(r.formal->is_empty());
}

TEST(FormD, ZeroRightSideNegativeRadicandsRejected) {
  // h = 0 and f = g < 0 satisfy the squared identity and A2 but not the equation.
  const SolutionReport r = solve(RadicalEquation::form_d(rf("x-1"), rf("x-1"), rf("0")));
  EXPECT_EQ(r.strong, pts({1}));
  EXPECT_EQ(*r.formal, pts({1}));
}

TEST(FormE, ThreeRootStrongCase) {
  const SolutionReport r = solve(RadicalEquation::form_e(rf("x+1"), rf("x-1"), rf("x+2")));
  ASSERT_EQ(r.candidates.size(), 2u);
  EXPECT_EQ(verdicts(r), (std::vector<Verdict>{Verdict::rejected, Verdict::strong}));
  EXPECT_EQ(sign_at(poly("3*x^2+4*x-8"), r.candidates[1].value), Sign::zero);
  EXPECT_NEAR(r.candidates[1].value.to_double(), (-2 + 2 * std::sqrt(7.0)) / 3, 1e-12);
  EXPECT_EQ(r.candidates[0].failed_labels(), (std::vector<std::string>{"A1∩A2", "A3∩A4"}));
}

TEST(FormE, ThreeRootFormalOnlyCase) {
  const SolutionReport r = solve(RadicalEquation::form_e(rf("x+1"), rf("x-1"), rf("x-2")));
  EXPECT_TRUE(r.strong.is_empty());
  ASSERT_EQ(r.formal->isolated_points().size(), 1u);
  const AlgebraicReal x = r.formal->isolated_points()[0];
  EXPECT_NEAR(x.to_double(), (2 - 2 * std::sqrt(7.0)) / 3, 1e-12);
  EXPECT_EQ(verdicts(r), (std::vector<Verdict>{Verdict::formal_only, Verdict::rejected}));
  EXPECT_EQ(r.candidates[0].failed_labels(), (std::vector<std::string>{"A1∩A2"}));
}

TEST(FormE, IdentityWithFormalExtension) {
  const SolutionReport r = solve(RadicalEquation::form_e(rf("x"), rf("x"), rf("4*x")));
  EXPECT_EQ(r.strong, from(0));
  EXPECT_TRUE(r.formal->is_all());
}

TEST(FormHF, PolynomialCoefficient) {
  const SolutionReport r = solve(RadicalEquation::form_hf(rf("x"), rf("x"), rf("x^2")));
  EXPECT_EQ(r.strong, pts({0, 1}));
  EXPECT_EQ(*r.formal, pts({0, 1}));
}

TEST(FormHF, ZeroCoefficientFormalEverywhere) {
  const SolutionReport r = solve(RadicalEquation::form_hf(rf("0"), rf("-1"), rf("0")));
  EXPECT_TRUE(r.strong.is_empty());
  EXPECT_TRUE(r.formal->is_all());
}

TEST(FormHF, UnitCoefficient) {
  const RestrictionSystem sys = solve_form_hf(rf("1"), rf("x"), rf("x-2"));
  EXPECT_EQ(sys.s0, pts({1, 4}));
  EXPECT_EQ(sys.evaluate(sys.strong_formula), pts({4}));
  EXPECT_EQ(sys.evaluate(*sys.formal_formula), pts({4}));
}

TEST(FormF, OppositeRoots) {
  const SolutionReport r = solve(RadicalEquation::form_f(rf("-x"), rf("x-2"), rf("x-1")));
  EXPECT_TRUE(r.strong.is_empty());
  EXPECT_EQ(*r.formal, pts({1}));
  ASSERT_EQ(r.candidates.size(), 1u);
  EXPECT_EQ(r.candidates[0].verdict, Verdict::formal_only);
  EXPECT_EQ(r.system.restriction("B1").set, pts({1}));
}

TEST(FormF, IdenticalRadicals) {
  const RestrictionSystem sys = solve_form_f(rf("x^2"), rf("x^2"), rf("0"));
  EXPECT_TRUE(sys.s0.is_all());
  for (const char *name : {"A1", "A2", "A3"})
    EXPECT_TRUE(sys.restriction(name).set.is_all()) << name;
  EXPECT_TRUE(sys.evaluate(sys.strong_formula).is_all());
  EXPECT_TRUE(sys.restriction("B1").set.is_empty());
}

TEST(FormF, SubstitutionCheck) {
  const RestrictionSystem sys = solve_form_f(rf("x+3"), rf("x"), rf("1"));
  EXPECT_EQ(sys.s0, pts({1}));
  EXPECT_EQ(sys.evaluate(sys.strong_formula), pts({1}));
}

TEST(FormF, ZeroCoefficientKeepsNegativeAgreement) {
  // h = 0: B1 is the set where f = g < 0.
  const SolutionReport r = solve(RadicalEquation::form_f(rf("x"), rf("x"), rf("0")));
  EXPECT_EQ(r.strong, from(0));
  EXPECT_TRUE(r.formal->is_all());
}

TEST(FormRoots, Classic) {
  const SolutionReport r = solve(RadicalEquation::roots(rf("1-3*x"), rf("x-7")));
  EXPECT_EQ(*r.formal, pts({2}));
  EXPECT_TRUE(r.strong.is_empty());
}

TEST(FormRoots, IdenticalSides) {
  const SolutionReport r = solve(RadicalEquation::roots(rf("x"), rf("x")));
  EXPECT_EQ(r.strong, from(0));
  EXPECT_TRUE(r.formal->is_all());
}

TEST(FormRoots, Contradiction) {
  const SolutionReport r = solve(RadicalEquation::roots(rf("x"), rf("x+1")));
  EXPECT_TRUE(r.strong.is_empty());
  EXPECT_TRUE(r.formal->is_empty());
}

TEST(FormSumZero, Examples) {
  EXPECT_EQ(solve(RadicalEquation::sum_zero({rf("x-1"), rf("1-x")})).strong, pts({1}));
  const SolutionReport r = solve(RadicalEquation::sum_zero({rf("x"), rf("x"), rf("4*x")}));
  EXPECT_EQ(r.strong, pts({0}));
  EXPECT_FALSE(r.formal.has_value());
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes[0].find("not supported"), std::string::npos);
  EXPECT_TRUE(solve(RadicalEquation::sum_zero({rf("x"), rf("x+1")})).strong.is_empty());
}

TEST(Solve, ClassicFailedRestriction) {
  const SolutionReport r = solve_text("sqrt(4*x+1)=x-5");
  ASSERT_EQ(r.candidates.size(), 2u);
  EXPECT_EQ(r.candidates[0].approx, "2.00000000000");
  EXPECT_EQ(r.candidates[0].verdict, Verdict::rejected);
  EXPECT_EQ(r.candidates[0].failed_labels(), std::vector<std::string>{"A1"});
  EXPECT_EQ(r.candidates[1].verdict, Verdict::strong);
  EXPECT_TRUE(r.candidates[1].failed.empty());
}

TEST(Solve, IdentityHasNoIsolatedCandidates) {
  const SolutionReport r = solve_text("sqrt(x^2)+sqrt(x^2)=2*x");
  EXPECT_EQ(r.strong, from(0));
  EXPECT_TRUE(r.candidates.empty());
}

TEST(Solve, OppositeRootsViaB1) {
  const SolutionReport r = solve_text("sqrt(-x)-sqrt(x-2)=x-1");
  ASSERT_EQ(r.candidates.size(), 1u);
  EXPECT_EQ(r.candidates[0].value, AlgebraicReal(1));
  EXPECT_EQ(r.candidates[0].verdict, Verdict::formal_only);
}

TEST(Solve, PolesLeaveTheDomain) {
  // sqrt(1/x) = 1/x: x = 1 only; the pole at 0 is never a candidate.
  const SolutionReport r = solve_text("sqrt(1/x)=1/x");
  EXPECT_EQ(r.strong, pts({1}));
  EXPECT_FALSE(r.system.domain.contains(AlgebraicReal(0)));
  const SolutionReport s = solve_text("sqrt(x^2/(x-1))=x/(x-1)");
  EXPECT_FALSE(s.strong.contains(AlgebraicReal(1)));
  EXPECT_EQ(s.strong, pts({0, 2}));
}

TEST(Solve, DeterministicReports) {
  const auto a = solve_text("sqrt(x+1)+sqrt(x-1)=sqrt(x+2)");
  const auto b = solve_text("sqrt(x+1)+sqrt(x-1)=sqrt(x+2)");
  ASSERT_EQ(a.candidates.size(), b.candidates.size());
  for (std::size_t i = 0; i < a.candidates.size(); ++i) {
    EXPECT_EQ(a.candidates[i].value.lo(), b.candidates[i].value.lo());
    EXPECT_EQ(a.candidates[i].approx, b.candidates[i].approx);
  }
}

class SolverProperties : public ::testing::TestWithParam<Form> {};

TEST_P(SolverProperties, StrongInsideFormalAndSoundSquaring) {
  const Form form = GetParam();
  for (std::uint64_t i = 0; i < 120; ++i) {
    const RadicalEquation eq = random_equation(derive_seed(31, i), form, 2);
    const SolutionReport r = solve(eq);
    if (r.formal)
      EXPECT_TRUE(r.strong.is_subset_of(*r.formal)) << render(eq);
    if (form == Form::d)
      EXPECT_EQ(r.strong, *r.formal) << render(eq);
    for (const auto &c : r.candidates) {
      const bool in_strong = r.strong.contains(c.value);
      const bool in_formal = r.formal && r.formal->contains(c.value);
      EXPECT_EQ(c.verdict == Verdict::strong, in_strong);
      EXPECT_EQ(c.verdict == Verdict::formal_only, in_formal && !in_strong);
      EXPECT_EQ(c.verdict != Verdict::strong, !c.failed.empty());
      if (in_strong) {
        EXPECT_EQ(sign_at(r.system.s0_function, c.value), Sign::zero) << render(eq);
        for (const auto &rad : eq.radicands())
          EXPECT_NE(sign_at(rad, c.value), Sign::negative) << render(eq);
      }
    }
    for (std::size_t k = 1; k < r.candidates.size(); ++k)
      EXPECT_LT(r.candidates[k - 1].value, r.candidates[k].value);
    if (r.formal)
      for (const auto &p : r.formal->isolated_points())
        EXPECT_TRUE(std::any_of(r.candidates.begin(), r.candidates.end(),
                                [&](const Candidate &c) { return c.value == p; }));
  }
}

INSTANTIATE_TEST_SUITE_P(AllForms, SolverProperties,
                         ::testing::Values(Form::roots, Form::b, Form::d, Form::e, Form::f,
                                           Form::hf, Form::sum_zero),
                         [](const auto &info) { return std::string(form_name(info.param)); });

TEST(Locate, ThreeRootCaseFive) {
  EXPECT_EQ(locate_vs_quadratic(poly("3*x^2+4*x-8"), Rational(1)), Location::between);
  EXPECT_EQ(locate_vs_quadratic(poly("3*x^2+4*x-8"), Rational(2)), Location::right_of_both);
  EXPECT_EQ(locate_vs_quadratic(poly("3*x^2+4*x-8"), Rational(-3)), Location::left_of_both);
  EXPECT_EQ(locate_vs_quadratic(poly("x^2-1"), Rational(1)), Location::at_root);
  EXPECT_EQ(locate_vs_quadratic(poly("-x^2+1"), Rational(5)), Location::right_of_both);
}

TEST(Locate, Degenerate) {
  EXPECT_THROW(locate_vs_quadratic(poly("x^2+1"), Rational(0)), DegenerateQuadratic);
  EXPECT_THROW(locate_vs_quadratic(poly("(x-1)^2"), Rational(0)), DegenerateQuadratic);
  EXPECT_THROW(locate_vs_quadratic(poly("x-1"), Rational(0)), DegenerateQuadratic);
  EXPECT_THROW(locate_vs_quadratic(poly("x^3-x"), Rational(0)), DegenerateQuadratic);
}

TEST(Locate, AgreesWithRootComparison) {
  Rng rng(77);
  int done = 0;
  while (done < 10000) {
    const Polynomial q{rng.rational(9, 5), rng.rational(9, 5), rng.rational(9, 5)};
    if (q.degree() != 2)
      continue;
    const Rational disc = q.coefficient(1) * q.coefficient(1) - 4 * q.coefficient(2) * q.coefficient(0);
    if (disc <= 0)
      continue;
    const auto roots = isolate_real_roots(q);
    ASSERT_EQ(roots.size(), 2u);
    // Probe near the roots half of the time so at_root and the boundaries occur.
    Rational xi = rng.rational(40, 8);
    if (rng.between(0, 3) == 0 && roots[0].is_rational())
      xi = roots[0].rational_value();
    const AlgebraicReal a(xi);
    Location want = Location::between;
    if (a == roots[0] || a == roots[1])
      want = Location::at_root;
    else if (a < roots[0])
      want = Location::left_of_both;
    else if (a > roots[1])
      want = Location::right_of_both;
    ASSERT_EQ(locate_vs_quadratic(q, xi), want) << q.to_string() << " at " << to_string(xi);
    ++done;
  }
}
