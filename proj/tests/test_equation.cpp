#include "support.hpp"

#include "radsolve/equation.hpp"
#include "radsolve/errors.hpp"
#include "radsolve/oracle.hpp"
#include "radsolve/solver.hpp"

#include <gtest/gtest.h>

using namespace radsolve;
using namespace radsolve::test;

namespace {

RadicalEquation norm(std::string_view text) { return parse_radical_equation(text); }

std::size_t syntax_offset(std::string_view text) {
  try {
    parse_equation(text);
  } catch (const SyntaxError &e) {
    return e.offset();
  }
  ADD_FAILURE() << "no syntax error for " << text;
  return 0;
}

} // namespace

TEST(Parse, ThreeRootShape) {
  const EquationAst ast = parse_equation("sqrt(x+1)+sqrt(x-1)=sqrt(x+2)");
  EXPECT_EQ(ast.lhs, sqrt(Expr::variable() + Expr::constant(1)) +
                         sqrt(Expr::variable() - Expr::constant(1)));
  EXPECT_EQ(ast.rhs, sqrt(Expr::variable() + Expr::constant(2)));
}

TEST(Parse, ClassicShape) {
  const EquationAst ast = parse_equation("sqrt(4*x+1)=x-5");
  EXPECT_EQ(ast.lhs, sqrt(Expr::constant(4) * Expr::variable() + Expr::constant(1)));
  EXPECT_EQ(ast.rhs, Expr::variable() - Expr::constant(5));
}

TEST(Parse, UnbalancedParenthesisOffset) {
  try {
    parse_equation("sqrt(x");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError &e) {
    EXPECT_EQ(e.offset(), 6u);
    EXPECT_NE(std::find(e.expected().begin(), e.expected().end(), "')'"), e.expected().end());
  }
}

TEST(Parse, ErrorOffsets) {
  EXPECT_EQ(syntax_offset("sqrt(x)"), 7u);
  EXPECT_EQ(syntax_offset("x+=1"), 2u);
  EXPECT_EQ(syntax_offset("x=1=2"), 3u);
  EXPECT_EQ(syntax_offset("x=1/0"), 4u);
  EXPECT_EQ(syntax_offset("x = y"), 4u);
  EXPECT_EQ(syntax_offset("x=2^x"), 4u);
  EXPECT_EQ(syntax_offset("x=$"), 2u);
}

TEST(Parse, WhitespaceInsensitive) {
  EXPECT_EQ(parse_equation(" sqrt ( x + 1 )\t= 2 * x "), parse_equation("sqrt(x+1)=2*x"));
}

TEST(Parse, RationalAndDecimalLiterals) {
  EXPECT_EQ(parse_expression("3/4"), Expr::constant(Rational(3, 4)));
  EXPECT_EQ(parse_expression("0.125"), Expr::constant(Rational(1, 8)));
  EXPECT_EQ(parse_expression("007"), Expr::constant(Rational(7)));
  EXPECT_EQ(parse_expression("010/08"), Expr::constant(Rational(5, 4)));
  EXPECT_EQ(rf("2/4*x"), rf("x/2"));
}

TEST(Parse, ParametersOnlyWhenAllowed) {
  EXPECT_THROW(parse_equation("sqrt(x+a)=b"), SyntaxError);
  const EquationAst ast = parse_equation("sqrt(x+a)=b", ParseOptions{true});
  EXPECT_TRUE(has_parameter(ast.lhs));
  EXPECT_THROW(normalize(ast), UnsupportedForm);
  const std::map<std::string, Rational> b{{"a", Rational(1)}, {"b", Rational(-2)}};
  const EquationAst bound{radsolve::bind(ast.lhs, b), radsolve::bind(ast.rhs, b)};
  EXPECT_EQ(normalize(bound), RadicalEquation::form_b(rf("x+1"), rf("-2")));
}

TEST(Print, RoundTripsTrickyExpressions) {
  for (const char *text :
       {"-x^2", "(-x)^2", "2/3*x", "x/(2/3)", "-(x-1)", "1-(2-x)", "(x+1)^3/(x-1)",
        "sqrt(x+1)-sqrt(-x)", "x-(-1)", "(1/2)^2", "-(-x)", "x/(x*x)", "x^0", "2*(x+1)^2"}) {
    const Expr e = parse_expression(text);
    EXPECT_EQ(parse_expression(to_string(e)), e) << text << " printed as " << to_string(e);
  }
}

TEST(Print, RoundTripsRandomTrees) {
  Rng rng(17);
  std::function<Expr(int)> gen = [&](int depth) -> Expr {
    if (depth == 0 || rng.between(0, 3) == 0)
      return rng.between(0, 1) ? Expr::variable() : Expr::constant(abs(rng.rational(9, 9)));
    switch (rng.between(0, 6)) {
    case 0:
      return gen(depth - 1) + gen(depth - 1);
    case 1:
      return gen(depth - 1) - gen(depth - 1);
    case 2:
      return gen(depth - 1) * gen(depth - 1);
    case 3:
      return gen(depth - 1) / gen(depth - 1);
    case 4:
      return -gen(depth - 1);
    case 5:
      return Expr::power(gen(depth - 1), static_cast<unsigned>(rng.between(0, 3)));
    default:
      return sqrt(gen(depth - 1));
    }
  };
  for (int i = 0; i < 2000; ++i) {
    const Expr e = gen(4);
    EXPECT_EQ(parse_expression(to_string(e)), e) << to_string(e);
  }
}

TEST(Normalize, DifferenceEqualsRootBecomesFormE) {
  EXPECT_EQ(norm("sqrt(x+2)-sqrt(x-1)=sqrt(x+1)"),
            RadicalEquation::form_e(rf("x-1"), rf("x+1"), rf("x+2")));
}

TEST(Normalize, NegatedRootBecomesSumZero) {
  EXPECT_EQ(norm("sqrt(x)+sqrt(x)=-sqrt(4*x)"),
            RadicalEquation::sum_zero({rf("x"), rf("x"), rf("4*x")}));
}

TEST(Normalize, SquareShiftIsFormD) {
  EXPECT_EQ(norm("sqrt(x^2-1)+sqrt(x^2+1)=2*x"),
            RadicalEquation::form_d(rf("x^2-1"), rf("x^2+1"), rf("2*x")));
}

TEST(Normalize, OneRadical) {
  EXPECT_EQ(norm("sqrt(4*x+1)=x-5"), RadicalEquation::form_b(rf("4*x+1"), rf("x-5")));
  EXPECT_EQ(norm("x-5=sqrt(4*x+1)"), RadicalEquation::form_b(rf("4*x+1"), rf("x-5")));
  EXPECT_EQ(norm("-sqrt(x)=1-x"), RadicalEquation::form_b(rf("x"), rf("x-1")));
  EXPECT_EQ(norm("sqrt(x)+x=3"), RadicalEquation::form_b(rf("x"), rf("3-x")));
  EXPECT_EQ(norm("sqrt(0.25*x)=x"), RadicalEquation::form_b(rf("x/4"), rf("x")));
  EXPECT_EQ(norm("sqrt(x)^1=2"), RadicalEquation::form_b(rf("x"), rf("2")));
}

TEST(Normalize, FunctionCoefficientIsFormHF) {
  EXPECT_EQ(norm("x*sqrt(x)=x^2"), RadicalEquation::form_hf(rf("x"), rf("x"), rf("x^2")));
  EXPECT_EQ(norm("x^2=x*sqrt(x)"), RadicalEquation::form_hf(rf("x"), rf("x"), rf("x^2")));
  EXPECT_EQ(norm("sqrt(x)*(x-1)+1=0"),
            RadicalEquation::form_hf(rf("x-1"), rf("x"), rf("-1")));
}

TEST(Normalize, TwoRadicals) {
  EXPECT_EQ(norm("sqrt(x)=sqrt(1-x)"), RadicalEquation::roots(rf("x"), rf("1-x")));
  EXPECT_EQ(norm("sqrt(x)+1=sqrt(x+3)"),
            RadicalEquation::form_f(rf("x"), rf("x+3"), rf("-1")));
  EXPECT_EQ(norm("sqrt(x+3)-sqrt(x)=1"), RadicalEquation::form_f(rf("x+3"), rf("x"), rf("1")));
  EXPECT_EQ(norm("-sqrt(x)+sqrt(x+3)=1"),
            RadicalEquation::form_f(rf("x+3"), rf("x"), rf("1")));
  EXPECT_EQ(norm("-sqrt(x)-sqrt(x+3)=-1"),
            RadicalEquation::form_d(rf("x"), rf("x+3"), rf("1")));
  EXPECT_EQ(norm("sqrt(x)=1-sqrt(x+3)"),
            RadicalEquation::form_d(rf("x"), rf("x+3"), rf("1")));
  EXPECT_EQ(norm("x=sqrt(x)+sqrt(2*x)"),
            RadicalEquation::form_d(rf("x"), rf("2*x"), rf("x")));
}

TEST(Normalize, ZeroRightHandSideKeepsLiteralForm) {
  EXPECT_EQ(norm("sqrt(x)+sqrt(x+1)=0"),
            RadicalEquation::form_d(rf("x"), rf("x+1"), rf("0")));
  EXPECT_EQ(norm("sqrt(x)-sqrt(x+1)=0"),
            RadicalEquation::form_f(rf("x"), rf("x+1"), rf("0")));
  EXPECT_EQ(norm("sqrt(x)=-sqrt(x+1)"), RadicalEquation::sum_zero({rf("x"), rf("x+1")}));
}

TEST(Normalize, ThreeRadicalSignPatterns) {
  EXPECT_EQ(norm("sqrt(x)-sqrt(x+1)=-sqrt(2*x)"),
            RadicalEquation::form_e(rf("x"), rf("2*x"), rf("x+1")));
  EXPECT_EQ(norm("sqrt(x)+sqrt(x+1)-sqrt(2*x)=0"),
            RadicalEquation::form_e(rf("x"), rf("x+1"), rf("2*x")));
  EXPECT_EQ(norm("-sqrt(x)-sqrt(x+1)=-sqrt(2*x)"),
            RadicalEquation::form_e(rf("x"), rf("x+1"), rf("2*x")));
  EXPECT_EQ(norm("sqrt(x)+sqrt(2*x)+sqrt(3*x)+sqrt(4*x)=0"),
            RadicalEquation::sum_zero({rf("x"), rf("2*x"), rf("3*x"), rf("4*x")}));
}

TEST(Normalize, RationalTermsMerge) {
  EXPECT_EQ(norm("sqrt(x)+x+1=2*x-3+x^2"),
            RadicalEquation::form_b(rf("x"), rf("x^2+x-4")));
  EXPECT_EQ(norm("sqrt(x)/2*2=1/x"), RadicalEquation::form_b(rf("x"), rf("1/x")));
}

TEST(Normalize, RejectsUnsupportedShapes) {
  for (const char *text :
       {"sqrt(sqrt(x))=1", "sqrt(x)*sqrt(x+1)=1", "1/sqrt(x)=1", "sqrt(x)^2=x",
        "sqrt(x)+sqrt(x+1)+sqrt(x+2)=1", "x=1", "sqrt(x)=1/(x-x)", "0*sqrt(x)=1",
        "sqrt(x)+sqrt(x+1)-sqrt(x+2)-sqrt(x+3)=0", "2*x*sqrt(x)+sqrt(x+1)=1",
        "(x+1)*sqrt(x)-x*sqrt(x)=2"})
    EXPECT_THROW(norm(text), UnsupportedForm) << text;
}

TEST(Normalize, ConstantCoefficientMessageSuggestsFolding) {
  try {
    norm("2*sqrt(x)=1");
    FAIL() << "expected UnsupportedForm";
  } catch (const UnsupportedForm &e) {
    EXPECT_NE(std::string(e.what()).find("sqrt(4*x)"), std::string::npos) << e.what();
  }
}

TEST(Normalize, RoundTripAndIdempotence) {
  for (Form form : {Form::roots, Form::b, Form::d, Form::e, Form::f, Form::hf, Form::sum_zero}) {
    for (std::uint64_t i = 0; i < 150; ++i) {
      const RadicalEquation eq = random_equation(derive_seed(99, i), form, 3);
      if (form == Form::hf && eq.h.is_constant())
        continue; // constant coefficients are folded or rejected by design
      const RadicalEquation back = norm(render(eq));
      EXPECT_EQ(back, eq) << render(eq);
      EXPECT_EQ(norm(render(back)), back);
    }
  }
}

TEST(Normalize, PreservesSolutionSets) {
  Rng rng(4242);
  int compared = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Form forms[] = {Form::roots, Form::b, Form::d, Form::e, Form::f, Form::hf};
    const Form form = forms[i % 6];
    const RadicalEquation eq = random_equation(derive_seed(7, i), form, 2);
    if (form == Form::hf && eq.h.is_constant())
      continue;
    // Reshuffle the surface: add a term to both sides, swap, negate.
    EquationAst ast = parse_equation(render(eq));
    const Expr extra = parse_expression(rng.polynomial(2).to_string());
    if (rng.between(0, 1))
      ast = {ast.lhs + extra, ast.rhs + extra};
    if (rng.between(0, 1))
      ast = {-ast.lhs, -ast.rhs};
    if (rng.between(0, 1))
      std::swap(ast.lhs, ast.rhs);
    const RadicalEquation n = normalize(ast);

    std::vector<double> xs;
    for (int k = 0; k < 50; ++k)
      xs.push_back(rng.rational(40, 8).get_d());
    for (const auto &c : solve(n).candidates)
      xs.push_back(c.value.to_double());
    for (double x : xs) {
      try {
        const double original = std::abs(eval_side(ast.lhs, x) - eval_side(ast.rhs, x));
        const double canonical = evaluate(n, x).complex_residual();
        EXPECT_EQ(original < 1e-9, canonical < 1e-9)
            << to_string(ast) << " vs " << render(n) << " at " << x;
        ++compared;
      } catch (const PoleEncountered &) {
      }
    }
  }
  EXPECT_GT(compared, 8000);
}

TEST(Form, NamesRoundTrip) {
  for (Form f : {Form::roots, Form::b, Form::d, Form::e, Form::f, Form::hf, Form::sum_zero})
    EXPECT_EQ(form_from_name(form_name(f)), f);
  EXPECT_EQ(std::string(form_name(Form::sum_zero)), "FormSumZero");
  EXPECT_FALSE(form_from_name("FormZ"));
}
