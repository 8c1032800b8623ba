#include "support.hpp"

#include "radsolve/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

using namespace radsolve;
using namespace radsolve::cli;
using namespace radsolve::test;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run_args(std::vector<const char *> args) {
  args.insert(args.begin(), "radsolve");
  std::ostringstream out, err;
  const int code = run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

SweepSpec three_root_sweep() {
  SweepSpec s;
  s.template_text = "sqrt(x+1)+sqrt(x-1)=sqrt(x+b)";
  s.param = "b";
  s.lo = -4;
  s.hi = 4;
  s.step = Rational(1, 8);
  return s;
}

} // namespace

TEST(Solve, ClassicText) {
  const Invocation r = run_args({"solve", "sqrt(4*x+1)=x-5", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "strong: {12}; rejected: 2 (fails A1: g ≥ 0)\n");
}

TEST(Solve, FormalModesOnClassicRoots) {
  EXPECT_EQ(cmd_solve("sqrt(1-3*x)=sqrt(x-7)", Mode::strong, "text").out,
            "strong: ∅; rejected: 2 (fails A1: f ≥ 0)\n");
  EXPECT_EQ(cmd_solve("sqrt(1-3*x)=sqrt(x-7)", Mode::both, "text").out,
            "strong: ∅; formal: {2}; formal_only: 2 (fails A1: f ≥ 0)\n");
}

TEST(Solve, ExitCodes) {
  EXPECT_EQ(run_args({"solve", "sqrt(sqrt(x))=1"}).code, 3);
  const Invocation syntax = run_args({"solve", "sqrt(x+=1"});
  EXPECT_EQ(syntax.code, 2);
  EXPECT_NE(syntax.err.find("offset 7"), std::string::npos);
  EXPECT_EQ(run_args({"solve", "2*sqrt(x)=1"}).code, 3);
  EXPECT_EQ(run_args({"solve"}).code, 2);
  EXPECT_EQ(run_args({"frobnicate"}).code, 2);
  EXPECT_EQ(run_args({"solve", "x=1", "--mode", "sideways"}).code, 2);
}

TEST(Solve, JsonSchemaAndCandidate) {
  const Invocation r = run_args({"solve", "sqrt(x+1)+sqrt(x-1)=sqrt(x+2)", "--mode", "both", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto &[k, v] : j.items())
    keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"equation", "form", "strong", "formal", "candidates", "notes"}));
  EXPECT_EQ(j["form"], "FormE");
  ASSERT_EQ(j["strong"].size(), 1u);
  EXPECT_EQ(j["strong"][0]["lo"]["approx"], "1.09716754071");
  ASSERT_EQ(j["candidates"].size(), 2u);
  EXPECT_EQ(j["candidates"][1]["verdict"], "strong");
  EXPECT_EQ(j["candidates"][1]["defining_coeffs"], Json::parse(R"(["-8","4","3"])"));
  EXPECT_EQ(j["candidates"][0]["failed"], Json::parse(R"(["A1∩A2","A3∩A4"])"));
}

TEST(Solve, JsonIsByteDeterministic) {
  for (const char *eq : {"sqrt(x+1)+sqrt(x-1)=sqrt(x+2)", "sqrt(x^2)+sqrt(x^2)=2*x",
                         "sqrt(-x)-sqrt(x-2)=x-1", "x*sqrt(x+1)=x^2-1"})
    for (Mode m : {Mode::strong, Mode::formal, Mode::both})
      EXPECT_EQ(cmd_solve(eq, m, "json").out, cmd_solve(eq, m, "json").out) << eq;
}

TEST(Solve, StrongModeIsSubsetOfFormalMode) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    for (Form form : {Form::b, Form::d, Form::e, Form::f, Form::hf}) {
      const SolutionReport r = solve(random_equation(derive_seed(404, i), form, 2));
      const Json strong = to_json(r, Mode::strong);
      const Json formal = to_json(r, Mode::formal);
      EXPECT_TRUE(formal["strong"].is_null());
      EXPECT_TRUE(strong["formal"].is_null());
      EXPECT_TRUE(r.strong.is_subset_of(*r.formal));
      for (std::size_t k = 0; k < r.candidates.size(); ++k) {
        const std::string s = strong["candidates"][k]["verdict"];
        const std::string f = formal["candidates"][k]["verdict"];
        if (s == "strong")
          EXPECT_NE(f, "rejected");
        EXPECT_NE(s, "formal_only");
      }
    }
  }
}

TEST(Solve, StepsNameSetsAndFailures) {
  const std::string steps = cmd_solve("sqrt(4*x+1)=x-5", Mode::both, "steps").out;
  for (const char *piece : {"squaring chain:", "S0 = {", "A1", "g ≥ 0", "12", "rejected"})
    EXPECT_NE(steps.find(piece), std::string::npos) << piece << "\n" << steps;
}

TEST(Sweep, ThreeRootRegions) {
  const SweepResult res = run_sweep(three_root_sweep(), 2);
  ASSERT_EQ(res.rows.size(), 65u);
  ASSERT_EQ(res.regions.size(), 3u);
  auto value_at = [&](std::size_t i) { return res.rows[i].value; };
  EXPECT_EQ(value_at(res.regions[0].last), Rational(-1));
  EXPECT_EQ(value_at(res.regions[1].first), Rational(-7, 8));
  EXPECT_EQ(value_at(res.regions[1].last), Rational(7, 8));
  EXPECT_EQ(value_at(res.regions[2].first), Rational(1));
  EXPECT_EQ(res.rows.front().verdict_tuple()[0], "formal_only");
  EXPECT_EQ(res.rows.back().verdict_tuple()[1], "strong");
}

TEST(Sweep, RegionsAreMaximalRuns) {
  const SweepResult res = run_sweep(three_root_sweep(), 3);
  std::size_t expected = 0;
  for (const auto &region : res.regions) {
    EXPECT_EQ(region.first, expected);
    for (std::size_t i = region.first; i <= region.last; ++i)
      EXPECT_EQ(res.rows[i].verdict_tuple(), res.rows[region.first].verdict_tuple());
    if (region.last + 1 < res.rows.size())
      EXPECT_NE(res.rows[region.last + 1].verdict_tuple(), res.rows[region.last].verdict_tuple());
    expected = region.last + 1;
  }
  EXPECT_EQ(expected, res.rows.size());
}

TEST(Sweep, ThreadCountDoesNotChangeOutput) {
  const SweepSpec spec = three_root_sweep();
  const std::string one = sweep_json(spec, run_sweep(spec, 1)).dump();
  for (unsigned t : {2u, 5u, 16u})
    EXPECT_EQ(sweep_json(spec, run_sweep(spec, t)).dump(), one);
  EXPECT_EQ(sweep_csv(spec, run_sweep(spec, 7)), sweep_csv(spec, run_sweep(spec, 1)));
}

TEST(Sweep, ThreadsFromEnvironment) {
  ::setenv("RADSOLVE_THREADS", "3", 1);
  EXPECT_EQ(sweep_threads(), 3u);
  ::setenv("RADSOLVE_THREADS", "zero", 1);
  EXPECT_GE(sweep_threads(), 1u);
  ::unsetenv("RADSOLVE_THREADS");
  EXPECT_GE(sweep_threads(), 1u);
}

TEST(Sweep, OppositeRootsOpenGrid) {
  SweepSpec s;
  s.template_text = "sqrt(2*a-x)-sqrt(x-2*b)=x-(a+b)";
  s.bindings = {{"a", Rational(0)}};
  s.param = "b";
  s.lo = 0;
  s.hi = 3;
  s.step = Rational(1, 4);
  s.exclude_lo = true;
  const SweepResult res = run_sweep(s, 2);
  ASSERT_EQ(res.rows.size(), 12u);
  for (const auto &row : res.rows) {
    ASSERT_TRUE(row.report);
    EXPECT_TRUE(row.report->strong.is_empty());
    EXPECT_EQ(*row.report->formal, RealSet::points({AlgebraicReal(row.value)}));
  }
}

TEST(Sweep, DegenerateRowsKeepGoing) {
  SweepSpec s;
  s.template_text = "b*sqrt(x)+sqrt(x+1)=1";
  s.param = "b";
  s.lo = -1;
  s.hi = 2;
  s.step = 1;
  const SweepResult res = run_sweep(s, 2);
  ASSERT_EQ(res.rows.size(), 4u);
  EXPECT_EQ(res.rows[0].report->equation.form, Form::f);
  EXPECT_EQ(res.rows[1].report->equation.form, Form::b);
  EXPECT_EQ(res.rows[2].report->equation.form, Form::d);
  EXPECT_TRUE(res.rows[3].degenerate);
  EXPECT_FALSE(res.rows[3].report.has_value());
  EXPECT_NE(res.rows[3].reason.find("fold constants"), std::string::npos);
  EXPECT_EQ(res.rows[3].verdict_tuple(), std::vector<std::string>{"degenerate"});
}

TEST(Sweep, CsvShape) {
  SweepSpec s = three_root_sweep();
  s.lo = -2;
  s.hi = 2;
  s.step = 1;
  EXPECT_EQ(sweep_csv(s, run_sweep(s, 1)),
            "record,b,to,status,form,verdicts,strong_count,formal_count,strong,formal,reason\n"
            "row,-2,,ok,FormE,formal_only;rejected,0,1,∅,{≈-1.09716754071},\n"
            "row,-1,,ok,FormE,formal_only;rejected,0,1,∅,{-1},\n"
            "row,0,,ok,FormE,rejected;rejected,0,0,∅,∅,\n"
            "row,1,,ok,FormE,rejected;strong,1,1,{1},{1},\n"
            "row,2,,ok,FormE,rejected;strong,1,1,{≈1.09716754071},{≈1.09716754071},\n"
            "region,-2,-1,,,formal_only;rejected,,,,,\n"
            "region,0,0,,,rejected;rejected,,,,,\n"
            "region,1,2,,,rejected;strong,,,,,\n");
}

TEST(Sweep, CommandErrors) {
  EXPECT_EQ(run_args({"sweep", "sqrt(x+a)=b", "--param", "b", "--from", "0", "--to", "1", "--step", "1"}).code, 2);
  EXPECT_EQ(run_args({"sweep", "sqrt(x)=b", "--param", "b", "--from", "0", "--to", "1", "--step", "0"}).code, 2);
  EXPECT_EQ(run_args({"sweep", "sqrt(x)=b", "--param", "b", "--from", "1", "--to", "0", "--step", "1"}).code, 2);
  EXPECT_EQ(run_args({"sweep", "sqrt(sqrt(x))=b", "--param", "b", "--from", "0", "--to", "1", "--step", "1"}).code, 3);
  EXPECT_EQ(run_args({"sweep", "sqrt(x)=b", "--param", "b", "--from", "0", "--to", "1", "--step", "1/2",
                      "--format", "csv"}).code, 0);
}

TEST(Verify, ThreeRootAgrees) {
  const Invocation r = run_args({"verify", "sqrt(x+1)+sqrt(x-1)=sqrt(x+2)"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("agreement"), std::string::npos);
}

TEST(Verify, IdentityNotesSampling) {
  const Invocation r = run_args({"verify", "sqrt(x^2)+sqrt(x^2)=2*x", "--samples", "16"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("interval solutions verified by sampling"), std::string::npos);
}

TEST(Verify, CorruptedReportIsCaught) {
  SolutionReport report = solve(parse_radical_equation("sqrt(4*x+1)=x-5"));
  ASSERT_TRUE(verify_exit_code(check_report(report, 8, 1)) == ExitCode::ok);

  SolutionReport flipped = report;
  flipped.candidates[0].verdict = Verdict::strong;
  const CheckOutcome a = check_report(flipped, 8, 1);
  EXPECT_FALSE(a.agree());
  EXPECT_EQ(verify_exit_code(a), ExitCode::disagreement);

  SolutionReport missing = report;
  missing.strong = RealSet::empty();
  missing.candidates.pop_back();
  EXPECT_EQ(verify_exit_code(check_report(missing, 8, 1)), ExitCode::disagreement);
}
