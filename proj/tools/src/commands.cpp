#include "radsolve/cli.hpp"

#include "radsolve/errors.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace radsolve::cli {

namespace {

template <class F> CommandResult guarded(F &&body) {
  CommandResult r;
  try {
    body(r);
  } catch (const SyntaxError &e) {
    r = {static_cast<int>(ExitCode::syntax), "", std::string("error: ") + e.what() + "\n"};
  } catch (const UnsupportedForm &e) {
    r = {static_cast<int>(ExitCode::unsupported), "",
         std::string("error: unsupported form: ") + e.what() + "\n"};
  } catch (const std::exception &e) {
    r = {static_cast<int>(ExitCode::internal), "",
         std::string("internal error: ") + e.what() + "\n"};
  }
  return r;
}

} // namespace

ExitCode verify_exit_code(const CheckOutcome &outcome) {
  return outcome.agree() ? ExitCode::ok : ExitCode::disagreement;
}

CommandResult cmd_solve(std::string_view equation, Mode mode, std::string_view format) {
  return guarded([&](CommandResult &r) {
    const SolutionReport report = solve(parse_radical_equation(equation));
    if (format == "json")
      r.out = to_json(report, mode).dump(2) + "\n";
    else if (format == "text")
      r.out = to_text(report, mode);
    else if (format == "steps")
      r.out = to_steps(report, mode);
    else
      throw SyntaxError(0, {"json", "text", "steps"},
                        "unknown format '" + std::string(format) + "'");
  });
}

CommandResult cmd_sweep(const SweepSpec &spec, std::string_view format) {
  return guarded([&](CommandResult &r) {
    if (format != "json" && format != "csv")
      throw SyntaxError(0, {"json", "csv"}, "unknown format '" + std::string(format) + "'");
    SweepResult result;
    try {
      result = run_sweep(spec, sweep_threads());
    } catch (const std::invalid_argument &e) {
      throw SyntaxError(0, {}, e.what());
    }
    bool any_ok = false;
    for (const auto &row : result.rows)
      any_ok = any_ok || !row.degenerate;
    if (!any_ok && !result.rows.empty())
      throw UnsupportedForm("every grid point is degenerate: " + result.rows.front().reason);
    r.out = format == "json" ? sweep_json(spec, result).dump(2) + "\n" : sweep_csv(spec, result);
  });
}

CommandResult cmd_verify(std::string_view equation, int samples, std::uint64_t seed,
                         std::string_view format) {
  return guarded([&](CommandResult &r) {
    if (format != "json" && format != "text")
      throw SyntaxError(0, {"json", "text"}, "unknown format '" + std::string(format) + "'");
    const SolutionReport report = solve(parse_radical_equation(equation));
    const CheckOutcome outcome = check_report(report, samples, seed);
    if (format == "json") {
      Json j;
      j["equation"] = render(report.equation);
      j["form"] = form_name(report.equation.form);
      j["checks"] = outcome.lines;
      j["mismatches"] = outcome.mismatches;
      j["agree"] = outcome.agree();
      r.out = j.dump(2) + "\n";
    } else {
      for (const auto &l : outcome.lines)
        r.out += l + "\n";
      for (const auto &m : outcome.mismatches)
        r.out += "MISMATCH: " + m + "\n";
      r.out += outcome.agree() ? "agreement: solver and oracle agree\n"
                               : "disagreement: " + std::to_string(outcome.mismatches.size()) +
                                     " mismatch(es)\n";
    }
    r.exit_code = static_cast<int>(verify_exit_code(outcome));
  });
}

namespace {

Rational rational_option(const std::string &name, const std::string &text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument &) {
    throw SyntaxError(0, {"rational"}, "option " + name + ": not a rational: '" + text + "'");
  }
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact solver for radical equations of depth at most two"};
  app.require_subcommand(1);

  std::string equation;
  std::string mode_text = "strong";
  std::string format = "text";
  auto *solve_cmd = app.add_subcommand("solve", "Solve one equation");
  solve_cmd->add_option("equation", equation, "Equation, e.g. \"sqrt(4*x+1)=x-5\"")->required();
  solve_cmd->add_option("--mode", mode_text, "strong, formal or both")
      ->check(CLI::IsMember({"strong", "formal", "both"}));
  solve_cmd->add_option("--format", format, "json, text or steps")
      ->check(CLI::IsMember({"json", "text", "steps"}));

  std::string tmpl;
  std::string param;
  std::string from;
  std::string to;
  std::string step;
  std::vector<std::string> sets;
  std::string sweep_format = "json";
  bool exclude_from = false;
  auto *sweep_cmd = app.add_subcommand("sweep", "Solve a template over a parameter grid");
  sweep_cmd->add_option("template", tmpl, "Equation with parameter identifiers")->required();
  sweep_cmd->add_option("--param", param, "Swept parameter")->required();
  sweep_cmd->add_option("--from", from, "First grid value (rational)")->required();
  sweep_cmd->add_option("--to", to, "Last grid value (rational)")->required();
  sweep_cmd->add_option("--step", step, "Grid step (positive rational)")->required();
  sweep_cmd->add_option("--set", sets, "Fixed binding name=value, repeatable");
  sweep_cmd->add_flag("--exclude-from", exclude_from, "Open the grid at --from");
  sweep_cmd->add_option("--format", sweep_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  int samples = 32;
  std::uint64_t seed = 1;
  std::string verify_format = "text";
  auto *verify_cmd = app.add_subcommand("verify", "Cross-check a solution with the oracle");
  verify_cmd->add_option("equation", equation, "Equation to solve and verify")->required();
  verify_cmd->add_option("--samples", samples, "Random samples per interval component")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", seed, "Sampling seed");
  verify_cmd->add_option("--format", verify_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::syntax);
  }

  CommandResult result;
  if (*solve_cmd) {
    result = cmd_solve(equation, *parse_mode(mode_text), format);
  } else if (*sweep_cmd) {
    result = guarded([&](CommandResult &r) {
      SweepSpec spec;
      spec.template_text = tmpl;
      spec.param = param;
      spec.lo = rational_option("--from", from);
      spec.hi = rational_option("--to", to);
      spec.step = rational_option("--step", step);
      spec.exclude_lo = exclude_from;
      for (const auto &s : sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
          throw SyntaxError(0, {"name=value"}, "option --set: expected name=value, got '" + s + "'");
        spec.bindings[s.substr(0, eq)] = rational_option("--set", s.substr(eq + 1));
      }
      r = cmd_sweep(spec, sweep_format);
    });
  } else {
    result = cmd_verify(equation, samples, seed, verify_format);
  }
  out << result.out;
  err << result.err;
  return result.exit_code;
}

} // namespace radsolve::cli
