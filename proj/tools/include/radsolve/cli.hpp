#pragma once

#include "radsolve/oracle.hpp"
#include "radsolve/solver.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace radsolve::cli {

enum class ExitCode : int {
  ok = 0,
  internal = 1,
  syntax = 2,
  unsupported = 3,
  disagreement = 4,
};

/// Which solution sets a report shows. In strong mode formal-only
/// candidates are listed as rejected.
enum class Mode { strong, formal, both };

std::optional<Mode> parse_mode(std::string_view text);

using Json = nlohmann::ordered_json;

Json to_json(const AlgebraicReal &value);
Json to_json(const Endpoint &endpoint);
Json to_json(const Component &component);
Json to_json(const RealSet &set);
Json to_json(const SolutionReport &report, Mode mode);

/// One line: "strong: {12}; rejected: 2 (fails A1: g ≥ 0)".
std::string to_text(const SolutionReport &report, Mode mode);
/// Squaring chain, restriction sets and per-candidate verdicts.
std::string to_steps(const SolutionReport &report, Mode mode);

/// "A1: g ≥ 0" or "A1∩A2 [A1: f ≥ 0 ∧ g ≥ 0 ∧ h ≥ 0]" per failed clause.
std::string describe_failures(const SolutionReport &report, const Candidate &c);

struct SweepSpec {
  std::string template_text;
  std::map<std::string, Rational> bindings;
  std::string param;
  Rational lo;
  Rational hi;
  Rational step;
  bool exclude_lo = false;
};

struct SweepRow {
  Rational value;
  bool degenerate = false;
  std::string reason;
  std::optional<SolutionReport> report;

  /// Candidate verdicts in ascending order plus interval and status flags.
  std::vector<std::string> verdict_tuple() const;
};

struct SweepRegion {
  std::size_t first = 0;
  std::size_t last = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<SweepRegion> regions;
};

/// Grid values lo, lo + step, ... up to hi (lo dropped with exclude_lo).
std::vector<Rational> sweep_grid(const SweepSpec &spec);

/// Throws SyntaxError for a malformed template or missing bindings and
/// std::invalid_argument for a bad grid. Rows come back in grid order.
SweepResult run_sweep(const SweepSpec &spec, unsigned threads);

/// RADSOLVE_THREADS when set to a positive integer, else the hardware count.
unsigned sweep_threads();

Json sweep_json(const SweepSpec &spec, const SweepResult &result);
std::string sweep_csv(const SweepSpec &spec, const SweepResult &result);

struct CheckOutcome {
  std::vector<std::string> lines;
  std::vector<std::string> mismatches;

  bool agree() const { return mismatches.empty(); }
};

/// Referees a report with the numeric oracle: every isolated candidate,
/// a scan of [-50, 50] at step 1e-3 and `samples` random points in each
/// interval component. Works on any report, including tampered ones.
CheckOutcome check_report(const SolutionReport &report, int samples, std::uint64_t seed);

/// ok on agreement, disagreement otherwise.
ExitCode verify_exit_code(const CheckOutcome &outcome);

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CommandResult cmd_solve(std::string_view equation, Mode mode, std::string_view format);
CommandResult cmd_sweep(const SweepSpec &spec, std::string_view format);
CommandResult cmd_verify(std::string_view equation, int samples, std::uint64_t seed,
                         std::string_view format);

/// Entry point shared by the executable and the tests.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace radsolve::cli
