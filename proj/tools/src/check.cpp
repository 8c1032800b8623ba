#include "radsolve/cli.hpp"

#include "radsolve/errors.hpp"
#include "radsolve/format.hpp"

#include <cmath>
#include <cstdio>
#include <random>

namespace radsolve::cli {

namespace {

constexpr double tolerance = 1e-9;
constexpr double scan_lo = -50.0;
constexpr double scan_hi = 50.0;
constexpr double scan_step = 1e-3;
constexpr double scan_match = 1e-6;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

OracleVerdict expected(Verdict v) {
  switch (v) {
  case Verdict::strong:
    return OracleVerdict::strong;
  case Verdict::formal_only:
    return OracleVerdict::formal_only;
  case Verdict::rejected:
    break;
  }
  return OracleVerdict::neither;
}

/// Finite bounds used to sample a component; unbounded ends are cut at +-50.
std::pair<double, double> sample_window(const Component &c) {
  double lo = c.lo.is_finite() ? c.lo.value.to_double() : scan_lo;
  double hi = c.hi.is_finite() ? c.hi.value.to_double() : scan_hi;
  if (!c.lo.is_finite() && hi <= lo)
    lo = hi - 100.0;
  if (!c.hi.is_finite() && hi <= lo)
    hi = lo + 100.0;
  return {lo, hi};
}

void check_intervals(const SolutionReport &report, const RealSet &set, bool formal,
                     int samples, std::uint64_t seed, CheckOutcome &out, int &checked) {
  std::size_t index = 0;
  for (const Component &c : set.components()) {
    ++index;
    if (c.is_point())
      continue;
    std::mt19937_64 rng(derive_seed(seed, index + (formal ? 1000 : 0)));
    const auto [lo, hi] = sample_window(c);
    for (int k = 0; k < samples; ++k) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      const Rational x(lo + (hi - lo) * u);
      if (!set.contains(AlgebraicReal(x)))
        continue;
      ++checked;
      const OracleVerdict want = report.strong.contains(AlgebraicReal(x))
                                     ? OracleVerdict::strong
                                     : OracleVerdict::formal_only;
      OracleVerdict got = OracleVerdict::neither;
      try {
        got = verify(report.equation, AlgebraicReal(x), tolerance);
      } catch (const Error &e) {
        out.mismatches.push_back("sample x = " + sci(x.get_d()) +
                                 ": evaluation failed: " + e.what());
        continue;
      }
      if (got != want)
        out.mismatches.push_back("sample x = " + sci(x.get_d()) + " in " +
                                 (formal ? "formal" : "strong") + " set: solver " +
                                 to_string(want) + ", oracle " + to_string(got));
    }
  }
}

} // namespace

CheckOutcome check_report(const SolutionReport &report, int samples, std::uint64_t seed) {
  CheckOutcome out;
  const RadicalEquation &eq = report.equation;

  for (const auto &c : report.candidates) {
    std::string head = "x = " + format_value(c.value) + ": solver " + to_string(c.verdict);
    try {
      const VerifyResult v = verify_detail(eq, c.value, tolerance);
      std::string line = head + ", oracle " + to_string(v.verdict) + " (real residual " +
                         sci(v.real_residual) + ", complex residual " +
                         sci(v.complex_residual) + ")";
      if (v.verdict != expected(c.verdict))
        out.mismatches.push_back(line);
      out.lines.push_back(std::move(line));
    } catch (const Error &e) {
      out.mismatches.push_back(head + ", oracle evaluation failed: " + e.what());
    }
  }

  const ScanResult sc = scan(eq, scan_lo, scan_hi, scan_step);
  for (double s : sc.solutions)
    if (distance(report.strong, s) > scan_match)
      out.mismatches.push_back("scan found x ≈ " + sci(s) + " outside the strong set");
  for (const auto &[a, b] : sc.intervals)
    for (double s : {a, 0.5 * (a + b), b})
      if (distance(report.strong, s) > scan_match)
        out.mismatches.push_back("scan found solution interval point x ≈ " + sci(s) +
                                 " outside the strong set");
  out.lines.push_back("scan [-50, 50] step 1e-3: " + std::to_string(sc.solutions.size()) +
                      " isolated solution(s), " + std::to_string(sc.intervals.size()) +
                      " solution interval(s)");

  int checked = 0;
  check_intervals(report, report.strong, false, samples, seed, out, checked);
  if (report.formal)
    check_intervals(report, *report.formal, true, samples, seed, out, checked);
  if (report.strong.has_interval() || (report.formal && report.formal->has_interval()))
    out.lines.push_back("interval solutions verified by sampling (" + std::to_string(checked) +
                        " points)");
  return out;
}

} // namespace radsolve::cli
