#include "radsolve/cli.hpp"

#include "radsolve/errors.hpp"
#include "radsolve/format.hpp"
#include "radsolve/parser.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace radsolve::cli {

std::vector<std::string> SweepRow::verdict_tuple() const {
  if (degenerate)
    return {"degenerate"};
  std::vector<std::string> t;
  for (const auto &c : report->candidates)
    t.emplace_back(to_string(c.verdict));
  if (report->strong.has_interval())
    t.emplace_back("strong_interval");
  if (report->formal && report->formal->has_interval())
    t.emplace_back("formal_interval");
  return t;
}

std::vector<Rational> sweep_grid(const SweepSpec &spec) {
  if (spec.step <= 0)
    throw std::invalid_argument("sweep step must be positive");
  if (spec.lo > spec.hi)
    throw std::invalid_argument("sweep needs from <= to");
  std::vector<Rational> grid;
  Rational v = spec.lo;
  if (spec.exclude_lo)
    v += spec.step;
  for (; v <= spec.hi; v += spec.step)
    grid.push_back(v);
  return grid;
}

namespace {

EquationAst parse_template(const SweepSpec &spec) {
  EquationAst ast = parse_equation(spec.template_text, ParseOptions{true});
  std::set<std::string> names = parameter_names(ast.lhs);
  names.merge(parameter_names(ast.rhs));
  for (const auto &n : names)
    if (n != spec.param && !spec.bindings.count(n))
      throw SyntaxError(0, {}, "parameter '" + n + "' is neither bound nor swept");
  if (spec.bindings.count(spec.param))
    throw SyntaxError(0, {}, "swept parameter '" + spec.param + "' is also bound");
  return ast;
}

SweepRow solve_row(const EquationAst &ast, const SweepSpec &spec, const Rational &value) {
  SweepRow row;
  row.value = value;
  std::map<std::string, Rational> b = spec.bindings;
  b[spec.param] = value;
  try {
    EquationAst inst{radsolve::bind(ast.lhs, b), radsolve::bind(ast.rhs, b)};
    row.report = solve(normalize(inst));
  } catch (const UnsupportedForm &e) {
    row.degenerate = true;
    row.reason = e.what();
  }
  return row;
}

} // namespace

SweepResult run_sweep(const SweepSpec &spec, unsigned threads) {
  const EquationAst ast = parse_template(spec);
  const std::vector<Rational> grid = sweep_grid(spec);

  SweepResult result;
  result.rows.resize(grid.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        result.rows[i] = solve_row(ast, spec, grid[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(grid.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);

  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    if (!result.regions.empty() &&
        result.rows[result.regions.back().last].verdict_tuple() ==
            result.rows[i].verdict_tuple())
      result.regions.back().last = i;
    else
      result.regions.push_back({i, i});
  }
  return result;
}

unsigned sweep_threads() {
  if (const char *env = std::getenv("RADSOLVE_THREADS")) {
    char *end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0)
      return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

std::size_t count_points(const RealSet &s) { return s.isolated_points().size(); }

Json row_json(const SweepSpec &spec, const SweepRow &row) {
  Json j;
  j[spec.param] = to_string(row.value);
  if (row.degenerate) {
    j["status"] = "degenerate";
    j["reason"] = row.reason;
    return j;
  }
  const SolutionReport &r = *row.report;
  j["status"] = "ok";
  j["form"] = form_name(r.equation.form);
  Json cands = Json::array();
  for (const auto &c : r.candidates) {
    Json cj;
    cj["approx"] = c.approx;
    cj["verdict"] = to_string(c.verdict);
    cj["failed"] = c.failed_labels();
    cands.push_back(std::move(cj));
  }
  j["candidates"] = std::move(cands);
  j["strong_count"] = count_points(r.strong);
  j["formal_count"] = r.formal ? Json(count_points(*r.formal)) : Json(nullptr);
  j["strong"] = r.strong.to_string();
  j["formal"] = r.formal ? Json(r.formal->to_string()) : Json(nullptr);
  return j;
}

} // namespace

Json sweep_json(const SweepSpec &spec, const SweepResult &result) {
  Json j;
  j["template"] = spec.template_text;
  Json bindings = Json::object();
  for (const auto &[k, v] : spec.bindings)
    bindings[k] = to_string(v);
  j["bindings"] = std::move(bindings);
  j["param"] = spec.param;
  j["from"] = to_string(spec.lo);
  j["to"] = to_string(spec.hi);
  j["step"] = to_string(spec.step);
  Json rows = Json::array();
  for (const auto &r : result.rows)
    rows.push_back(row_json(spec, r));
  j["rows"] = std::move(rows);
  Json regions = Json::array();
  for (const auto &g : result.regions) {
    Json rj;
    rj["from"] = to_string(result.rows[g.first].value);
    rj["to"] = to_string(result.rows[g.last].value);
    rj["rows"] = g.last - g.first + 1;
    rj["verdicts"] = result.rows[g.first].verdict_tuple();
    regions.push_back(std::move(rj));
  }
  j["regions"] = std::move(regions);
  return j;
}

namespace {

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s)
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string joined(const std::vector<std::string> &v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? ";" : "") + v[i];
  return out;
}

} // namespace

std::string sweep_csv(const SweepSpec &spec, const SweepResult &result) {
  std::ostringstream os;
  os << "record," << csv_field(spec.param) << ",to,status,form,verdicts,strong_count,"
     << "formal_count,strong,formal,reason\n";
  for (const auto &row : result.rows) {
    os << "row," << to_string(row.value) << ",,";
    if (row.degenerate) {
      os << "degenerate,,degenerate,,,,," << csv_field(row.reason) << "\n";
      continue;
    }
    const SolutionReport &r = *row.report;
    os << "ok," << form_name(r.equation.form) << "," << csv_field(joined(row.verdict_tuple()))
       << "," << count_points(r.strong) << ","
       << (r.formal ? std::to_string(count_points(*r.formal)) : "") << ","
       << csv_field(r.strong.to_string()) << ","
       << csv_field(r.formal ? r.formal->to_string() : "unsupported") << ",\n";
  }
  for (const auto &g : result.regions)
    os << "region," << to_string(result.rows[g.first].value) << ","
       << to_string(result.rows[g.last].value) << ",,,"
       << csv_field(joined(result.rows[g.first].verdict_tuple())) << ",,,,,\n";
  return os.str();
}

} // namespace radsolve::cli
