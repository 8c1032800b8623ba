#include "radsolve/cli.hpp"

#include "radsolve/format.hpp"

#include <sstream>

namespace radsolve::cli {

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "strong")
    return Mode::strong;
  if (text == "formal")
    return Mode::formal;
  if (text == "both")
    return Mode::both;
  return std::nullopt;
}

namespace {

bool shows_strong(Mode m) { return m != Mode::formal; }
bool shows_formal(Mode m) { return m != Mode::strong; }

/// Verdict as seen in a mode: strong mode has no formal-only class.
Verdict shown(Verdict v, Mode m) {
  return v == Verdict::formal_only && m == Mode::strong ? Verdict::rejected : v;
}

} // namespace

Json to_json(const AlgebraicReal &value) {
  Json coeffs = Json::array();
  for (const auto &c : value.defining().integer_coefficients())
    coeffs.push_back(c.get_str());
  Json j;
  j["defining_coeffs"] = std::move(coeffs);
  j["iso_lo"] = to_string(value.lo());
  j["iso_hi"] = to_string(value.hi());
  j["approx"] = format_approx(value);
  return j;
}

Json to_json(const Endpoint &endpoint) {
  switch (endpoint.kind) {
  case Endpoint::Kind::neg_inf:
    return "-inf";
  case Endpoint::Kind::pos_inf:
    return "+inf";
  case Endpoint::Kind::finite:
    break;
  }
  return to_json(endpoint.value);
}

Json to_json(const Component &component) {
  Json j;
  j["kind"] = component.is_point() ? "point" : "interval";
  j["lo"] = to_json(component.lo);
  j["hi"] = to_json(component.hi);
  j["lo_closed"] = component.lo_closed;
  j["hi_closed"] = component.hi_closed;
  return j;
}

Json to_json(const RealSet &set) {
  Json j = Json::array();
  for (const auto &c : set.components())
    j.push_back(to_json(c));
  return j;
}

Json to_json(const SolutionReport &report, Mode mode) {
  Json j;
  j["equation"] = render(report.equation);
  j["form"] = form_name(report.equation.form);
  j["strong"] = shows_strong(mode) ? to_json(report.strong) : Json(nullptr);
  j["formal"] = shows_formal(mode) && report.formal ? to_json(*report.formal) : Json(nullptr);
  Json cands = Json::array();
  for (const auto &c : report.candidates) {
    Json cj = to_json(c.value);
    cj["verdict"] = to_string(shown(c.verdict, mode));
    Json failed = Json::array();
    if (c.verdict != Verdict::strong)
      for (const auto &l : c.failed_labels())
        failed.push_back(l);
    cj["failed"] = std::move(failed);
    cands.push_back(std::move(cj));
  }
  j["candidates"] = std::move(cands);
  j["notes"] = report.notes;
  return j;
}

std::string describe_failures(const SolutionReport &report, const Candidate &c) {
  auto describe = [&](const std::string &name) {
    if (name == "S0")
      return "S0: " + report.system.s0_description;
    return name + ": " + report.system.restriction(name).description;
  };
  std::string out;
  for (const auto &f : c.failed) {
    if (!out.empty())
      out += ", ";
    if (f.violated.size() == 1 && f.violated[0] == f.label) {
      out += describe(f.label);
      continue;
    }
    out += f.label + " [";
    for (std::size_t i = 0; i < f.violated.size(); ++i)
      out += (i ? "; " : "") + describe(f.violated[i]);
    out += "]";
  }
  return out;
}

namespace {

std::string candidate_list(const SolutionReport &report, Verdict verdict, Mode mode) {
  std::string out;
  for (const auto &c : report.candidates) {
    if (shown(c.verdict, mode) != verdict)
      continue;
    if (!out.empty())
      out += ", ";
    out += format_value(c.value) + " (fails " + describe_failures(report, c) + ")";
  }
  return out;
}

} // namespace

std::string to_text(const SolutionReport &report, Mode mode) {
  std::vector<std::string> parts;
  if (shows_strong(mode))
    parts.push_back("strong: " + report.strong.to_string());
  if (shows_formal(mode))
    parts.push_back("formal: " +
                    (report.formal ? report.formal->to_string() : std::string("unsupported")));
  if (shows_formal(mode)) {
    std::string fo = candidate_list(report, Verdict::formal_only, mode);
    if (!fo.empty())
      parts.push_back("formal_only: " + fo);
  }
  std::string rej = candidate_list(report, Verdict::rejected, mode);
  if (!rej.empty())
    parts.push_back("rejected: " + rej);

  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    out += (i ? "; " : "") + parts[i];
  out += "\n";
  for (const auto &n : report.notes)
    out += "note: " + n + "\n";
  return out;
}

namespace {

const char *shape(Form form) {
  switch (form) {
  case Form::roots:
    return "√f = √g";
  case Form::b:
    return "√f = g";
  case Form::d:
    return "√f + √g = h";
  case Form::e:
    return "√f + √g = √h";
  case Form::f:
    return "√f - √g = h";
  case Form::hf:
    return "h√f = g";
  case Form::sum_zero:
    return "√f1 + … + √fn = 0";
  }
  return "?";
}

std::string fn_text(const RationalFunction &r) {
  return r.is_polynomial() ? r.num().to_string() : r.to_string();
}

} // namespace

std::string to_steps(const SolutionReport &report, Mode mode) {
  const RadicalEquation &eq = report.equation;
  const RestrictionSystem &sys = report.system;
  std::ostringstream os;
  os << "equation: " << render(eq) << "\n";
  os << "form: " << form_name(eq.form) << " (" << shape(eq.form) << ")\n";
  if (eq.form == Form::sum_zero) {
    for (std::size_t i = 0; i < eq.terms.size(); ++i)
      os << "  f" << i + 1 << " = " << fn_text(eq.terms[i]) << "\n";
  } else {
    os << "  f = " << fn_text(eq.f) << "\n";
    os << "  g = " << fn_text(eq.g) << "\n";
    if (eq.form != Form::b && eq.form != Form::roots)
      os << "  h = " << fn_text(eq.h) << "\n";
  }
  os << "squaring chain:\n";
  for (const auto &s : sys.squaring)
    os << "  " << s << "\n";
  if (!sys.domain.is_all())
    os << "domain: " << sys.domain.to_string() << "\n";
  os << "S0 = { " << sys.s0_description << " } = " << sys.s0.to_string() << "\n";
  os << "restrictions:\n";
  for (const auto &r : sys.restrictions)
    os << "  " << r.name << " = { " << r.description << " } = " << r.set.to_string() << "\n";
  if (shows_strong(mode))
    os << "strong = " << to_string(sys.strong_formula) << " = " << report.strong.to_string()
       << "\n";
  if (shows_formal(mode)) {
    if (sys.formal_formula)
      os << "formal = " << to_string(*sys.formal_formula) << " = "
         << report.formal->to_string() << "\n";
    else
      os << "formal = unsupported\n";
  }
  os << "candidates:\n";
  if (report.candidates.empty())
    os << "  (none)\n";
  for (const auto &c : report.candidates) {
    os << "  x = " << format_value(c.value) << ": " << to_string(shown(c.verdict, mode));
    if (c.verdict != Verdict::strong)
      os << " (fails " << describe_failures(report, c) << ")";
    os << "\n";
  }
  for (const auto &n : report.notes)
    os << "note: " << n << "\n";
  return os.str();
}

} // namespace radsolve::cli
