#pragma once

#include "radsolve/algebraic.hpp"
#include "radsolve/equation.hpp"
#include "radsolve/realset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace radsolve {

/// A named sign condition, e.g. A1 = { g >= 0 }.
struct Restriction {
  std::string name;
  std::string description;
  RealSet set;
};

/// Intersection of S0 (optionally) with named restrictions.
struct Clause {
  bool with_s0 = true;
  std::vector<std::string> names;

  /// "A1∩A2", "S0" for a bare S0 clause, "B1" for a clause without S0.
  std::string label() const;
};

/// Union of clauses.
using Formula = std::vector<Clause>;

std::string to_string(const Formula &formula);

struct RestrictionSystem {
  /// Candidate set: zeros of the radical-free identity inside the domain.
  RealSet s0;
  /// The function whose zero set (within the domain) is s0.
  RationalFunction s0_function;
  std::string s0_description;
  /// Common domain of every payload function (the reals minus poles).
  RealSet domain;
  std::vector<Restriction> restrictions;
  Formula strong_formula;
  /// Absent when formal solutions are not supported for the form.
  std::optional<Formula> formal_formula;
  /// Human-readable squaring chain, first line is the equation itself.
  std::vector<std::string> squaring;

  const Restriction &restriction(const std::string &name) const;
  RealSet evaluate(const Formula &formula) const;
  bool satisfies(const Clause &clause, const AlgebraicReal &x) const;
};

RestrictionSystem solve_form_b(const RationalFunction &f, const RationalFunction &g);
RestrictionSystem solve_form_roots(const RationalFunction &f, const RationalFunction &g);
RestrictionSystem solve_form_d(const RationalFunction &f, const RationalFunction &g,
                               const RationalFunction &h);
RestrictionSystem solve_form_e(const RationalFunction &f, const RationalFunction &g,
                               const RationalFunction &h);
RestrictionSystem solve_form_hf(const RationalFunction &h, const RationalFunction &f,
                                const RationalFunction &g);
RestrictionSystem solve_form_f(const RationalFunction &f, const RationalFunction &g,
                               const RationalFunction &h);
RestrictionSystem solve_form_sum_zero(const std::vector<RationalFunction> &fs);

RestrictionSystem restriction_system(const RadicalEquation &eq);

enum class Verdict { strong, formal_only, rejected };

const char *to_string(Verdict verdict);

struct FailedClause {
  std::string label;
  /// Members of the clause the candidate violates ("S0" included if so).
  std::vector<std::string> violated;
};

struct Candidate {
  AlgebraicReal value;
  std::string approx;
  Verdict verdict = Verdict::rejected;
  /// Failing strong clauses, then failing formal clauses; labels unique.
  std::vector<FailedClause> failed;

  /// Labels of the failing clauses.
  std::vector<std::string> failed_labels() const;
};

struct SolutionReport {
  RadicalEquation equation;
  RestrictionSystem system;
  RealSet strong;
  /// Absent when formal solutions are not supported for the form.
  std::optional<RealSet> formal;
  /// Isolated points of S0, strong and formal, ascending.
  std::vector<Candidate> candidates;
  std::vector<std::string> notes;
};

SolutionReport solve(const RadicalEquation &eq);

/// Position of a rational relative to the two real roots of a quadratic.
enum class Location { left_of_both, between, right_of_both, at_root };

const char *to_string(Location location);

/// Decided from the sign of q(xi) and, when positive, the vertex abscissa.
/// Throws DegenerateQuadratic unless deg q = 2 with positive discriminant.
Location locate_vs_quadratic(const Polynomial &q, const Rational &xi);

} // namespace radsolve
