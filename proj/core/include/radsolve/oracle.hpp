#pragma once

#include "radsolve/algebraic.hpp"
#include "radsolve/equation.hpp"
#include "radsolve/expr.hpp"
#include "radsolve/realset.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace radsolve {

using ComplexVal = std::complex<double>;

/// Principal branch; a negative real r maps to +i*sqrt(-r) whatever the sign
/// of its zero imaginary part.
ComplexVal principal_sqrt(ComplexVal z);

/// Complex evaluation of an expression at a real point.
/// Throws PoleEncountered when a divisor has magnitude below 1e-15 and
/// NonFinite when an intermediate value overflows.
ComplexVal eval_side(const Expr &e, double x);

/// Both sides of a canonical equation and its radicands at one point.
struct Evaluation {
  ComplexVal lhs;
  ComplexVal rhs;
  std::vector<double> radicands;

  double complex_residual() const { return std::abs(lhs - rhs); }
};

/// Payloads evaluated in floating point.
Evaluation evaluate(const RadicalEquation &eq, double x);
/// Payloads evaluated exactly, then rounded once.
Evaluation evaluate(const RadicalEquation &eq, const Rational &x);

enum class OracleVerdict { strong, formal_only, neither };

const char *to_string(OracleVerdict verdict);

struct VerifyResult {
  OracleVerdict verdict = OracleVerdict::neither;
  double real_residual = 0;    // infinity when some radicand is below -tol
  double complex_residual = 0;
  double min_radicand = 0;
};

/// Numeric referee for one candidate. The candidate is refined to an interval
/// of width 1e-40 and payloads are evaluated exactly at its midpoint, so
/// radicands that vanish at the candidate stay within rounding of zero.
VerifyResult verify_detail(const RadicalEquation &eq, const AlgebraicReal &alpha,
                           double tol);
OracleVerdict verify(const RadicalEquation &eq, const AlgebraicReal &alpha,
                     double tol);

struct ScanResult {
  /// Approximate isolated real solutions, ascending.
  std::vector<double> solutions;
  /// Runs of grid points where the residual vanishes ("interval of solutions").
  std::vector<std::pair<double, double>> intervals;
};

/// Grid search for strong solutions of eq on [lo, hi]. Only points where
/// every radicand is nonnegative count; sign changes are bisected to width
/// 1e-10 and grid points with |residual| < 1e-8 are reported directly.
ScanResult scan(const RadicalEquation &eq, double lo, double hi, double step);

/// Smallest distance from x to a member of s (infinity for the empty set).
double distance(const RealSet &s, double x);

/// Independent seed for item `index` of a stream rooted at `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Deterministic random equation of the given form with polynomial payloads
/// of degree <= max_degree (0..3) and coefficients p/q, p in [-9, 9],
/// q in [1, 9]. FormSumZero gets three terms.
RadicalEquation random_equation(std::uint64_t seed, Form form, int max_degree);

} // namespace radsolve
