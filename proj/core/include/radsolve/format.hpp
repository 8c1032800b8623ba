#pragma once

#include "radsolve/algebraic.hpp"

#include <string>

namespace radsolve {

/// Decimal rendering with `significant` digits, rounded half-to-even on the
/// exact value. Fixed notation for magnitudes in [1e-5, 10^significant),
/// scientific otherwise. Trailing zeros are kept so widths are stable.
std::string format_approx(const AlgebraicReal &value, int significant = 12);

/// Exact text for rationals ("12", "-3/2"), "≈" + format_approx otherwise.
std::string format_value(const AlgebraicReal &value);

} // namespace radsolve
