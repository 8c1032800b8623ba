#pragma once

#include "radsolve/algebraic.hpp"
#include "radsolve/rational_function.hpp"

#include <string>
#include <vector>

namespace radsolve {

enum class Relation { ge, le, gt, lt, eq };

const char *to_string(Relation rel);

/// An interval end: -inf, +inf or a finite algebraic number.
struct Endpoint {
  enum class Kind { neg_inf, finite, pos_inf };

  Kind kind = Kind::neg_inf;
  AlgebraicReal value;

  static Endpoint neg_inf() { return {Kind::neg_inf, {}}; }
  static Endpoint pos_inf() { return {Kind::pos_inf, {}}; }
  static Endpoint at(AlgebraicReal v) { return {Kind::finite, std::move(v)}; }

  bool is_finite() const noexcept { return kind == Kind::finite; }
};

struct Component {
  Endpoint lo;
  Endpoint hi;
  bool lo_closed = false;
  bool hi_closed = false;

  bool is_point() const;
  bool contains(const AlgebraicReal &x) const;
};

/// Finite union of points and intervals with algebraic endpoints.
///
/// Components are sorted, pairwise disjoint and never mergeable: two
/// neighbours always leave out at least one point between them. This makes
/// the representation unique, so operator== is set equality.
class RealSet {
public:
  RealSet() = default;

  static RealSet empty() { return {}; }
  static RealSet all();
  static RealSet point(const AlgebraicReal &x);
  static RealSet points(std::vector<AlgebraicReal> xs);
  /// Empty when lo > hi or when the bounds meet without both being closed.
  static RealSet interval(Endpoint lo, bool lo_closed, Endpoint hi,
                          bool hi_closed);
  /// The reals minus finitely many punctures.
  static RealSet all_except(std::vector<AlgebraicReal> punctures);

  /// { x in dom(p) : p(x) rel 0 }; poles of p are always excluded.
  static RealSet from_sign_condition(const RationalFunction &p, Relation rel);

  const std::vector<Component> &components() const noexcept { return parts_; }
  bool is_empty() const noexcept { return parts_.empty(); }
  bool is_all() const;
  /// True when some component is a proper interval (infinitely many points).
  bool has_interval() const;
  std::vector<AlgebraicReal> isolated_points() const;

  bool contains(const AlgebraicReal &x) const;
  /// Exact set inclusion.
  bool is_subset_of(const RealSet &other) const;

  friend RealSet intersect(const RealSet &a, const RealSet &b);
  friend RealSet unite(const RealSet &a, const RealSet &b);
  /// a minus b
  friend RealSet difference(const RealSet &a, const RealSet &b);

  friend bool operator==(const RealSet &a, const RealSet &b);

  /// "∅", "{12}", "(-∞, 0] ∪ {3/2}", irrational endpoints as ≈decimals.
  std::string to_string() const;

private:
  explicit RealSet(std::vector<Component> parts) : parts_(std::move(parts)) {}

  friend class CellComplex;
  std::vector<Component> parts_;
};

RealSet intersect(const RealSet &a, const RealSet &b);
RealSet unite(const RealSet &a, const RealSet &b);
RealSet difference(const RealSet &a, const RealSet &b);

RealSet intersect_all(const std::vector<RealSet> &sets);

} // namespace radsolve
