#include "radsolve/realset.hpp"

#include "radsolve/format.hpp"
#include "radsolve/roots.hpp"

#include <algorithm>
#include <functional>

namespace radsolve {

const char *to_string(Relation rel) {
  switch (rel) {
  case Relation::ge:
    return "≥";
  case Relation::le:
    return "≤";
  case Relation::gt:
    return ">";
  case Relation::lt:
    return "<";
  case Relation::eq:
    return "=";
  }
  return "?";
}

namespace {

// Ordering of an endpoint against a finite value.
std::strong_ordering compare(const Endpoint &e, const AlgebraicReal &x) {
  switch (e.kind) {
  case Endpoint::Kind::neg_inf:
    return std::strong_ordering::less;
  case Endpoint::Kind::pos_inf:
    return std::strong_ordering::greater;
  case Endpoint::Kind::finite:
    break;
  }
  return radsolve::compare(e.value, x);
}

bool endpoints_equal(const Endpoint &a, const Endpoint &b) {
  if (a.kind != b.kind)
    return false;
  return a.kind != Endpoint::Kind::finite || a.value == b.value;
}

void sort_unique(std::vector<AlgebraicReal> &xs) {
  std::sort(xs.begin(), xs.end(),
            [](const AlgebraicReal &a, const AlgebraicReal &b) { return a < b; });
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

} // namespace

bool Component::is_point() const {
  return lo.is_finite() && hi.is_finite() && lo_closed && hi_closed &&
         lo.value == hi.value;
}

bool Component::contains(const AlgebraicReal &x) const {
  auto l = compare(lo, x);
  if (l == std::strong_ordering::greater ||
      (l == std::strong_ordering::equal && !lo_closed))
    return false;
  auto h = compare(hi, x);
  return !(h == std::strong_ordering::less ||
           (h == std::strong_ordering::equal && !hi_closed));
}

/// Decomposition of the line by sorted distinct points p0 < ... < p(n-1)
/// into 2n+1 cells: gap 0, point 0, gap 1, ..., point n-1, gap n.
class CellComplex {
public:
  explicit CellComplex(std::vector<AlgebraicReal> points)
      : points_(std::move(points)) {
    sort_unique(points_);
  }

  std::size_t cell_count() const { return 2 * points_.size() + 1; }
  const std::vector<AlgebraicReal> &points() const { return points_; }

  static bool is_point_cell(std::size_t cell) { return cell % 2 == 1; }

  /// Membership of every cell; the set's endpoints must all be among points.
  std::vector<bool> membership(const RealSet &s) const {
    std::vector<bool> in(cell_count(), false);
    for (std::size_t c = 0; c < in.size(); ++c) {
      if (is_point_cell(c)) {
        in[c] = s.contains(points_[c / 2]);
        continue;
      }
      Endpoint left = c == 0 ? Endpoint::neg_inf()
                             : Endpoint::at(points_[c / 2 - 1]);
      Endpoint right = c / 2 == points_.size() ? Endpoint::pos_inf()
                                               : Endpoint::at(points_[c / 2]);
      for (const auto &comp : s.parts_) {
        if (covers_gap(comp, left, right)) {
          in[c] = true;
          break;
        }
      }
    }
    return in;
  }

  /// A sample rational inside gap cell c.
  Rational gap_sample(std::size_t c) const {
    const std::size_t k = c / 2;
    if (points_.empty())
      return Rational(0);
    if (k == 0)
      return rational_below(points_.front());
    if (k == points_.size())
      return rational_above(points_.back());
    return rational_between(points_[k - 1], points_[k]);
  }

  RealSet assemble(const std::vector<bool> &in) const {
    std::vector<Component> parts;
    std::size_t c = 0;
    while (c < in.size()) {
      if (!in[c]) {
        ++c;
        continue;
      }
      std::size_t end = c;
      while (end + 1 < in.size() && in[end + 1])
        ++end;
      parts.push_back(make_component(c, end));
      c = end + 1;
    }
    return RealSet(std::move(parts));
  }

private:
  static bool covers_gap(const Component &comp, const Endpoint &left,
                         const Endpoint &right) {
    bool lo_ok = comp.lo.kind == Endpoint::Kind::neg_inf ||
                 (left.is_finite() &&
                  compare(comp.lo, left.value) != std::strong_ordering::greater);
    if (!lo_ok)
      return false;
    return comp.hi.kind == Endpoint::Kind::pos_inf ||
           (right.is_finite() &&
            compare(comp.hi, right.value) != std::strong_ordering::less);
  }

  Component make_component(std::size_t first, std::size_t last) const {
    Component comp;
    if (is_point_cell(first)) {
      comp.lo = Endpoint::at(points_[first / 2]);
      comp.lo_closed = true;
    } else {
      comp.lo = first == 0 ? Endpoint::neg_inf()
                           : Endpoint::at(points_[first / 2 - 1]);
    }
    if (is_point_cell(last)) {
      comp.hi = Endpoint::at(points_[last / 2]);
      comp.hi_closed = true;
    } else {
      comp.hi = last / 2 == points_.size() ? Endpoint::pos_inf()
                                           : Endpoint::at(points_[last / 2]);
    }
    return comp;
  }

  std::vector<AlgebraicReal> points_;
};

namespace {

std::vector<AlgebraicReal> finite_endpoints(const RealSet &s) {
  std::vector<AlgebraicReal> out;
  for (const auto &c : s.components()) {
    if (c.lo.is_finite())
      out.push_back(c.lo.value);
    if (c.hi.is_finite())
      out.push_back(c.hi.value);
  }
  return out;
}

RealSet combine(const RealSet &a, const RealSet &b,
                const std::function<bool(bool, bool)> &op) {
  auto pts = finite_endpoints(a);
  auto more = finite_endpoints(b);
  pts.insert(pts.end(), more.begin(), more.end());
  CellComplex cells(std::move(pts));
  auto in_a = cells.membership(a);
  auto in_b = cells.membership(b);
  std::vector<bool> in(in_a.size());
  for (std::size_t i = 0; i < in.size(); ++i)
    in[i] = op(in_a[i], in_b[i]);
  return cells.assemble(in);
}

} // namespace

RealSet RealSet::all() {
  return RealSet({Component{Endpoint::neg_inf(), Endpoint::pos_inf(), false,
                            false}});
}

RealSet RealSet::point(const AlgebraicReal &x) {
  return RealSet({Component{Endpoint::at(x), Endpoint::at(x), true, true}});
}

RealSet RealSet::points(std::vector<AlgebraicReal> xs) {
  sort_unique(xs);
  std::vector<Component> parts;
  parts.reserve(xs.size());
  for (auto &x : xs)
    parts.push_back(Component{Endpoint::at(x), Endpoint::at(x), true, true});
  return RealSet(std::move(parts));
}

RealSet RealSet::interval(Endpoint lo, bool lo_closed, Endpoint hi,
                          bool hi_closed) {
  if (lo.kind == Endpoint::Kind::pos_inf || hi.kind == Endpoint::Kind::neg_inf)
    return {};
  lo_closed = lo_closed && lo.is_finite();
  hi_closed = hi_closed && hi.is_finite();
  if (lo.is_finite() && hi.is_finite()) {
    auto order = radsolve::compare(lo.value, hi.value);
    if (order == std::strong_ordering::greater)
      return {};
    if (order == std::strong_ordering::equal) {
      if (!(lo_closed && hi_closed))
        return {};
      return point(lo.value);
    }
  }
  return RealSet({Component{std::move(lo), std::move(hi), lo_closed, hi_closed}});
}

RealSet RealSet::all_except(std::vector<AlgebraicReal> punctures) {
  CellComplex cells(std::move(punctures));
  std::vector<bool> in(cells.cell_count());
  for (std::size_t c = 0; c < in.size(); ++c)
    in[c] = !CellComplex::is_point_cell(c);
  return cells.assemble(in);
}

RealSet RealSet::from_sign_condition(const RationalFunction &p, Relation rel) {
  auto accepts = [rel](int s) {
    switch (rel) {
    case Relation::ge:
      return s >= 0;
    case Relation::le:
      return s <= 0;
    case Relation::gt:
      return s > 0;
    case Relation::lt:
      return s < 0;
    case Relation::eq:
      return s == 0;
    }
    return false;
  };

  std::vector<AlgebraicReal> zeros;
  if (!p.num().is_zero())
    zeros = isolate_real_roots(p.num());
  std::vector<AlgebraicReal> poles = isolate_real_roots(p.den());

  std::vector<AlgebraicReal> pts = zeros;
  pts.insert(pts.end(), poles.begin(), poles.end());
  CellComplex cells(std::move(pts));

  std::vector<bool> in(cells.cell_count());
  for (std::size_t c = 0; c < in.size(); ++c) {
    if (CellComplex::is_point_cell(c)) {
      const AlgebraicReal &x = cells.points()[c / 2];
      bool is_pole = std::any_of(poles.begin(), poles.end(),
                                 [&](const AlgebraicReal &q) { return q == x; });
      in[c] = !is_pole && accepts(0);
    } else {
      in[c] = accepts(sign(p(cells.gap_sample(c))));
    }
  }
  return cells.assemble(in);
}

bool RealSet::is_all() const {
  return parts_.size() == 1 && parts_[0].lo.kind == Endpoint::Kind::neg_inf &&
         parts_[0].hi.kind == Endpoint::Kind::pos_inf;
}

bool RealSet::has_interval() const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [](const Component &c) { return !c.is_point(); });
}

std::vector<AlgebraicReal> RealSet::isolated_points() const {
  std::vector<AlgebraicReal> out;
  for (const auto &c : parts_)
    if (c.is_point())
      out.push_back(c.lo.value);
  return out;
}

bool RealSet::contains(const AlgebraicReal &x) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [&](const Component &c) { return c.contains(x); });
}

bool RealSet::is_subset_of(const RealSet &other) const {
  return difference(*this, other).is_empty();
}

RealSet intersect(const RealSet &a, const RealSet &b) {
  if (a.is_empty() || b.is_empty())
    return {};
  if (a.is_all())
    return b;
  if (b.is_all())
    return a;
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

RealSet unite(const RealSet &a, const RealSet &b) {
  if (a.is_empty())
    return b;
  if (b.is_empty())
    return a;
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

RealSet difference(const RealSet &a, const RealSet &b) {
  if (a.is_empty() || b.is_empty())
    return a;
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

RealSet intersect_all(const std::vector<RealSet> &sets) {
  RealSet out = RealSet::all();
  for (const auto &s : sets)
    out = intersect(out, s);
  return out;
}

bool operator==(const RealSet &a, const RealSet &b) {
  if (a.parts_.size() != b.parts_.size())
    return false;
  for (std::size_t i = 0; i < a.parts_.size(); ++i) {
    const auto &x = a.parts_[i];
    const auto &y = b.parts_[i];
    if (x.lo_closed != y.lo_closed || x.hi_closed != y.hi_closed ||
        !endpoints_equal(x.lo, y.lo) || !endpoints_equal(x.hi, y.hi))
      return false;
  }
  return true;
}

std::string RealSet::to_string() const {
  if (parts_.empty())
    return "∅";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const Component &c = parts_[i];
    if (!out.empty())
      out += " ∪ ";
    if (c.is_point()) {
      // Consecutive points share one brace pair.
      out += "{" + format_value(c.lo.value);
      while (i + 1 < parts_.size() && parts_[i + 1].is_point())
        out += ", " + format_value(parts_[++i].lo.value);
      out += "}";
      continue;
    }
    out += c.lo_closed ? "[" : "(";
    out += c.lo.is_finite() ? format_value(c.lo.value) : "-∞";
    out += ", ";
    out += c.hi.is_finite() ? format_value(c.hi.value) : "+∞";
    out += c.hi_closed ? "]" : ")";
  }
  return out;
}

} // namespace radsolve
