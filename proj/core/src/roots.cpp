#include "radsolve/roots.hpp"

#include "radsolve/errors.hpp"
#include "lattice.hpp"

#include <utility>

namespace radsolve {

namespace detail {

std::optional<Rational> find_rational_root(const Polynomial &p, Rational &lo,
                                           Rational &hi) {
  const Integer lattice = abs(p.leading().get_num());
  const Rational step(Integer(1), lattice);
  const int sign_lo = p.sign_at(lo);
  for (;;) {
    Rational candidate(Integer(floor(lo * lattice) + 1), lattice);
    candidate.canonicalize();
    if (candidate >= hi)
      return std::nullopt;
    if (hi - lo < step) {
      if (p.sign_at(candidate) == 0)
        return candidate;
      return std::nullopt;
    }
    Rational mid = (lo + hi) / 2;
    int s = p.sign_at(mid);
    if (s == 0)
      return mid;
    if (s == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
}

} // namespace detail

SturmSequence::SturmSequence(const Polynomial &square_free_poly) {
  if (square_free_poly.is_zero())
    throw ZeroPolynomial();
  chain_.push_back(square_free_poly.primitive_signed());
  Polynomial next = square_free_poly.derivative().primitive_signed();
  while (!next.is_zero()) {
    chain_.push_back(next);
    // Positive rescaling keeps every sign pattern intact and coefficients small.
    next = (-divmod(chain_[chain_.size() - 2], chain_.back()).second)
               .primitive_signed();
  }
}

namespace {

int count_changes(const std::vector<int> &signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0)
      continue;
    if (last != 0 && s != last)
      ++changes;
    last = s;
  }
  return changes;
}

} // namespace

int SturmSequence::variations(const Rational &at) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto &p : chain_)
    signs.push_back(p.sign_at(at));
  return count_changes(signs);
}

int SturmSequence::variations_at_neg_inf() const {
  std::vector<int> signs;
  for (const auto &p : chain_) {
    int s = sign(p.leading());
    signs.push_back(p.degree() % 2 == 0 ? s : -s);
  }
  return count_changes(signs);
}

int SturmSequence::variations_at_pos_inf() const {
  std::vector<int> signs;
  for (const auto &p : chain_)
    signs.push_back(sign(p.leading()));
  return count_changes(signs);
}

int SturmSequence::count(const Rational &lo, const Rational &hi) const {
  return variations(lo) - variations(hi);
}

int SturmSequence::count_all() const {
  return variations_at_neg_inf() - variations_at_pos_inf();
}

Rational cauchy_bound(const Polynomial &p) {
  if (p.is_zero())
    throw ZeroPolynomial();
  Rational lc = abs(p.leading());
  Rational best(0);
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coefficient(static_cast<std::size_t>(k))) / lc;
    if (r > best)
      best = r;
  }
  return best + 1;
}

int count_roots(const Polynomial &p, const Rational &lo, const Rational &hi) {
  if (p.is_zero())
    throw ZeroPolynomial();
  if (p.degree() == 0)
    return 0;
  return SturmSequence(square_free(p)).count(lo, hi);
}

/// Splits the real line into Sturm-certified intervals and separates rational
/// roots from irrational ones.
class RootIsolator {
public:
  explicit RootIsolator(const Polynomial &p)
      : poly_(square_free(p)), sturm_(poly_) {}

  std::vector<AlgebraicReal> run() {
    if (poly_.degree() <= 0)
      return {};
    Rational bound = cauchy_bound(poly_);
    split(-bound, bound, sturm_.count(-bound, bound));

    std::vector<Rational> rational_roots;
    for (auto &cell : cells_)
      classify(cell, rational_roots);

    Polynomial rest = poly_;
    for (const auto &r : rational_roots)
      rest = divmod(rest, Polynomial::linear_root(r)).first;
    rest = rest.primitive();

    std::vector<AlgebraicReal> out;
    out.reserve(cells_.size());
    for (const auto &cell : cells_) {
      if (cell.rational)
        out.emplace_back(cell.lo);
      else
        out.push_back(AlgebraicReal(AlgebraicReal::Unchecked{}, rest, cell.lo,
                                    cell.hi, rest.sign_at(cell.lo)));
    }
    return out;
  }

private:
  struct Cell {
    Rational lo; // root lies in (lo, hi]
    Rational hi;
    bool rational = false;
  };

  void split(const Rational &lo, const Rational &hi, int n) {
    if (n == 0)
      return;
    if (n == 1) {
      cells_.push_back({lo, hi});
      return;
    }
    Rational mid = (lo + hi) / 2;
    int left = sturm_.count(lo, mid);
    split(lo, mid, left);
    split(mid, hi, n - left);
  }

  void mark_rational(Cell &cell, const Rational &value,
                     std::vector<Rational> &found) {
    cell.lo = value;
    cell.hi = value;
    cell.rational = true;
    found.push_back(value);
  }

  void classify(Cell &cell, std::vector<Rational> &found) {
    if (poly_.sign_at(cell.hi) == 0) {
      mark_rational(cell, cell.hi, found);
      return;
    }
    // A neighbouring rational root may sit on lo; move lo off it.
    while (poly_.sign_at(cell.lo) == 0) {
      Rational mid = (cell.lo + cell.hi) / 2;
      if (poly_.sign_at(mid) == 0) {
        mark_rational(cell, mid, found);
        return;
      }
      if (sturm_.count(cell.lo, mid) == 1)
        cell.hi = mid;
      else
        cell.lo = mid;
    }
    if (auto root = detail::find_rational_root(poly_, cell.lo, cell.hi))
      mark_rational(cell, *root, found);
  }

  Polynomial poly_;
  SturmSequence sturm_;
  std::vector<Cell> cells_;
};

std::vector<AlgebraicReal> isolate_real_roots(const Polynomial &p) {
  if (p.is_zero())
    throw ZeroPolynomial();
  if (p.degree() == 0)
    return {};
  return RootIsolator(p).run();
}

} // namespace radsolve
