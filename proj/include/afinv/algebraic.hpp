#pragma once

#include <optional>
#include <string>
#include <vector>

#include "afinv/intpoly.hpp"

namespace afinv {

// A real algebraic number: irreducible primitive minimal polynomial over Z
// plus an isolating rational interval containing exactly one real root.
// All decisions are made by exact endpoint evaluation and bisection; floating
// point appears only in approx().
class AlgebraicReal {
public:
  AlgebraicReal() = default;
  // minpoly irreducible with exactly one root in [lo, hi], sign change at the
  // endpoints unless the value is rational (degree-1 minpoly).
  AlgebraicReal(IntPoly minpoly, Rat lo, Rat hi);
  static AlgebraicReal from_rational(const Rat& v);

  bool is_rational() const { return minpoly_.degree() == 1; }
  Rat rational_value() const; // requires is_rational()
  const IntPoly& minpoly() const { return minpoly_; }
  Rat lo() const { return lo_; }
  Rat hi() const { return hi_; }

  // Shrinks the isolating interval until hi - lo <= width.
  void refine_to(const Rat& width) const;

  // Exact comparisons.
  int compare(const AlgebraicReal& o) const;
  int compare(const Rat& r) const;
  bool operator==(const AlgebraicReal& o) const { return compare(o) == 0; }
  bool operator<(const AlgebraicReal& o) const { return compare(o) < 0; }

  double approx() const;
  std::string str() const;

private:
  void bisect_once() const;
  IntPoly minpoly_;
  mutable Rat lo_, hi_;
};

// Element of the number field Q(r) for a fixed AlgebraicReal r, stored as a
// rational coefficient vector mod minpoly(r). Supports exact arithmetic and
// exact sign/comparison through interval refinement of r.
class FieldElem {
public:
  FieldElem() = default;
  FieldElem(AlgebraicReal root, std::vector<Rat> coeffs);
  static FieldElem from_rational(const AlgebraicReal& root, const Rat& v);
  static FieldElem generator(const AlgebraicReal& root); // the root itself

  const AlgebraicReal& root() const { return root_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rat rational_value() const; // requires is_rational()

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const; // nonzero
  FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
  int sign() const; // exact
  double approx() const;
  std::string str(const std::string& var = "a") const;

private:
  void reduce();
  AlgebraicReal root_;
  std::vector<Rat> c_; // trimmed, degree < deg(minpoly)
};

// The unique positive root of f, which is required to lie in (0, 1]. Returns
// it with its minimal polynomial (an irreducible factor of f) and an
// isolating interval. Throws NoRootInUnitInterval if f has no root there.
AlgebraicReal isolate_positive_root(const IntPoly& f);

} // namespace afinv
