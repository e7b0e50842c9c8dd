#pragma once

#include <string>
#include <utility>
#include <vector>

#include "afinv/numutil.hpp"

namespace afinv {

// Dense univariate polynomial over Z. coeffs[i] is the coefficient of x^i;
// no trailing zeros except for the zero polynomial (empty coefficient list).
class IntPoly {
public:
  // Degree of the zero polynomial. Chosen so that deg(f*g) = deg f + deg g
  // holds with ordinary integer addition at every occurring size.
  static constexpr int kZeroDegree = INT32_MIN / 4;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly from_int(const Int& n) { return IntPoly(std::vector<Int>{n}); }
  // x^k
  static IntPoly monomial(int k, const Int& coeff = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kZeroDegree : int(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int i) const { return (i >= 0 && i < int(c_.size())) ? c_[i] : Int(0); }
  const Int& leading() const { return c_.back(); }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const Int& k) const;

  IntPoly derivative() const;
  Int content() const;           // gcd of coefficients, 0 for the zero polynomial
  IntPoly primitive_part() const;
  IntPoly reversed() const;      // x^deg * f(1/x), for f != 0

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const;

  // "x^3+x^2-1" style, variable name configurable.
  std::string str(const std::string& var = "x") const;

private:
  void trim();
  std::vector<Int> c_;
};

// Exact division with remainder over Z. Requires that the quotient and the
// remainder of the division of f by g over Q have integer coefficients;
// throws NonIntegralDivision otherwise (and requires g != 0).
std::pair<IntPoly, IntPoly> poly_divmod(const IntPoly& f, const IntPoly& g);

// f = q*g exactly, or error.
IntPoly poly_divexact(const IntPoly& f, const IntPoly& g);

struct Factorization {
  Int content;                                 // integer content, with sign
  std::vector<std::pair<IntPoly, int>> factors; // irreducible, primitive, positive leading
  IntPoly reassemble() const;
};

// Factorization into irreducibles over Z. Rational-root extraction first,
// then numeric root clustering with exact division checks.
Factorization factor_over_Z(const IntPoly& f, int degree_bound = 16);

// Coefficientwise reduction into {0,...,n-1}, n >= 2, then trimming.
IntPoly reduce_mod(const IntPoly& f, const Int& n);

// Remainder of f modulo a monic g, exact over Z.
IntPoly poly_mod_monic(const IntPoly& f, const IntPoly& g);

} // namespace afinv
