#pragma once

#include <optional>

#include "afinv/algebraic.hpp"
#include "afinv/specimen.hpp"

namespace afinv {

// Perron-Frobenius data of a specimen: the dominant eigenvalue lambda, its
// inverse a (the unique root of p_L in (0,1]), the left eigenvector
// alpha = (1, a, ..., a^{N-1}), the integer-recursion right eigenvector v
// with v_1 = 1, and the pairing tau(v) = <alpha|v>.
struct PerronData {
  AlgebraicReal a;                  // 1/lambda
  AlgebraicReal lambda;
  std::optional<Int> lambda_int;    // set iff lambda is rational (then integral)
  std::vector<IntPoly> v_poly;      // v_i as integer polynomials in lambda, reduced mod minpoly(lambda)
  std::vector<Int> v_int;           // populated iff lambda_int
  FieldElem tau_v;                  // exact element of Q(a)
  std::optional<Int> I_J;           // present iff lambda = m_N

  bool lambda_rational() const { return lambda_int.has_value(); }
  bool in_lambda_eq_mN_class(const Specimen& s) const {
    return lambda_int && *lambda_int == s.m_N();
  }
};

PerronData perron(const Specimen& s);

// <alpha|v> as an exact field element; rational when lambda is.
FieldElem tau_v(const Specimen& s);

// I(J) = lambda^{N-1} + v_2 lambda^{N-2} + ... + v_{N-1} lambda + 1.
// Requires lambda rational with lambda = m_N; throws NotInClass otherwise.
Int I_invariant(const Specimen& s);

} // namespace afinv
