#include "afinv/spectral.hpp"

#include "afinv/error.hpp"

namespace afinv {

namespace {

// Monic minimal polynomial of lambda = 1/a: the reversal of p_a when
// p_a(0) = +1.
IntPoly lambda_minpoly(const IntPoly& pa_normalized) { return pa_normalized.reversed(); }

// p_a with the sign fixed so that p_a(0) = +1.
IntPoly normalized_pa(const AlgebraicReal& a) {
  IntPoly mp = a.minpoly();
  if (mp.coeff(0) == 1) return mp;
  if (mp.coeff(0) == -1) return -mp;
  fail(errc::internal, "minimal polynomial of a has non-unit constant term: " + mp.str());
}

} // namespace

PerronData perron(const Specimen& s) {
  PerronData pd;
  pd.a = isolate_positive_root(s.p_L());

  // alpha J = lambda alpha reduces to p_L(a) = 0, i.e. minpoly(a) | p_L.
  {
    auto [q, r] = poly_divmod(s.p_L(), pd.a.minpoly());
    (void)q;
    if (!r.is_zero()) fail(errc::internal, "minimal polynomial does not divide p_L");
  }

  if (pd.a.is_rational()) {
    Rat av = pd.a.rational_value();
    // a = 1/lambda with lambda integral: the characteristic polynomial is
    // monic, so a rational eigenvalue is an integer.
    Rat lam = 1 / av;
    if (lam.get_den() != 1) fail(errc::internal, "rational eigenvalue is not integral");
    pd.lambda_int = lam.get_num();
    pd.lambda = AlgebraicReal::from_rational(lam);
  } else {
    IntPoly pa = normalized_pa(pd.a);
    IntPoly plam = lambda_minpoly(pa);
    // lambda lives in (1/hi, 1/lo)
    pd.a.refine_to(make_rat(1, 1024));
    Rat lo = 1 / pd.a.hi(), hi = 1 / pd.a.lo();
    pd.lambda = AlgebraicReal(plam, lo, hi);
  }

  // v_{i+1} = lambda v_i - m_i, reduced mod the minimal polynomial of lambda.
  const int n = s.N();
  IntPoly plam_monic =
      pd.lambda_rational()
          ? IntPoly(std::vector<Int>{-*pd.lambda_int, Int(1)})
          : lambda_minpoly(normalized_pa(pd.a));
  IntPoly x = IntPoly::monomial(1);
  pd.v_poly.assign(size_t(n), IntPoly());
  pd.v_poly[0] = IntPoly::from_int(1);
  for (int i = 1; i < n; ++i) {
    IntPoly next = x * pd.v_poly[size_t(i - 1)] - IntPoly::from_int(s.m()[size_t(i - 1)]);
    pd.v_poly[size_t(i)] = poly_mod_monic(next, plam_monic);
  }
  if (pd.lambda_rational()) {
    pd.v_int.assign(size_t(n), Int(0));
    for (int i = 0; i < n; ++i) {
      const IntPoly& p = pd.v_poly[size_t(i)];
      if (p.degree() > 0) fail(errc::internal, "eigenvector entry not reduced");
      pd.v_int[size_t(i)] = p.coeff(0);
    }
  }

  // J v = lambda v: rows 1..N-1 hold by construction; row N is the
  // characteristic identity m_N v_1 = lambda v_N, checked exactly.
  {
    IntPoly rowN = poly_mod_monic(x * pd.v_poly[size_t(n - 1)] - IntPoly::from_int(s.m_N()),
                                  plam_monic);
    if (!rowN.is_zero()) fail(errc::internal, "eigenvector identity J v = lambda v fails");
  }

  // tau(v) by the closed form a p_L'(a); cross-checked by the dot product in
  // tau_v() below for rational and irrational cases alike.
  FieldElem a_el = FieldElem::generator(pd.a);
  const IntPoly dpl = s.p_L().derivative();
  FieldElem acc = FieldElem::from_rational(pd.a, Rat(0));
  for (int i = dpl.degree(); i >= 0; --i)
    acc = acc * a_el + FieldElem::from_rational(pd.a, Rat(dpl.coeff(i)));
  pd.tau_v = a_el * acc;

  // dot product route: sum v_i a^{i-1} with v_i evaluated at lambda = 1/a
  {
    FieldElem dot = FieldElem::from_rational(pd.a, Rat(0));
    FieldElem apow = FieldElem::from_rational(pd.a, Rat(1));
    FieldElem ainv = a_el.inverse();
    for (int i = 0; i < n; ++i) {
      const IntPoly& p = pd.v_poly[size_t(i)];
      FieldElem vi = FieldElem::from_rational(pd.a, Rat(0));
      for (int k = p.degree(); k >= 0; --k)
        vi = vi * ainv + FieldElem::from_rational(pd.a, Rat(p.coeff(k)));
      dot = dot + vi * apow;
      apow = apow * a_el;
    }
    if (!(dot == pd.tau_v)) fail(errc::internal, "tau(v) routes disagree");
  }

  if (pd.lambda_rational() && *pd.lambda_int == s.m_N()) {
    // I(J) = lambda^{N-1} tau(v) = sum v_i lambda^{N-i}
    Int lam = *pd.lambda_int;
    Int acc2 = 0;
    for (int i = 1; i <= n; ++i)
      acc2 += pd.v_int[size_t(i - 1)] * pow_int(lam, (unsigned long)(n - i));
    pd.I_J = acc2;
  }
  return pd;
}

FieldElem tau_v(const Specimen& s) { return perron(s).tau_v; }

Int I_invariant(const Specimen& s) {
  PerronData pd = perron(s);
  if (!pd.lambda_rational())
    fail(errc::not_in_class, "lambda is irrational for " + s.str());
  if (*pd.lambda_int != s.m_N())
    fail(errc::not_in_class,
         "lambda = " + pd.lambda_int->get_str() + " differs from m_N = " + s.m_N().get_str());
  return *pd.I_J;
}

} // namespace afinv
