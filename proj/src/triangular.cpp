#include <algorithm>

#include "afinv/decomp.hpp"
#include "afinv/error.hpp"

namespace afinv {

namespace {

ZMat companion_from_column(const std::vector<Int>& col) {
  int n = int(col.size());
  ZMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, 0) = col[size_t(i)];
  for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = 1;
  return m;
}

IntPoly normalized_pa(const IntPoly& minpoly) {
  if (minpoly.coeff(0) == 1) return minpoly;
  if (minpoly.coeff(0) == -1) return -minpoly;
  fail(errc::internal, "minimal polynomial with non-unit constant term: " + minpoly.str());
}

} // namespace

TriangularForm triangular_form(const Specimen& s) {
  TriangularForm tf;
  tf.N = s.N();
  AlgebraicReal a = isolate_positive_root(s.p_L());
  tf.p_a = normalized_pa(a.minpoly());
  tf.D = tf.p_a.degree();
  const int M = tf.N - tf.D;

  // f_m = m_1 + m_2 x + ... + m_N x^{N-1} = (p_L + 1)/x
  std::vector<Int> fc(s.m().begin(), s.m().end());
  IntPoly f_m{std::move(fc)};
  auto [q_m, r_m] = poly_divmod(f_m, tf.p_a);

  if (q_m.degree() + 1 > M) fail(errc::internal, "quotient longer than N-D");
  tf.Q.assign(size_t(M), Int(0));
  for (int k = 0; k <= q_m.degree(); ++k) tf.Q[size_t(k)] = q_m.coeff(k);
  tf.R.assign(size_t(tf.D), Int(0));
  for (int k = 0; k <= r_m.degree(); ++k) tf.R[size_t(k)] = r_m.coeff(k);

  // r_m = (1 - p_a)/x
  if (!(IntPoly::monomial(1) * r_m == IntPoly::from_int(1) - tf.p_a))
    fail(errc::internal, "remainder identity r_m = (1 - p_a)/x fails");

  // p0 = x q_m - 1 = p_L / p_a
  tf.p0 = IntPoly::monomial(1) * q_m - IntPoly::from_int(1);
  if (!(tf.p0 * tf.p_a == s.p_L())) fail(errc::internal, "p0 * p_a != p_L");

  tf.J0 = companion_from_column(tf.Q);
  tf.JR = companion_from_column(tf.R);
  tf.coupling = ZMat(M, tf.D);
  for (int i = 0; i < M; ++i) tf.coupling.at(i, 0) = tf.Q[size_t(i)];

  tf.blocks = ZMat(tf.N, tf.N);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) tf.blocks.at(i, j) = tf.J0.at(i, j);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < tf.D; ++j) tf.blocks.at(i, M + j) = tf.coupling.at(i, j);
  for (int i = 0; i < tf.D; ++i)
    for (int j = 0; j < tf.D; ++j) tf.blocks.at(M + i, M + j) = tf.JR.at(i, j);

  // Change of basis: columns x^j p_a (j < M), then the monomials 1..x^{D-1}.
  tf.basis = ZMat(tf.N, tf.N);
  for (int j = 0; j < M; ++j)
    for (int i = 0; i <= tf.D; ++i) tf.basis.at(j + i, j) = tf.p_a.coeff(i);
  for (int j = 0; j < tf.D; ++j) tf.basis.at(j, M + j) = 1;

  if (!(mul(s.to_matrix(), tf.basis) == mul(tf.basis, tf.blocks)))
    fail(errc::internal, "change of basis does not intertwine J with its block form");

  // determinant chain
  const Int detJ = det(s.to_matrix());
  const Int detJ0 = M > 0 ? det(tf.J0) : Int(1);
  const Int sgnD = (tf.D % 2 == 1) ? 1 : -1;
  const Int sgnN = (tf.N % 2 == 1) ? 1 : -1;
  if (detJ != sgnD * tf.R.back() * detJ0 || detJ != sgnN * s.m_N())
    fail(errc::internal, "determinant chain fails");
  if (M > 0) {
    const Int sgnM = (M % 2 == 1) ? 1 : -1;
    if (detJ0 != sgnM * tf.Q.back() || tf.Q.back() == 0)
      fail(errc::internal, "det(J0) != (-1)^{N-D-1} Q_{N-D}");
  }
  return tf;
}

int kernel_rank(const Specimen& s) {
  AlgebraicReal a = isolate_positive_root(s.p_L());
  return s.N() - a.minpoly().degree();
}

std::vector<DecompositionStep> decomposition_series(const Specimen& s) {
  std::vector<DecompositionStep> steps;
  IntPoly p = s.p_L();
  while (p.degree() >= 1) {
    DecompositionStep step;
    step.rank = p.degree();
    step.abs_det = abs_int(p.leading());
    step.poly = p;
    Factorization fac = factor_over_Z(p);
    if (fac.factors.size() == 1 && fac.factors[0].second == 1) {
      steps.push_back(std::move(step)); // irreducible: the algorithm stops
      return steps;
    }
    // Remove one irreducible factor, preferring the one with the largest
    // real root (the trace direction); any factor is algebraically valid.
    const IntPoly* chosen = &fac.factors[0].first;
    double best = -1e300;
    bool best_real = false;
    bool first = true;
    for (const auto& [g, e] : fac.factors) {
      double r = -1e300;
      bool has_real = g.degree() % 2 == 1; // odd degree always has one
      // probe the real line coarsely with exact sign changes
      int sprev = g.sign_at(Rat(-4096));
      for (Rat x(-4095); x <= 4096; x += 1) {
        int sx = g.sign_at(x);
        if (sx == 0 || (sprev != 0 && sx != sprev)) {
          has_real = true;
          r = x.get_d();
        }
        sprev = sx;
      }
      if (first || (has_real && !best_real) || (has_real == best_real && r > best)) {
        best = r;
        best_real = has_real;
        chosen = &g;
        first = false;
      }
    }
    IntPoly g = normalized_pa(*chosen); // factors of p divide p(0) = -1 at 0
    step.removed_factor = g;
    steps.push_back(step);
    IntPoly f = poly_divexact(p + IntPoly::from_int(1), IntPoly::monomial(1));
    auto [q, r] = poly_divmod(f, g);
    if (!(IntPoly::monomial(1) * r == IntPoly::from_int(1) - g))
      fail(errc::internal, "reduction step remainder identity fails");
    IntPoly next = IntPoly::monomial(1) * q - IntPoly::from_int(1);
    if (!(next * g == p)) fail(errc::internal, "reduction step does not divide");
    p = next;
  }
  // rank 0: the zero group
  DecompositionStep last;
  last.rank = 0;
  last.abs_det = 1;
  last.poly = p;
  steps.push_back(std::move(last));
  return steps;
}

SubgroupTest contains_Z_inv_d(const ZMat& J0, const Int& d) {
  if (J0.rows != J0.cols) fail(errc::shape_mismatch, "J0 must be square");
  if (d < 1) fail(errc::invalid_argument, "d must be positive");
  QMat inv = inverse(QMat::from_z(J0));
  QMat scaled = inv;
  for (Rat& x : scaled.a) x *= Rat(d);
  if (!is_integral(scaled))
    fail(errc::non_integral_scaled_inverse, "d J0^{-1} has a non-integral entry");
  ZMat E = to_z(scaled);
  Factorization fac = factor_over_Z(char_poly_of(E));
  for (const auto& [f, e] : fac.factors)
    if (abs_int(f.coeff(0)) == 1) return SubgroupTest::yes;
  return SubgroupTest::no_conclusion;
}

} // namespace afinv
