#include <algorithm>

#include "afinv/decomp.hpp"
#include "afinv/error.hpp"

namespace afinv {

namespace {

// Least e with m_N^e g integral, from the prime factorization of the
// denominators; nullopt when a denominator prime does not divide m_N.
std::optional<int> clearing_exponent(const Specimen& s, const QVec& g) {
  Int den = 1;
  for (const Rat& x : g) den = lcm_int(den, x.get_den());
  if (den == 1) return 0;
  int e = 0;
  for (const Int& p : prime_factors(den)) {
    int vm = s.m_N() % p == 0 ? valuation(s.m_N(), p) : 0;
    if (vm == 0) return std::nullopt;
    e = std::max(e, (valuation(den, p) + vm - 1) / vm);
  }
  return e;
}

std::optional<int> certificate_or_none(const Specimen& s) {
  try {
    return scaling_degree_certificate(s);
  } catch (const Error&) {
    return std::nullopt;
  }
}

} // namespace

MembershipResult membership(const Specimen& s, const QVec& g, int cap) {
  if (int(g.size()) != s.N()) fail(errc::shape_mismatch, "vector length != N");
  MembershipResult res;
  std::optional<int> e = clearing_exponent(s, g);
  if (!e) {
    res.kind = MembershipResult::Kind::not_member;
    res.note = "denominator prime outside Prim(m_N)";
    return res;
  }
  std::optional<int> cert = certificate_or_none(s);
  long n_max = cert ? long(*cert) * *e + s.N() + 8 : long(cap);
  QMat J = QMat::from_z(s.to_matrix());
  QVec h = g;
  for (long n = 0; n <= n_max; ++n) {
    if (is_integral(h)) {
      res.kind = MembershipResult::Kind::member;
      res.level = int(n);
      return res;
    }
    h = mul(J, h);
  }
  if (cert) {
    res.kind = MembershipResult::Kind::not_member;
    res.note = "certified by scaling degree " + std::to_string(*cert);
  } else {
    res.kind = MembershipResult::Kind::inconclusive;
    res.note = std::string(errc_name(errc::iteration_cap_exceeded)) + " at " +
               std::to_string(n_max);
  }
  return res;
}

CanonicalDigits canonical_digits(const Specimen& s, const QVec& g, int cap) {
  MembershipResult mem = membership(s, g, cap);
  if (mem.kind == MembershipResult::Kind::inconclusive)
    fail(errc::iteration_cap_exceeded, "membership undecided");
  if (mem.kind == MembershipResult::Kind::not_member)
    fail(errc::invalid_argument, "vector is not a member of the dimension group");

  const int n = mem.level, N = s.N();
  // integer vector at stage n, i.e. the polynomial x^n f_k mod p_L
  QVec hq = g;
  QMat J = QMat::from_z(s.to_matrix());
  for (int i = 0; i < n; ++i) hq = mul(J, hq);
  std::vector<Int> c(size_t(n + N), Int(0));
  for (int i = 0; i < N; ++i) c[size_t(n + i)] = hq[size_t(i)].get_num();

  // leading-coefficient reduction into digits 0 <= i_k < m_N
  const IntPoly pl = s.p_L();
  const Int m = s.m_N();
  for (int i = int(c.size()) - 1; i >= N; --i) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), c[size_t(i)].get_mpz_t(), m.get_mpz_t());
    if (q == 0) continue;
    for (int j = 0; j <= N; ++j) c[size_t(i - N + j)] -= q * pl.coeff(j);
  }
  CanonicalDigits out;
  out.l.assign(c.begin(), c.begin() + N);
  out.digits.assign(c.begin() + N, c.end());
  while (!out.digits.empty() && out.digits.back() == 0) out.digits.pop_back();
  for (const Int& d : out.digits)
    if (d < 0 || d >= m) fail(errc::internal, "digit out of range");

  QVec back = reconstruct(s, out);
  if (back != g) fail(errc::internal, "digit reconstruction mismatch");
  return out;
}

QVec reconstruct(const Specimen& s, const CanonicalDigits& d) {
  const int N = s.N();
  if (int(d.l.size()) != N) fail(errc::shape_mismatch, "lattice part length != N");
  QVec acc(size_t(N), Rat(0));
  for (int i = 0; i < N; ++i) acc[size_t(i)] = Rat(d.l[size_t(i)]);
  QMat Ji = inverse(QMat::from_z(s.to_matrix()));
  QVec basis(size_t(N), Rat(0));
  basis[size_t(N - 1)] = 1; // e_N
  for (const Int& dig : d.digits) {
    basis = mul(Ji, basis);
    for (int i = 0; i < N; ++i) acc[size_t(i)] += Rat(dig) * basis[size_t(i)];
  }
  return acc;
}

FieldElem trace_functional(const Specimen& s, const QVec& g) {
  if (int(g.size()) != s.N()) fail(errc::shape_mismatch, "vector length != N");
  AlgebraicReal a = isolate_positive_root(s.p_L());
  FieldElem a_el = FieldElem::generator(a);
  FieldElem acc = FieldElem::from_rational(a, Rat(0));
  for (int i = s.N() - 1; i >= 0; --i)
    acc = acc * a_el + FieldElem::from_rational(a, g[size_t(i)]);
  return acc;
}

bool is_positive_element(const Specimen& s, const QVec& g) {
  bool zero = true;
  for (const Rat& x : g)
    if (x != 0) zero = false;
  return zero || trace_functional(s, g).sign() > 0;
}

QuotientRelations quotient_relations(const Specimen& s, int depth) {
  if (depth < 1) fail(errc::invalid_argument, "depth must be >= 1");
  const int N = s.N();
  QuotientRelations out;
  out.modulus = s.m_N();

  QMat Ji = inverse(QMat::from_z(s.to_matrix()));
  // g_j for j in [1-N, depth]; g_j = e_{N+j} for j <= 0, else J^{-j} e_N.
  auto g_of = [&](int j) {
    QVec v(size_t(N), Rat(0));
    if (j <= 0) {
      v[size_t(N + j - 1)] = 1;
      return v;
    }
    v[size_t(N - 1)] = 1;
    for (int t = 0; t < j; ++t) v = mul(Ji, v);
    return v;
  };
  std::vector<QVec> g;
  for (int j = 1 - N; j <= depth; ++j) g.push_back(g_of(j));
  auto G = [&](int j) -> const QVec& { return g[size_t(j - (1 - N))]; };

  for (int lhs = 1; lhs <= depth; ++lhs) {
    int i = lhs - N;
    QuotientRelation rel;
    rel.lhs_index = lhs;
    QVec want(size_t(N), Rat(0));
    for (int t = 0; t < N; ++t) want[size_t(t)] = Rat(s.m_N()) * G(lhs)[size_t(t)];
    QVec rhs(size_t(N), Rat(0));
    for (int t = 0; t < N; ++t) rhs[size_t(t)] = G(i)[size_t(t)];
    if (i >= 1) rel.rhs.emplace_back(i, Int(1));
    for (int k = 1; k <= N - 1; ++k) {
      const Int& mk = s.m()[size_t(k - 1)];
      if (mk == 0) continue;
      for (int t = 0; t < N; ++t) rhs[size_t(t)] -= Rat(mk) * G(i + k)[size_t(t)];
      if (i + k >= 1) rel.rhs.emplace_back(i + k, -mk);
    }
    rel.verified = (want == rhs);
    if (!rel.verified) fail(errc::internal, "quotient relation fails exactly");
    out.table.push_back(std::move(rel));
  }

  PerronData pd = perron(s);
  out.lambda_eq_mN = pd.in_lambda_eq_mN_class(s);
  if (out.lambda_eq_mN) {
    bool ok = true;
    for (int i = 1; i <= depth; ++i) {
      QVec diff = G(i - 1);
      for (int t = 0; t < N; ++t) diff[size_t(t)] = Rat(s.m_N()) * G(i)[size_t(t)] - diff[size_t(t)];
      ok = ok && is_integral(diff);
    }
    out.halving_verified = ok;
    if (!ok) fail(errc::internal, "m x_i = x_{i-1} fails in the lambda = m_N class");
  }
  return out;
}

TorsionReport torsion_tensor(const Specimen& s, const Int& n) {
  if (n < 2) fail(errc::invalid_argument, "torsion modulus must be >= 2");
  TriangularForm tf = triangular_form(s);
  TorsionReport rep;
  rep.n = n;
  rep.n_prime = mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
  IntPoly reduced = reduce_mod(tf.p0, n);
  rep.dimension = std::max(0, reduced.degree());
  rep.l_count = tf.N - tf.D;
  rep.digit_bound = tf.Q.empty() ? Int(1) : gcd_int(n, abs_int(tf.Q.back()));
  return rep;
}

std::optional<int> scaling_degree_certificate(const Specimen& s) {
  PerronData pd = perron(s);
  if (!pd.lambda_rational()) fail(errc::lambda_irrational, s.str());
  const int N = s.N();
  const Int m = s.m_N();
  if (N == 1) return 1;
  for (int n = 1; n <= N; ++n) {
    bool zeros = true;
    for (int k = 1; k < n; ++k)
      if (s.m()[size_t(N - k - 1)] % m != 0) zeros = false;
    if (!zeros) continue;
    if (n == N) return N; // the gcd condition is vacuous here
    if (gcd_int(s.m()[size_t(N - n - 1)], m) == 1) return n;
  }
  return std::nullopt;
}

DivisibleRank1 divisible_subgroup_rank1_witness(const Specimen& s) {
  PerronData pd = perron(s);
  if (!pd.lambda_rational()) fail(errc::lambda_irrational, s.str());
  if (prime_factors(s.m_N()) != prime_factors(*pd.lambda_int)) return DivisibleRank1::unknown;
  if (!scaling_degree_certificate(s)) return DivisibleRank1::unknown;
  return DivisibleRank1::confirmed;
}

} // namespace afinv
