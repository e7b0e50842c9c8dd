#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "afinv/spectral.hpp"

namespace afinv {

// Block decomposition of J in the basis
// { p_a, x p_a, ..., x^{N-D-1} p_a, 1, x, ..., x^{D-1} } of Z^N,
// with p_a normalized by p_a(0) = +1. J0 acts on ker(tau), JR on the
// quotient; both are again in companion standard form.
struct TriangularForm {
  int N = 0;
  int D = 0;
  IntPoly p_a;           // minimal polynomial of a, p_a(0) = +1
  IntPoly p0;            // p_L / p_a, so p0(0) = -1; equals x*q_m - 1
  std::vector<Int> Q;    // coefficients of q_m, Q_1..Q_{N-D} (empty if D = N)
  std::vector<Int> R;    // coefficients of r_m, R_1..R_D
  ZMat J0;               // (N-D) x (N-D)
  ZMat JR;               // D x D
  ZMat coupling;         // (N-D) x D, first column Q
  ZMat basis;            // N x N change of basis (new -> standard coordinates)
  ZMat blocks;           // assembled [[J0, coupling], [0, JR]]
};

TriangularForm triangular_form(const Specimen& s);

// rank of ker(tau) = N - deg(p_a).
int kernel_rank(const Specimen& s);

// Repeated triangular reduction: at each step an irreducible factor of the
// current first-column polynomial is removed until it is irreducible.
struct DecompositionStep {
  int rank;
  Int abs_det;
  IntPoly poly;             // x*q - 1 for the current first column q
  IntPoly removed_factor;   // zero polynomial at the terminal step
};
std::vector<DecompositionStep> decomposition_series(const Specimen& s);

// Least n >= 0 with J^n g integral, when g lies in the dimension group.
struct MembershipResult {
  enum class Kind { member, not_member, inconclusive } kind;
  int level = -1;
  std::string note;
};
MembershipResult membership(const Specimen& s, const QVec& g, int cap = 64);

// Unique representation g = l + sum_k J^{-k} (i_k e_N) with 0 <= i_k < m_N.
struct CanonicalDigits {
  ZVec l;
  std::vector<Int> digits;
};
CanonicalDigits canonical_digits(const Specimen& s, const QVec& g, int cap = 64);
QVec reconstruct(const Specimen& s, const CanonicalDigits& d);

// tau(g) = <alpha|g>, exact; positivity means tau(g) > 0 or g = 0.
FieldElem trace_functional(const Specimen& s, const QVec& g);
bool is_positive_element(const Specimen& s, const QVec& g);

// Relations m_N x_{N+i} = x_i - m_1 x_{i+1} - ... - m_{N-1} x_{N+i-1} for the
// generators x_i = J^{-i} e_N mod Z^N, each instance verified exactly; in the
// lambda = m_N case additionally m x_i = x_{i-1}.
struct QuotientRelation {
  int lhs_index;                          // x_{lhs_index}
  std::vector<std::pair<int, Int>> rhs;   // (index, coefficient) with index >= 1
  bool verified;
};
struct QuotientRelations {
  Int modulus;
  std::vector<QuotientRelation> table;
  bool lambda_eq_mN = false;
  bool halving_verified = false;
};
QuotientRelations quotient_relations(const Specimen& s, int depth);

// G0 tensor Z_n in the digit normal form; for prime n the report carries the
// Z_n-dimension, which is deg(p0 mod n) with nonzero constants giving 0.
struct TorsionReport {
  Int n;
  bool n_prime;
  int dimension;      // meaningful for prime n
  int l_count;        // number of l_j digits, 0 <= l_j < n
  Int digit_bound;    // i_k range bound gcd(n, q_M)
};
TorsionReport torsion_tensor(const Specimen& s, const Int& n);

// Smallest n certifying {g : m_N^i g in Z^N} = J^{-ni} Z^N via the pattern
// m_{N-k} = 0 mod m_N for k < n and gcd(m_{N-n}, m_N) = 1 (n = N needs no
// gcd condition). nullopt when the pattern fails.
std::optional<int> scaling_degree_certificate(const Specimen& s);

enum class DivisibleRank1 { confirmed, unknown };
// confirmed means D_lambda(G) = Z[1/lambda] v.
DivisibleRank1 divisible_subgroup_rank1_witness(const Specimen& s);

enum class SubgroupTest { yes, no_conclusion };
// Whether ind(J0) provably contains a copy of Z[1/d]: some irreducible factor
// f of char(d J0^{-1}) has |f(0)| = 1. Requires d J0^{-1} integral.
SubgroupTest contains_Z_inv_d(const ZMat& J0, const Int& d);

} // namespace afinv
