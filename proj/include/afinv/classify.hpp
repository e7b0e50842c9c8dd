#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "afinv/decomp.hpp"

namespace afinv {

enum class SplitFlag { splits, non_split, unknown };

inline const std::vector<Int>& default_torsion_primes() {
  static const std::vector<Int> p{2, 3, 5, 7};
  return p;
}

// The JSON-exported fingerprint of one specimen.
struct InvariantBundle {
  Specimen s;
  PerronData pd;
  TriangularForm tf;
  std::vector<Int> prim_mN, prim_RD, prim_QND;
  int ker_rank = 0;
  std::vector<std::pair<Int, int>> torsion; // prime -> dim(G0 tensor Z_p), ascending primes
  SplitFlag split = SplitFlag::unknown;
  std::optional<int> scaling_cert;
  std::vector<DecompositionStep> series;

  explicit InvariantBundle(Specimen sp) : s(std::move(sp)) {}
};

InvariantBundle bundle(const Specimen& s, const std::vector<Int>& primes = default_torsion_primes());

// Isomorphism certificate: either a rational N x N matrix implementing the
// order isomorphism on the concrete groups, or the (A, eta) block pair of the
// lambda = m_N class.
struct Witness {
  enum class Type { lambda_matrix, block } type = Type::lambda_matrix;
  QMat lambda_mat;         // N x N
  ZMat A;                  // (N-1) x (N-1)
  QVec eta;                // length N-1
  std::optional<Int> c;    // construction residue for the N = 3 case
};

struct TraceEntry {
  std::string test;
  std::string outcome;   // "separates" / "matches" / "isomorphic" / "skipped" / ...
  std::string details;
};

struct Verdict {
  enum class Kind { isomorphic, non_isomorphic, inconclusive } kind = Kind::inconclusive;
  std::string reason_test;
  std::string reason_details;
  std::vector<TraceEntry> trace;
  std::optional<Witness> witness;

  static Verdict iso(std::string test, std::string details) {
    Verdict v;
    v.kind = Kind::isomorphic;
    v.reason_test = std::move(test);
    v.reason_details = std::move(details);
    return v;
  }
  static Verdict non_iso(std::string test, std::string details) {
    Verdict v;
    v.kind = Kind::non_isomorphic;
    v.reason_test = std::move(test);
    v.reason_details = std::move(details);
    return v;
  }
  static Verdict undecided() { return Verdict{}; }
  bool decided() const { return kind != Kind::inconclusive; }
};

// One-directional necessary conditions: N, D, the three Prim sets, torsion
// dimensions, and I(J) when both specimens have lambda = m_N.
Verdict necessary_tests(const Specimen& s1, const Specimen& s2,
                        const std::vector<Int>& primes = default_torsion_primes());

// tau(v)-ratio obstructions for rational eigenvalues; hypotheses are
// established through scaling-degree certificates on the target side.
Verdict tau_ratio_test(const Specimen& s1, const Specimen& s2);

// Complete decision in the lambda = m_N class via (N, Prim lambda, I(J)),
// with explicit witnesses for lambda = lambda' and for N = 3.
Verdict decide_lambda_eq_mN(const Specimen& s1, const Specimen& s2);

// Complete treatment of N = 2.
Verdict decide_rank2(const Specimen& s1, const Specimen& s2);

// Split/non-split detection of 0 -> ker tau -> K0 -> Z[1/lambda] -> 0.
SplitFlag split_test(const Specimen& s);

// Unimodular case: m_N = m_N' = 1, equal rank, same positive root.
Verdict monic_same_root_test(const Specimen& s1, const Specimen& s2);

// Affirmative test for specimens whose dimension groups are literally the
// same subgroup Z[1/m_N]^N of Q^N with the same trace: every nonzero m_i
// carries all prime factors of m_N on both sides, same N, same root.
Verdict same_full_group_test(const Specimen& s1, const Specimen& s2);

struct WitnessCheck {
  bool verified = false;
  int depth = 0;
  std::string refuted_condition; // nonempty iff !verified
};
WitnessCheck check_witness(const Specimen& s1, const Specimen& s2, const Witness& w, int depth = 8);

// The four shift-equivalence identities A J = K A, J B = B K, B A = J^k,
// A B = K^k, checked exactly; entry nonnegativity reported separately.
struct ShiftEquivalenceReport {
  bool identities_hold = false;
  bool nonnegative = false;
  std::vector<std::string> failed;
};
ShiftEquivalenceReport verify_shift_equivalence(const ZMat& A, const ZMat& B, const ZMat& J,
                                                const ZMat& K, int k);

// Full pipeline; first definitive verdict wins, otherwise an Inconclusive
// verdict carrying the ordered trace of every attempted test.
Verdict compare(const Specimen& s1, const Specimen& s2,
                const std::vector<Int>& primes = default_torsion_primes(), int witness_depth = 8);

} // namespace afinv
