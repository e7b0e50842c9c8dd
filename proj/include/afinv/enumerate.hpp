#pragma once

#include "afinv/classify.hpp"

namespace afinv {

struct FamilySpec {
  Int lambda;
  int N = 1;
  bool include_gcd_violators = true;
  long budget = 100000;
};

struct EnumeratedSpecimen {
  Specimen s;
  ZVec Q; // the generating chain, Q_1..Q_{N-1}
};

// All companion first columns m with integer Perron-Frobenius eigenvalue
// lambda and rank N, i.e. p_L = (lambda x - 1)(1 + Q_{N-1} x + ... + Q_1 x^{N-1})
// over the chain 0 < Q_1, Q_j <= lambda Q_{j+1}, Q_N := 1. Deterministic
// order: ascending (Q_{N-1}, ..., Q_1).
std::vector<EnumeratedSpecimen> enumerate_family(const FamilySpec& f);

struct FamilyClassification {
  std::vector<EnumeratedSpecimen> specimens;  // all, enumeration order
  std::vector<int> valid;                     // indices with gcd condition
  std::vector<std::vector<int>> classes;      // partition of `valid`
  std::vector<std::pair<int, int>> inconclusive;
  std::vector<Verdict> pair_verdicts;         // row-major over valid pairs i < j
};

FamilyClassification classify_family(const FamilySpec& f,
                                     const std::vector<Int>& primes = default_torsion_primes(),
                                     int jobs = 1);

// Specimens with m_N = lambda, indexed by the eigenvector entries
// v_2, ..., v_{N-1} in {1, ..., lambda}, ascending lexicographic order.
std::vector<Specimen> lambda_eq_mN_family(const Int& lambda, int N);

} // namespace afinv
