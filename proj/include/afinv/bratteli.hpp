#pragma once

#include "afinv/algebraic.hpp"
#include "afinv/specimen.hpp"

namespace afinv {

// Additive semigroup generated by the weights; gcd 1 makes the gap set finite.
struct NumericalSemigroup {
  std::vector<Int> generators; // distinct weights, ascending
  std::vector<Int> gaps;       // positive integers not in the semigroup
  Int conductor;               // least c with [c, inf) inside the semigroup
};
NumericalSemigroup semigroup(const std::vector<Int>& L);

// Leveled diagram with nodes (n, m), m = 0..N-1. Nodes of dimension zero are
// absent; edges out of absent nodes are dropped. After stabilization every
// node is present and the incidence is the constant matrix J.
struct Diagram {
  Specimen s;
  std::vector<int> level_numbers;  // original level of each stored row
  std::vector<ZVec> dims;          // one length-N vector per stored row
  std::vector<ZMat> incidence;     // dims[i+1] = incidence[i] * dims[i]
  int stabilization = -1;
};

Diagram build_diagram(const Specimen& s, int depth);

// Exact trace values of minimal projections per node, value a^{n+m} at node
// (n, m); rationals when lambda is rational.
std::vector<std::vector<FieldElem>> trace_profile(const Specimen& s, int depth);

// Keeps the listed levels (strictly increasing, each present in the diagram)
// and composes the incidence matrices in between.
Diagram telescope(const Diagram& d, const std::vector<int>& cuts);

std::string diagram_to_dot(const Diagram& d);

} // namespace afinv
