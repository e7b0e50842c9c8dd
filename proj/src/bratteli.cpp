#include "afinv/bratteli.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "afinv/error.hpp"

namespace afinv {

NumericalSemigroup semigroup(const std::vector<Int>& L) {
  if (L.empty()) fail(errc::invalid_argument, "empty weight list");
  for (const Int& x : L)
    if (x < 1) fail(errc::invalid_argument, "weights must be positive");
  if (gcd_vec(L) != 1) fail(errc::gcd_not_one, "gcd of the weights is " + gcd_vec(L).get_str());

  NumericalSemigroup sg;
  std::set<Int> gens(L.begin(), L.end());
  sg.generators.assign(gens.begin(), gens.end());

  // Sieve bound (min-1)*max + 1: every residue class mod the smallest
  // generator is reached by a sum of fewer than `min` generators, so the
  // conductor lies below the bound.
  long a = sg.generators.front().get_si();
  long c = sg.generators.back().get_si();
  long bound = std::max(2L, (a - 1) * c + 1);
  std::vector<char> in(size_t(bound) + 1, 0);
  in[0] = 1;
  for (long v = 1; v <= bound; ++v)
    for (const Int& g : sg.generators) {
      long gl = g.get_si();
      if (gl <= v && in[size_t(v - gl)]) {
        in[size_t(v)] = 1;
        break;
      }
    }
  long conductor = 0;
  for (long v = bound; v >= 1; --v)
    if (!in[size_t(v)]) {
      conductor = v + 1;
      break;
    }
  // The sieve bound dominates the Frobenius number of the two smallest
  // generators; everything above `bound` is in the semigroup.
  sg.conductor = conductor;
  for (long v = 1; v < conductor; ++v)
    if (!in[size_t(v)]) sg.gaps.push_back(v);
  return sg;
}

Diagram build_diagram(const Specimen& s, int depth) {
  if (!s.gcd_valid()) fail(errc::gcd_not_one, s.str());
  if (depth < 0) fail(errc::invalid_argument, "negative depth");
  const int N = s.N();
  Diagram d;
  d.s = s;

  // Dimensions from first principles: dim(n, 0) counts weighted words of
  // total weight n, dim(n, m) = sum_{s<n} dim(s, 0) m_{n+m-s} for m >= 1.
  std::vector<Int> words(size_t(depth) + 1, Int(0));
  words[0] = 1;
  for (int n = 1; n <= depth; ++n)
    for (int j = 1; j <= std::min(n, N); ++j) words[size_t(n)] += s.m()[size_t(j - 1)] * words[size_t(n - j)];

  for (int n = 0; n <= depth; ++n) {
    ZVec row(size_t(N), Int(0));
    row[0] = n == 0 ? Int(1) : words[size_t(n)];
    for (int m = 1; m < N; ++m) {
      Int acc = 0;
      for (int t = std::max(0, n + m - N); t < n; ++t) acc += words[size_t(t)] * s.m().at(size_t(n + m - t - 1));
      row[size_t(m)] = acc;
    }
    d.level_numbers.push_back(n);
    d.dims.push_back(std::move(row));
  }

  // Stabilization: the first level from which every node is present.
  d.stabilization = -1;
  for (int n = 0; n <= depth; ++n) {
    bool all = true;
    for (int m = 0; m < N; ++m)
      if (d.dims[size_t(n)][size_t(m)] == 0) all = false;
    if (all) {
      d.stabilization = n;
      break;
    }
  }
  if (d.stabilization < 0) fail(errc::depth_too_shallow, "no fully present level up to depth");

  // Incidence matrices, masked at absent source nodes; dims recursion checked.
  const ZMat J = s.to_matrix();
  for (int n = 0; n < depth; ++n) {
    ZMat inc = J;
    for (int k = 0; k < N; ++k)
      if (d.dims[size_t(n)][size_t(k)] == 0)
        for (int m = 0; m < N; ++m) inc.at(m, k) = 0;
    if (mul(inc, d.dims[size_t(n)]) != d.dims[size_t(n + 1)])
      fail(errc::internal, "dimension recursion fails");
    d.incidence.push_back(std::move(inc));
  }
  return d;
}

std::vector<std::vector<FieldElem>> trace_profile(const Specimen& s, int depth) {
  Diagram d = build_diagram(s, depth); // validates the specimen and depth
  AlgebraicReal a = isolate_positive_root(s.p_L());
  FieldElem a_el = FieldElem::generator(a);
  std::vector<std::vector<FieldElem>> out;
  FieldElem an = FieldElem::from_rational(a, Rat(1));
  for (int n = 0; n <= depth; ++n) {
    std::vector<FieldElem> row;
    FieldElem v = an;
    for (int m = 0; m < s.N(); ++m) {
      row.push_back(v);
      v = v * a_el;
    }
    // unital trace: <dims(n), values(n)> = 1, exact at every level
    FieldElem tot = FieldElem::from_rational(a, Rat(0));
    for (int m = 0; m < s.N(); ++m)
      tot = tot + row[size_t(m)] * FieldElem::from_rational(a, Rat(d.dims[size_t(n)][size_t(m)]));
    if (!(tot == FieldElem::from_rational(a, Rat(1))))
      fail(errc::internal, "trace normalization fails at level " + std::to_string(n));
    out.push_back(std::move(row));
    an = an * a_el;
  }
  return out;
}

Diagram telescope(const Diagram& d, const std::vector<int>& cuts) {
  if (cuts.empty()) fail(errc::invalid_cuts, "no levels kept");
  for (size_t i = 0; i + 1 < cuts.size(); ++i)
    if (cuts[i] >= cuts[i + 1]) fail(errc::invalid_cuts, "cut levels must increase strictly");
  std::vector<size_t> where;
  for (int c : cuts) {
    auto it = std::find(d.level_numbers.begin(), d.level_numbers.end(), c);
    if (it == d.level_numbers.end())
      fail(errc::invalid_cuts, "level " + std::to_string(c) + " not present");
    where.push_back(size_t(it - d.level_numbers.begin()));
  }
  Diagram out;
  out.s = d.s;
  out.stabilization = d.stabilization;
  for (size_t i = 0; i < where.size(); ++i) {
    out.level_numbers.push_back(d.level_numbers[where[i]]);
    out.dims.push_back(d.dims[where[i]]);
    if (i + 1 < where.size()) {
      ZMat acc = d.incidence.at(where[i]);
      for (size_t t = where[i] + 1; t < where[i + 1]; ++t) acc = mul(d.incidence.at(t), acc);
      out.incidence.push_back(std::move(acc));
    }
  }
  return out;
}

std::string diagram_to_dot(const Diagram& d) {
  std::ostringstream os;
  os << "digraph bratteli {\n  rankdir=TB;\n  node [shape=circle];\n";
  const int N = d.s.N();
  for (size_t li = 0; li < d.level_numbers.size(); ++li) {
    os << "  { rank=same;";
    for (int m = 0; m < N; ++m)
      if (d.dims[li][size_t(m)] != 0)
        os << " n" << d.level_numbers[li] << "m" << m << " [label=\""
           << d.dims[li][size_t(m)].get_str() << "\"];";
    os << " }\n";
  }
  for (size_t li = 0; li + 1 < d.level_numbers.size(); ++li) {
    const ZMat& inc = d.incidence[li];
    for (int k = 0; k < N; ++k)
      for (int m = 0; m < N; ++m) {
        const Int& mult = inc.at(m, k);
        if (mult == 0) continue;
        std::string from = "n" + std::to_string(d.level_numbers[li]) + "m" + std::to_string(k);
        std::string to = "n" + std::to_string(d.level_numbers[li + 1]) + "m" + std::to_string(m);
        if (mult <= 4) {
          for (Int e = 0; e < mult; ++e) os << "  " << from << " -> " << to << ";\n";
        } else {
          os << "  " << from << " -> " << to << " [label=\"x" << mult.get_str() << "\"];\n";
        }
      }
  }
  os << "}\n";
  return os.str();
}

} // namespace afinv
