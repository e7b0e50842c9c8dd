#pragma once

#include <string>
#include <vector>

#include "afinv/intpoly.hpp"
#include "afinv/ratlin.hpp"

namespace afinv {

// Input datum: the first column m = (m_1, ..., m_N) of the incidence matrix,
// equivalently the multiset L in which the weight j appears m_j times.
class Specimen {
public:
  static constexpr int kMaxRank = 64;

  // Trivial specimen m = (1); placeholder before assignment.
  Specimen() : m_{Int(1)}, gcd_valid_(true) {}

  // Validates m_N >= 1, N >= 1 and the primitivity condition
  // gcd{ j : m_j != 0 } = 1; throws GcdNotOne on failure.
  static Specimen from_m(ZVec m);
  // Multiplicity count of a nonempty list of positive integers.
  static Specimen from_L(const std::vector<Int>& L);
  // Divides L by gcd(L) first; records the scale factor.
  static Specimen normalized_from_L(const std::vector<Int>& L, Int* scale = nullptr);
  // Skips the gcd check (used by the family enumerator and parameter tables).
  static Specimen unchecked_from_m(ZVec m);

  // Parses "m=1,0,4" or "L=1,2,4".
  static Specimen parse(const std::string& text);

  int N() const { return int(m_.size()); }
  const ZVec& m() const { return m_; }
  const Int& m_N() const { return m_.back(); }
  Int d() const;                   // number of Cuntz generators, sum of m_j
  std::vector<Int> L() const;      // weights with multiplicity, ascending
  bool gcd_valid() const { return gcd_valid_; }

  ZMat to_matrix() const;          // companion-form incidence matrix J
  QMat inverse_matrix() const;     // exact J^{-1}
  IntPoly char_poly() const;       // t^N - m_1 t^{N-1} - ... - m_N
  IntPoly p_L() const;             // sum m_j x^j - 1

  Specimen inflate(int s) const;   // L -> sL (generally gcd-invalid)

  bool operator==(const Specimen& o) const { return m_ == o.m_; }
  bool operator!=(const Specimen& o) const { return m_ != o.m_; }
  std::string str() const;         // "m=1,0,4"

private:
  Specimen(ZVec m, bool gcd_valid) : m_(std::move(m)), gcd_valid_(gcd_valid) {}
  ZVec m_;
  bool gcd_valid_ = false;
};

} // namespace afinv
