#pragma once

#include <vector>

#include "afinv/intpoly.hpp"

namespace afinv {

using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Small dense matrices, row-major. Sizes here are bounded by the rank cap, so
// naive algorithms are used throughout.
struct ZMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  ZMat() = default;
  ZMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Int(0)) {}
  Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[size_t(i) * cols + j]; }
  static ZMat identity(int n);
  bool operator==(const ZMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

struct QMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Rat(0)) {}
  Rat& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[size_t(i) * cols + j]; }
  static QMat identity(int n);
  static QMat from_z(const ZMat& m);
  bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

ZMat mul(const ZMat& x, const ZMat& y);
QMat mul(const QMat& x, const QMat& y);
ZVec mul(const ZMat& m, const ZVec& v);
QVec mul(const QMat& m, const QVec& v);
ZMat zpow(const ZMat& m, int e);

ZMat add(const ZMat& x, const ZMat& y);
QMat sub(const QMat& x, const QMat& y);

Int det(const ZMat& m);              // exact, fraction-free via Q elimination
QMat inverse(const QMat& m);         // throws on singular input
bool is_integral(const QMat& m);
bool is_integral(const QVec& v);
ZMat to_z(const QMat& m);            // requires is_integral
bool is_nonnegative(const ZMat& m);

// Characteristic polynomial det(tI - M), exact.
IntPoly char_poly_of(const ZMat& m);

} // namespace afinv
