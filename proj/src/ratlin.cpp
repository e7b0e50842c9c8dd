#include "afinv/ratlin.hpp"

#include "afinv/error.hpp"
#include "afinv/intpoly.hpp"

namespace afinv {

ZMat ZMat::identity(int n) {
  ZMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::from_z(const ZMat& z) {
  QMat m(z.rows, z.cols);
  for (size_t i = 0; i < z.a.size(); ++i) m.a[i] = Rat(z.a[i]);
  return m;
}

namespace {
void require_conformable(int xc, int yr) {
  if (xc != yr) fail(errc::shape_mismatch, "matrix product shapes");
}
} // namespace

ZMat mul(const ZMat& x, const ZMat& y) {
  require_conformable(x.cols, y.rows);
  ZMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

QMat mul(const QMat& x, const QMat& y) {
  require_conformable(x.cols, y.rows);
  QMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rat& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

ZVec mul(const ZMat& m, const ZVec& v) {
  require_conformable(m.cols, int(v.size()));
  ZVec r(size_t(m.rows), Int(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[size_t(i)] += m.at(i, j) * v[size_t(j)];
  return r;
}

QVec mul(const QMat& m, const QVec& v) {
  require_conformable(m.cols, int(v.size()));
  QVec r(size_t(m.rows), Rat(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[size_t(i)] += m.at(i, j) * v[size_t(j)];
  return r;
}

ZMat zpow(const ZMat& m, int e) {
  if (m.rows != m.cols) fail(errc::shape_mismatch, "power of a non-square matrix");
  if (e < 0) fail(errc::invalid_argument, "negative matrix power");
  ZMat r = ZMat::identity(m.rows);
  ZMat base = m;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

ZMat add(const ZMat& x, const ZMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) fail(errc::shape_mismatch, "matrix sum shapes");
  ZMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

QMat sub(const QMat& x, const QMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) fail(errc::shape_mismatch, "matrix difference shapes");
  QMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

Int det(const ZMat& m) {
  if (m.rows != m.cols) fail(errc::shape_mismatch, "determinant of a non-square matrix");
  int n = m.rows;
  QMat w = QMat::from_z(m);
  Rat d(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (w.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(col, j));
      d = -d;
    }
    d *= w.at(col, col);
    Rat inv = 1 / w.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      Rat f = w.at(r, col) * inv;
      if (f == 0) continue;
      for (int j = col; j < n; ++j) w.at(r, j) -= f * w.at(col, j);
    }
  }
  if (d.get_den() != 1) fail(errc::internal, "non-integral determinant");
  return d.get_num();
}

QMat inverse(const QMat& m) {
  if (m.rows != m.cols) fail(errc::shape_mismatch, "inverse of a non-square matrix");
  int n = m.rows;
  QMat w = m;
  QMat inv = QMat::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (w.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) fail(errc::invalid_argument, "singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(w.at(piv, j), w.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Rat f = 1 / w.at(col, col);
    for (int j = 0; j < n; ++j) {
      w.at(col, j) *= f;
      inv.at(col, j) *= f;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || w.at(r, col) == 0) continue;
      Rat g = w.at(r, col);
      for (int j = 0; j < n; ++j) {
        w.at(r, j) -= g * w.at(col, j);
        inv.at(r, j) -= g * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool is_integral(const QMat& m) {
  for (const Rat& x : m.a)
    if (x.get_den() != 1) return false;
  return true;
}

bool is_integral(const QVec& v) {
  for (const Rat& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

ZMat to_z(const QMat& m) {
  if (!is_integral(m)) fail(errc::invalid_argument, "matrix is not integral");
  ZMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = m.a[i].get_num();
  return r;
}

bool is_nonnegative(const ZMat& m) {
  for (const Int& x : m.a)
    if (x < 0) return false;
  return true;
}

IntPoly char_poly_of(const ZMat& m) {
  if (m.rows != m.cols) fail(errc::shape_mismatch, "characteristic polynomial");
  // Power traces plus Newton's identities, exact over Z.
  int n = m.rows;
  std::vector<Int> c(size_t(n) + 1, Int(0));
  c[size_t(n)] = 1;
  std::vector<Int> ptr(size_t(n) + 1, Int(0)); // ptr[k] = tr(m^k)
  ZMat P = ZMat::identity(n);
  for (int k = 1; k <= n; ++k) {
    P = mul(P, m);
    Int tr = 0;
    for (int i = 0; i < n; ++i) tr += P.at(i, i);
    ptr[size_t(k)] = tr;
  }
  std::vector<Int> e(size_t(n) + 1, Int(0)); // elementary symmetric functions
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Int acc = 0;
    for (int i = 1; i <= k; ++i) acc += (i % 2 == 1 ? 1 : -1) * e[size_t(k - i)] * ptr[size_t(i)];
    if (acc % k != 0) fail(errc::internal, "Newton identity division");
    e[size_t(k)] = acc / k;
  }
  for (int k = 0; k <= n; ++k) c[size_t(n - k)] = (k % 2 == 0 ? 1 : -1) * e[size_t(k)];
  return IntPoly(std::move(c));
}

} // namespace afinv
