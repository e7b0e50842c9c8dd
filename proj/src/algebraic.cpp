#include "afinv/algebraic.hpp"

#include <sstream>

#include "afinv/error.hpp"

namespace afinv {

AlgebraicReal::AlgebraicReal(IntPoly minpoly, Rat lo, Rat hi)
    : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (minpoly_.degree() < 1) fail(errc::invalid_argument, "constant minimal polynomial");
  if (minpoly_.degree() == 1) {
    Rat v = make_rat(-minpoly_.coeff(0), minpoly_.coeff(1));
    lo_ = hi_ = v;
    minpoly_ = minpoly_.primitive_part();
    return;
  }
  if (lo_ >= hi_) fail(errc::invalid_argument, "empty isolating interval");
  if (minpoly_.sign_at(lo_) == 0 || minpoly_.sign_at(hi_) == 0)
    fail(errc::invalid_argument, "interval endpoint is a root");
  if (minpoly_.sign_at(lo_) == minpoly_.sign_at(hi_))
    fail(errc::invalid_argument, "no sign change over the isolating interval");
  minpoly_ = minpoly_.primitive_part();
}

AlgebraicReal AlgebraicReal::from_rational(const Rat& v) {
  AlgebraicReal r;
  r.minpoly_ = IntPoly(std::vector<Int>{-v.get_num(), v.get_den()});
  r.lo_ = r.hi_ = v;
  return r;
}

Rat AlgebraicReal::rational_value() const {
  if (!is_rational()) fail(errc::invalid_argument, "irrational value");
  return lo_;
}

void AlgebraicReal::bisect_once() const {
  Rat mid = (lo_ + hi_) / 2;
  // mid cannot be a root: the minimal polynomial is irreducible of degree >= 2
  if (minpoly_.sign_at(mid) == minpoly_.sign_at(lo_)) lo_ = mid;
  else hi_ = mid;
}

void AlgebraicReal::refine_to(const Rat& width) const {
  if (is_rational()) return;
  while (hi_ - lo_ > width) bisect_once();
}

int AlgebraicReal::compare(const Rat& r) const {
  if (is_rational()) return sgn(Rat(lo_ - r));
  if (minpoly_.sign_at(r) == 0) {
    // r is a rational root of an irreducible polynomial: degree 1 only,
    // handled above; keep the check for safety.
    fail(errc::internal, "rational root of an irreducible minimal polynomial");
  }
  for (;;) {
    if (r <= lo_) return 1;
    if (r >= hi_) return -1;
    bisect_once();
  }
}

int AlgebraicReal::compare(const AlgebraicReal& o) const {
  if (is_rational()) return -o.compare(lo_);
  if (o.is_rational()) return compare(o.lo_);
  if (minpoly_ == o.minpoly_) {
    // Equal iff both isolating intervals bracket the same root: the overlap
    // carries a sign change iff it contains the (single) root of each side.
    for (;;) {
      Rat l = std::max(lo_, o.lo_), h = std::min(hi_, o.hi_);
      if (l < h && minpoly_.sign_at(l) != 0 && minpoly_.sign_at(l) != minpoly_.sign_at(h))
        return 0;
      if (hi_ <= o.lo_) return -1;
      if (o.hi_ <= lo_) return 1;
      bisect_once();
      o.bisect_once();
    }
  }
  // Distinct minimal polynomials mean distinct numbers; separate by interval.
  for (;;) {
    if (hi_ <= o.lo_) return -1;
    if (o.hi_ <= lo_) return 1;
    bisect_once();
    o.bisect_once();
  }
}

double AlgebraicReal::approx() const {
  refine_to(make_rat(1, Int(1) << 60));
  Rat mid = (lo_ + hi_) / 2;
  return mid.get_d();
}

std::string AlgebraicReal::str() const {
  if (is_rational()) return lo_.get_str();
  std::ostringstream os;
  os << "root of " << minpoly_.str() << " in (" << lo_.get_str() << ", " << hi_.get_str() << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

FieldElem::FieldElem(AlgebraicReal root, std::vector<Rat> coeffs)
    : root_(std::move(root)), c_(std::move(coeffs)) {
  reduce();
}

void FieldElem::reduce() {
  int d = root_.minpoly().degree();
  if (int(c_.size()) > d) {
    // reduce modulo the minimal polynomial over Q
    const IntPoly& mp = root_.minpoly();
    Rat lead(mp.leading());
    for (int i = int(c_.size()) - 1; i >= d; --i) {
      Rat q = c_[size_t(i)] / lead;
      if (q == 0) continue;
      for (int j = 0; j <= d; ++j) c_[size_t(i - d + j)] -= q * Rat(mp.coeff(j));
    }
    c_.resize(size_t(d));
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FieldElem FieldElem::from_rational(const AlgebraicReal& root, const Rat& v) {
  return FieldElem(root, std::vector<Rat>{v});
}

FieldElem FieldElem::generator(const AlgebraicReal& root) {
  if (root.is_rational()) return from_rational(root, root.rational_value());
  return FieldElem(root, std::vector<Rat>{Rat(0), Rat(1)});
}

Rat FieldElem::rational_value() const {
  if (c_.empty()) return Rat(0);
  if (c_.size() == 1) return c_[0];
  fail(errc::invalid_argument, "field element is irrational");
}

namespace {
void check_same_field(const FieldElem& x, const FieldElem& y) {
  if (!(x.root().minpoly() == y.root().minpoly()))
    fail(errc::invalid_argument, "field elements over different roots");
}
} // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same_field(*this, o);
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return FieldElem(root_, std::move(c));
}

FieldElem FieldElem::operator-() const {
  std::vector<Rat> c = c_;
  for (Rat& x : c) x = -x;
  return FieldElem(root_, std::move(c));
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same_field(*this, o);
  if (c_.empty() || o.c_.empty()) return FieldElem(root_, {});
  std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return FieldElem(root_, std::move(c));
}

FieldElem FieldElem::inverse() const {
  if (c_.empty()) fail(errc::invalid_argument, "inverse of zero");
  // extended Euclid in Q[x] against the minimal polynomial
  std::vector<Rat> r0(root_.minpoly().coeffs().begin(), root_.minpoly().coeffs().end());
  std::vector<Rat> r1 = c_;
  std::vector<Rat> s0{Rat(0)}, s1{Rat(1)}; // Bezout coefficients for c_
  auto trim = [](std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(r0);
  trim(r1);
  while (!r1.empty() && r1.size() > 1) {
    std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rat(0));
    std::vector<Rat> rem = r0;
    int d1 = int(r1.size()) - 1;
    for (int i = int(rem.size()) - 1; i >= d1; --i) {
      Rat f = rem[size_t(i)] / r1.back();
      if (f == 0) continue;
      q[size_t(i - d1)] = f;
      for (int j = 0; j <= d1; ++j) rem[size_t(i - d1 + j)] -= f * r1[size_t(j)];
    }
    trim(rem);
    // s_new = s0 - q*s1
    std::vector<Rat> snew(std::max(s0.size(), q.size() + s1.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) snew[i] += s0[i];
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
    trim(snew);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snew);
  }
  if (r1.empty()) fail(errc::internal, "element shares a factor with an irreducible modulus");
  Rat unit = r1[0];
  for (Rat& x : s1) x /= unit;
  return FieldElem(root_, std::move(s1));
}

bool FieldElem::operator==(const FieldElem& o) const {
  check_same_field(*this, o);
  return c_ == o.c_;
}

int FieldElem::sign() const {
  if (c_.empty()) return 0;
  if (c_.size() == 1) return sgn(c_[0]);
  // Interval evaluation with exact rational endpoints; the element is nonzero
  // (coefficients are reduced mod an irreducible polynomial), so refinement
  // terminates.
  for (;;) {
    Rat lo = root_.lo(), hi = root_.hi();
    Rat vlo(0), vhi(0);
    for (size_t i = c_.size(); i-- > 0;) {
      // [vlo, vhi] * [lo, hi] + c_i, all endpoints exact
      Rat cands[4] = {vlo * lo, vlo * hi, vhi * lo, vhi * hi};
      Rat mn = cands[0], mx = cands[0];
      for (const Rat& x : cands) {
        if (x < mn) mn = x;
        if (x > mx) mx = x;
      }
      vlo = mn + c_[i];
      vhi = mx + c_[i];
    }
    if (vlo > 0) return 1;
    if (vhi < 0) return -1;
    root_.refine_to((hi - lo) / 4);
  }
}

double FieldElem::approx() const {
  double a = root_.approx();
  double r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * a + c_[i].get_d();
  return r;
}

std::string FieldElem::str(const std::string& var) const {
  if (c_.empty()) return "0";
  if (c_.size() == 1) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    Rat ac = abs(c);
    if (i == 0 || ac != 1) os << ac.get_str();
    if (i >= 1) {
      os << var;
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

AlgebraicReal isolate_positive_root(const IntPoly& f) {
  if (f.is_zero()) fail(errc::invalid_argument, "zero polynomial");
  // Callers pass p_L-shaped inputs: strictly increasing on (0, inf) with
  // f(0) < 0, so the unique positive root sits in (0, 1].
  if (f.sign_at(Rat(1)) == 0) return AlgebraicReal::from_rational(Rat(1));
  if (f.sign_at(Rat(0)) >= 0 || f.sign_at(Rat(1)) < 0)
    fail(errc::no_root_in_unit_interval, f.str());
  Rat lo(0), hi(1);
  // Bisect with f itself until the bracket is strictly positive and tight.
  for (int i = 0; i < 2048 && (lo == 0 || i < 8); ++i) {
    Rat mid = (lo + hi) / 2;
    int s = f.sign_at(mid);
    if (s == 0) {
      // rational root at mid
      Factorization fac = factor_over_Z(f);
      for (const auto& [g, e] : fac.factors)
        if (g.degree() == 1 && g.eval(mid) == 0) return AlgebraicReal::from_rational(mid);
      fail(errc::internal, "lost a rational root");
    }
    if (s < 0) lo = mid;
    else hi = mid;
  }
  if (lo == 0) fail(errc::no_root_in_unit_interval, "root not separated from 0 for " + f.str());
  Factorization fac = factor_over_Z(f);
  for (const auto& [g, e] : fac.factors) {
    if (g.degree() == 1) {
      Rat r = make_rat(-g.coeff(0), g.coeff(1));
      if (r > lo && r <= hi) return AlgebraicReal::from_rational(r);
      continue;
    }
    int slo = g.sign_at(lo), shi = g.sign_at(hi);
    if (slo != 0 && shi != 0 && slo != shi) return AlgebraicReal(g, lo, hi);
  }
  fail(errc::no_root_in_unit_interval, "no factor vanishes in the bracket of " + f.str());
}

} // namespace afinv
