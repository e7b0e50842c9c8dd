#include "afinv/intpoly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "afinv/error.hpp"

namespace afinv {

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(int k, const Int& coeff) {
  std::vector<Int> c(size_t(k) + 1, Int(0));
  c[size_t(k)] = coeff;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> c = c_;
  for (Int& x : c) x = -x;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const Int& k) const {
  std::vector<Int> c = c_;
  for (Int& x : c) x *= k;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<Int> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(long(i));
  return IntPoly(std::move(c));
}

Int IntPoly::content() const {
  Int g = 0;
  for (const Int& x : c_) g = gcd_int(g, x);
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  Int g = content();
  if (leading() < 0) g = -g;
  std::vector<Int> c = c_;
  for (Int& x : c) x /= g;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::reversed() const {
  std::vector<Int> c(c_.rbegin(), c_.rend());
  return IntPoly(std::move(c));
}

Int IntPoly::eval(const Int& x) const {
  Int r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + Rat(c_[i]);
  return r;
}

int IntPoly::sign_at(const Rat& x) const { return sgn(eval(x)); }

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const Int& c = c_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    Int ac = abs_int(c);
    if (i == 0 || ac != 1) os << ac.get_str();
    if (i >= 1) {
      os << var;
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

namespace {

// Division over Q. Returns false (and nothing through the out-parameters)
// when the rational quotient or remainder has a non-unit denominator.
bool divmod_rational(const IntPoly& f, const IntPoly& g, IntPoly* q_out, IntPoly* r_out) {
  int dg = g.degree();
  std::vector<Rat> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<Rat> quot;
  if (int(rem.size()) - 1 >= dg) quot.assign(rem.size() - size_t(dg), Rat(0));
  const Rat lead = Rat(g.leading());
  for (int i = int(rem.size()) - 1; i >= dg; --i) {
    Rat q = rem[size_t(i)] / lead;
    if (q == 0) continue;
    quot[size_t(i - dg)] = q;
    for (int j = 0; j <= dg; ++j) rem[size_t(i - dg + j)] -= q * Rat(g.coeff(j));
  }
  if (int(rem.size()) > dg) rem.resize(size_t(dg));
  for (const Rat& x : quot)
    if (x.get_den() != 1) return false;
  for (const Rat& x : rem)
    if (x.get_den() != 1) return false;
  auto lower = [](const std::vector<Rat>& v) {
    std::vector<Int> c(v.size());
    for (size_t i = 0; i < v.size(); ++i) c[i] = v[i].get_num();
    return IntPoly(std::move(c));
  };
  if (q_out) *q_out = lower(quot);
  if (r_out) *r_out = lower(rem);
  return true;
}

bool try_divexact(const IntPoly& f, const IntPoly& g, IntPoly* q_out) {
  IntPoly q, r;
  if (!divmod_rational(f, g, &q, &r)) return false;
  if (!r.is_zero()) return false;
  if (q_out) *q_out = q;
  return true;
}

} // namespace

std::pair<IntPoly, IntPoly> poly_divmod(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) fail(errc::invalid_argument, "division by the zero polynomial");
  IntPoly q, r;
  if (!divmod_rational(f, g, &q, &r))
    fail(errc::non_integral_division, "(" + f.str() + ") / (" + g.str() + ")");
  return {q, r};
}

IntPoly poly_divexact(const IntPoly& f, const IntPoly& g) {
  auto [q, r] = poly_divmod(f, g);
  if (!r.is_zero()) fail(errc::non_integral_division, "inexact division by " + g.str());
  return q;
}

IntPoly poly_mod_monic(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero() || g.leading() != 1) fail(errc::invalid_argument, "modulus must be monic");
  std::vector<Int> rem = f.coeffs();
  int dg = g.degree();
  for (int i = int(rem.size()) - 1; i >= dg; --i) {
    Int q = rem[size_t(i)];
    if (q == 0) continue;
    for (int j = 0; j <= dg; ++j) rem[size_t(i - dg + j)] -= q * g.coeff(j);
  }
  if (int(rem.size()) > dg) rem.resize(size_t(dg));
  return IntPoly(std::move(rem));
}

IntPoly reduce_mod(const IntPoly& f, const Int& n) {
  if (n < 2) fail(errc::invalid_argument, "modulus must be >= 2");
  std::vector<Int> c = f.coeffs();
  for (Int& x : c) {
    x %= n;
    if (x < 0) x += n;
  }
  return IntPoly(std::move(c));
}

IntPoly Factorization::reassemble() const {
  IntPoly f = IntPoly::from_int(content);
  for (const auto& [g, e] : factors)
    for (int i = 0; i < e; ++i) f = f * g;
  return f;
}

namespace {

// gcd in Q[x], scaled back to a primitive polynomial in Z[x].
IntPoly poly_gcd_primitive(const IntPoly& a, const IntPoly& b) {
  std::vector<Rat> ra(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rat> rb(b.coeffs().begin(), b.coeffs().end());
  auto trimq = [](std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trimq(ra);
  trimq(rb);
  while (!rb.empty()) {
    int dbq = int(rb.size()) - 1;
    for (int i = int(ra.size()) - 1; i >= dbq; --i) {
      Rat q = ra[size_t(i)] / rb.back();
      if (q == 0) continue;
      for (int j = 0; j <= dbq; ++j) ra[size_t(i - dbq + j)] -= q * rb[size_t(j)];
    }
    trimq(ra);
    std::swap(ra, rb);
  }
  Int den = 1;
  for (const Rat& x : ra) den = lcm_int(den, x.get_den());
  std::vector<Int> c(ra.size());
  for (size_t i = 0; i < ra.size(); ++i) c[i] = Rat(ra[i] * Rat(den)).get_num();
  return IntPoly(std::move(c)).primitive_part();
}

// All complex roots, Durand-Kerner plus a Newton polish.
std::vector<std::complex<double>> numeric_roots(const IntPoly& f) {
  int n = f.degree();
  std::vector<std::complex<double>> cf(size_t(n) + 1);
  for (int i = 0; i <= n; ++i) cf[size_t(i)] = f.coeff(i).get_d();
  for (int i = 0; i <= n; ++i) cf[size_t(i)] /= f.leading().get_d();
  auto eval = [&](std::complex<double> z) {
    std::complex<double> r = 0;
    for (int i = n; i >= 0; --i) r = r * z + cf[size_t(i)];
    return r;
  };
  auto deriv = [&](std::complex<double> z) {
    std::complex<double> r = 0;
    for (int i = n; i >= 1; --i) r = r * z + cf[size_t(i)] * double(i);
    return r;
  };
  std::vector<std::complex<double>> z(static_cast<size_t>(n));
  const std::complex<double> seed(0.4, 0.9);
  std::complex<double> p(1.0, 0.0);
  for (int i = 0; i < n; ++i) {
    p *= seed;
    z[size_t(i)] = p;
  }
  for (int it = 0; it < 1000; ++it) {
    double moved = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[size_t(i)] - z[size_t(j)];
      if (std::abs(den) < 1e-300) continue;
      std::complex<double> delta = eval(z[size_t(i)]) / den;
      z[size_t(i)] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14) break;
  }
  for (auto& r : z)
    for (int it = 0; it < 20; ++it) {
      std::complex<double> d = deriv(r);
      if (std::abs(d) < 1e-30) break;
      std::complex<double> step = eval(r) / d;
      r -= step;
      if (std::abs(step) < 1e-16) break;
    }
  return z;
}

// Looks for a proper factor of a primitive squarefree f without rational
// roots by clustering numeric roots; every candidate is confirmed by exact
// division, so rounding can only cause a miss, never a wrong factor.
IntPoly find_cluster_factor(const IntPoly& f) {
  int n = f.degree();
  if (n <= 3) return IntPoly(); // a proper factor would have produced a rational root
  auto roots = numeric_roots(f);
  Int flead = abs_int(f.leading());
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    int k = __builtin_popcount(mask);
    if (k == 0 || k > n / 2) continue;
    if (2 * k == n && !(mask & 1u)) continue; // complement yields the same split
    bool closed = true;                       // under complex conjugation
    for (int i = 0; i < n && closed; ++i) {
      if (!(mask & (1u << i)) || std::abs(roots[size_t(i)].imag()) < 1e-9) continue;
      bool partner = false;
      for (int j = 0; j < n; ++j) {
        if (j == i || !(mask & (1u << j))) continue;
        if (std::abs(roots[size_t(i)].real() - roots[size_t(j)].real()) < 1e-6 &&
            std::abs(roots[size_t(i)].imag() + roots[size_t(j)].imag()) < 1e-6)
          partner = true;
      }
      closed = partner;
    }
    if (!closed) continue;
    // monic product over the subset, coefficients highest first
    std::vector<std::complex<double>> cf{1.0};
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      cf.push_back(0.0);
      for (size_t j = cf.size() - 1; j >= 1; --j) cf[j] -= roots[size_t(i)] * cf[j - 1];
    }
    for (Int dl = 1; dl <= flead; ++dl) {
      if (flead % dl != 0) continue;
      double scale = dl.get_d();
      std::vector<Int> ic(cf.size());
      bool ok = true;
      for (size_t i = 0; i < cf.size() && ok; ++i) {
        std::complex<double> v = cf[i] * scale;
        double re = std::round(v.real());
        ok = std::abs(v.real() - re) < 0.25 && std::abs(v.imag()) < 0.25 && std::abs(re) < 9e15;
        if (ok) ic[i] = Int(long(re));
      }
      if (!ok) continue;
      std::reverse(ic.begin(), ic.end());
      IntPoly cand{std::move(ic)};
      if (cand.degree() != k) continue;
      cand = cand.primitive_part();
      if (cand.degree() < 1) continue;
      if (try_divexact(f, cand, nullptr)) return cand;
    }
  }
  return IntPoly();
}

// Irreducible factors of a primitive squarefree polynomial. Rational roots
// are stripped first, then numeric clustering splits what is left.
void factor_squarefree(IntPoly g, std::vector<IntPoly>& out) {
  while (g.degree() >= 1 && g.coeff(0) == 0) {
    out.push_back(IntPoly::monomial(1));
    g = poly_divexact(g, IntPoly::monomial(1));
  }
  bool found = true;
  while (found && g.degree() >= 1) {
    found = false;
    Int c0 = abs_int(g.coeff(0)), cl = abs_int(g.leading());
    for (Int p = 1; p <= c0 && !found; ++p) {
      if (c0 % p != 0) continue;
      for (Int q = 1; q <= cl && !found; ++q) {
        if (cl % q != 0 || gcd_int(p, q) != 1) continue;
        for (int s : {1, -1}) {
          IntPoly lin(std::vector<Int>{-s * p, q});
          IntPoly quot;
          if (try_divexact(g, lin, &quot)) {
            out.push_back(lin.primitive_part());
            g = quot;
            found = true;
            break;
          }
        }
      }
    }
  }
  while (g.degree() >= 1) {
    IntPoly factor = find_cluster_factor(g);
    if (factor.is_zero()) {
      out.push_back(g.primitive_part());
      return;
    }
    out.push_back(factor.primitive_part());
    g = poly_divexact(g, factor);
  }
}

} // namespace

Factorization factor_over_Z(const IntPoly& f, int degree_bound) {
  if (f.is_zero()) fail(errc::invalid_argument, "factoring the zero polynomial");
  if (f.degree() > degree_bound)
    fail(errc::degree_bound_exceeded,
         "degree " + std::to_string(f.degree()) + " > bound " + std::to_string(degree_bound));
  Factorization out;
  out.content = f.content();
  if (f.leading() < 0) out.content = -out.content;
  IntPoly g = f.primitive_part();
  if (g.degree() < 1) return out;

  IntPoly repeated = poly_gcd_primitive(g, g.derivative());
  IntPoly squarefree = poly_divexact(g, repeated).primitive_part();
  std::vector<IntPoly> irr;
  factor_squarefree(squarefree, irr);

  for (const IntPoly& p : irr) {
    int e = 0;
    IntPoly quot;
    while (try_divexact(g, p, &quot)) {
      g = quot;
      ++e;
    }
    out.factors.emplace_back(p, e);
  }
  if (g.degree() != 0 || g.coeff(0) != 1)
    fail(errc::internal, "factorization left a non-unit cofactor " + g.str());
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
    return x.first.coeffs() < y.first.coeffs();
  });
  return out;
}

} // namespace afinv
