#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace afinv {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(a, b) does not canonicalize on its own.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int abs_int(const Int& a) { return a >= 0 ? a : Int(-a); }

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Distinct prime factors of |n|, ascending. Prim(0) is rejected, Prim(1) = {}.
std::vector<Int> prime_factors(const Int& n);

// Largest e with p^e | n (n != 0).
int valuation(const Int& n, const Int& p);

// True if every prime factor of |n| lies in `primes` (n != 0).
bool is_smooth(const Int& n, const std::vector<Int>& primes);

// Inverse of a mod m (gcd(a, m) = 1), in [0, m).
Int inv_mod(const Int& a, const Int& m);

// gcd of a list; 0 for the empty list.
Int gcd_vec(const std::vector<Int>& v);

} // namespace afinv
