#include "afinv/numutil.hpp"

#include "afinv/error.hpp"

namespace afinv {

std::vector<Int> prime_factors(const Int& n) {
  if (n == 0) fail(errc::invalid_argument, "Prim(0) undefined");
  Int m = abs_int(n);
  std::vector<Int> out;
  Int p = 2;
  while (p * p <= m) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
    p += (p == 2) ? 1 : 2;
  }
  if (m > 1) out.push_back(m);
  return out;
}

int valuation(const Int& n, const Int& p) {
  if (n == 0) fail(errc::invalid_argument, "valuation of 0");
  Int m = abs_int(n);
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

bool is_smooth(const Int& n, const std::vector<Int>& primes) {
  Int m = abs_int(n);
  if (m == 0) return false;
  for (const Int& p : primes)
    while (m % p == 0) m /= p;
  return m == 1;
}

Int inv_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(errc::invalid_argument, "not invertible mod " + m.get_str());
  return r;
}

Int gcd_vec(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd_int(g, x);
  return g;
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::non_integral_division: return "NonIntegralDivision";
    case errc::degree_bound_exceeded: return "DegreeBoundExceeded";
    case errc::no_root_in_unit_interval: return "NoRootInUnitInterval";
    case errc::gcd_not_one: return "GcdNotOne";
    case errc::not_in_class: return "NotInClass";
    case errc::lambda_irrational: return "LambdaIrrational";
    case errc::wrong_rank: return "WrongRank";
    case errc::iteration_cap_exceeded: return "IterationCapExceeded";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::non_integral_scaled_inverse: return "NonIntegralScaledInverse";
    case errc::invalid_cuts: return "InvalidCuts";
    case errc::depth_too_shallow: return "DepthTooShallow";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::unknown_table: return "UnknownTable";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::internal: return "InternalError";
  }
  return "Error";
}

} // namespace afinv
