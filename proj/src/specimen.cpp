#include "afinv/specimen.hpp"

#include <algorithm>
#include <sstream>

#include "afinv/error.hpp"

namespace afinv {

namespace {
Int support_gcd(const ZVec& m) {
  Int g = 0;
  for (size_t j = 0; j < m.size(); ++j)
    if (m[j] != 0) g = gcd_int(g, Int(long(j + 1)));
  return g;
}

void check_shape(const ZVec& m) {
  if (m.empty()) fail(errc::invalid_argument, "empty multiplicity vector");
  if (int(m.size()) > Specimen::kMaxRank)
    fail(errc::invalid_argument, "rank above cap " + std::to_string(Specimen::kMaxRank));
  for (const Int& x : m)
    if (x < 0) fail(errc::invalid_argument, "negative multiplicity");
  if (m.back() < 1) fail(errc::invalid_argument, "m_N must be >= 1");
}
} // namespace

Specimen Specimen::from_m(ZVec m) {
  check_shape(m);
  Int g = support_gcd(m);
  if (g != 1) fail(errc::gcd_not_one, "gcd of weight support is " + g.get_str());
  return Specimen(std::move(m), true);
}

Specimen Specimen::unchecked_from_m(ZVec m) {
  check_shape(m);
  return Specimen(std::move(m), support_gcd(m) == 1);
}

Specimen Specimen::from_L(const std::vector<Int>& L) {
  if (L.empty()) fail(errc::invalid_argument, "empty weight list");
  Int mx = 0;
  for (const Int& x : L) {
    if (x < 1) fail(errc::invalid_argument, "weights must be positive");
    mx = std::max(mx, x);
  }
  if (mx > kMaxRank) fail(errc::invalid_argument, "weight above the rank cap");
  ZVec m(size_t(mx.get_ui()), Int(0));
  for (const Int& x : L) m[size_t(x.get_ui()) - 1] += 1;
  return from_m(std::move(m));
}

Specimen Specimen::normalized_from_L(const std::vector<Int>& L, Int* scale) {
  if (L.empty()) fail(errc::invalid_argument, "empty weight list");
  Int g = gcd_vec(L);
  std::vector<Int> scaled;
  scaled.reserve(L.size());
  for (const Int& x : L) scaled.push_back(x / g);
  if (scale) *scale = g;
  return from_L(scaled);
}

Specimen Specimen::parse(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0)
    fail(errc::parse_error, "expected m=... or L=... in '" + text + "'");
  std::string key = text.substr(0, eq);
  key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
  if (key != "m" && key != "L") fail(errc::parse_error, "unknown specimen key '" + key + "'");
  std::vector<Int> vals;
  std::string body = text.substr(eq + 1);
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) fail(errc::parse_error, "empty entry in '" + text + "'");
    try {
      vals.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      fail(errc::parse_error, "bad integer '" + tok + "'");
    }
  }
  if (vals.empty()) fail(errc::parse_error, "no entries in '" + text + "'");
  return key == "m" ? from_m(std::move(vals)) : from_L(vals);
}

Int Specimen::d() const {
  Int s = 0;
  for (const Int& x : m_) s += x;
  return s;
}

std::vector<Int> Specimen::L() const {
  std::vector<Int> out;
  for (size_t j = 0; j < m_.size(); ++j)
    for (Int i = 0; i < m_[j]; ++i) out.push_back(Int(long(j + 1)));
  return out;
}

ZMat Specimen::to_matrix() const {
  int n = N();
  ZMat J(n, n);
  for (int i = 0; i < n; ++i) J.at(i, 0) = m_[size_t(i)];
  for (int i = 0; i + 1 < n; ++i) J.at(i, i + 1) = 1;
  return J;
}

QMat Specimen::inverse_matrix() const {
  int n = N();
  QMat Ji(n, n);
  Ji.at(0, n - 1) = make_rat(1, m_N());
  for (int i = 1; i < n; ++i) {
    Ji.at(i, i - 1) = 1;
    Ji.at(i, n - 1) = make_rat(-m_[size_t(i - 1)], m_N());
  }
  return Ji;
}

IntPoly Specimen::char_poly() const {
  int n = N();
  std::vector<Int> c(size_t(n) + 1, Int(0));
  c[size_t(n)] = 1;
  for (int j = 1; j <= n; ++j) c[size_t(n - j)] = -m_[size_t(j - 1)];
  return IntPoly(std::move(c));
}

IntPoly Specimen::p_L() const {
  int n = N();
  std::vector<Int> c(size_t(n) + 1, Int(0));
  c[0] = -1;
  for (int j = 1; j <= n; ++j) c[size_t(j)] = m_[size_t(j - 1)];
  return IntPoly(std::move(c));
}

Specimen Specimen::inflate(int s) const {
  if (s < 1) fail(errc::invalid_argument, "inflation factor must be positive");
  ZVec m(size_t(N()) * size_t(s), Int(0));
  for (int j = 1; j <= N(); ++j) m[size_t(j) * size_t(s) - 1] = m_[size_t(j - 1)];
  return unchecked_from_m(std::move(m));
}

std::string Specimen::str() const {
  std::string out = "m=";
  for (size_t i = 0; i < m_.size(); ++i) {
    if (i) out += ",";
    out += m_[i].get_str();
  }
  return out;
}

} // namespace afinv
