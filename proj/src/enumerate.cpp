#include "afinv/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "afinv/error.hpp"

namespace afinv {

std::vector<EnumeratedSpecimen> enumerate_family(const FamilySpec& f) {
  if (f.lambda < 2) fail(errc::invalid_argument, "lambda must be >= 2");
  if (f.N < 1) fail(errc::invalid_argument, "N must be >= 1");
  std::vector<EnumeratedSpecimen> out;
  const int n = f.N;
  const Int lam = f.lambda;

  const IntPoly linear(std::vector<Int>{-1, lam}); // lambda x - 1

  auto emit = [&](const ZVec& Q) {
    // m_j = lambda Q_{N-j+1} - Q_{N-j}, with Q_N = 1, Q_0 = 0
    auto Qat = [&](int idx) -> Int {
      if (idx == 0) return 0;
      if (idx == n) return 1;
      return Q[size_t(idx - 1)];
    };
    ZVec m(size_t(n), Int(0));
    for (int j = 1; j <= n; ++j) m[size_t(j - 1)] = lam * Qat(n - j + 1) - Qat(n - j);
    for (const Int& x : m)
      if (x < 0) fail(errc::internal, "enumerated multiplicity went negative");
    if (m.back() < 1) fail(errc::internal, "enumerated m_N vanished");
    Specimen s = Specimen::unchecked_from_m(m);
    // (lambda x - 1) | p_L, by exact division
    IntPoly q = poly_divexact(s.p_L(), linear);
    (void)q;
    if (!f.include_gcd_violators && !s.gcd_valid()) return;
    out.push_back({std::move(s), Q});
    if (long(out.size()) > f.budget) fail(errc::budget_exceeded, std::to_string(f.budget));
  };

  if (n == 1) {
    emit({});
    return out;
  }
  // chain 0 < Q_1 <= lambda Q_2, ..., Q_{N-1} <= lambda; ascending
  // (Q_{N-1}, ..., Q_1) order
  ZVec Q(size_t(n - 1), Int(1));
  auto bound = [&](int pos) -> Int { // pos in [1, N-1]; Q_pos <= lambda * Q_{pos+1}
    return pos == n - 1 ? lam : lam * Q[size_t(pos)];
  };
  // depth-first, outermost Q_{N-1}
  std::vector<int> order;
  for (int pos = n - 1; pos >= 1; --pos) order.push_back(pos);
  // recursive lambda
  auto rec = [&](auto&& self, size_t level) -> void {
    if (level == order.size()) {
      emit(Q);
      return;
    }
    int pos = order[level];
    for (Int val = 1; val <= bound(pos); ++val) {
      Q[size_t(pos - 1)] = val;
      self(self, level + 1);
    }
  };
  rec(rec, 0);
  return out;
}

FamilyClassification classify_family(const FamilySpec& f, const std::vector<Int>& primes,
                                     int jobs) {
  FamilyClassification fc;
  fc.specimens = enumerate_family(f);
  for (size_t i = 0; i < fc.specimens.size(); ++i)
    if (fc.specimens[i].s.gcd_valid()) fc.valid.push_back(int(i));

  const int nv = int(fc.valid.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) pairs.emplace_back(i, j);
  fc.pair_verdicts.assign(pairs.size(), Verdict());

  jobs = std::max(1, jobs);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t k = next.fetch_add(1);
      if (k >= pairs.size()) return;
      const Specimen& a = fc.specimens[size_t(fc.valid[size_t(pairs[k].first)])].s;
      const Specimen& b = fc.specimens[size_t(fc.valid[size_t(pairs[k].second)])].s;
      fc.pair_verdicts[k] = compare(a, b, primes);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // transitive closure of the isomorphism verdicts (union-find)
  std::vector<int> parent(static_cast<size_t>(nv));
  for (int i = 0; i < nv; ++i) parent[size_t(i)] = i;
  auto find = [&](int x) {
    while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
    return x;
  };
  for (size_t k = 0; k < pairs.size(); ++k)
    if (fc.pair_verdicts[k].kind == Verdict::Kind::isomorphic) {
      int a = find(pairs[k].first), b = find(pairs[k].second);
      if (a != b) parent[size_t(std::max(a, b))] = std::min(a, b);
    }
  // closure must not contradict a non-isomorphism verdict
  for (size_t k = 0; k < pairs.size(); ++k)
    if (fc.pair_verdicts[k].kind == Verdict::Kind::non_isomorphic &&
        find(pairs[k].first) == find(pairs[k].second))
      fail(errc::internal, "isomorphism closure contradicts a separation");

  std::vector<std::vector<int>> classes(static_cast<size_t>(nv));
  for (int i = 0; i < nv; ++i) classes[size_t(find(i))].push_back(fc.valid[size_t(i)]);
  for (auto& c : classes)
    if (!c.empty()) fc.classes.push_back(std::move(c));

  for (size_t k = 0; k < pairs.size(); ++k)
    if (fc.pair_verdicts[k].kind == Verdict::Kind::inconclusive &&
        find(pairs[k].first) != find(pairs[k].second))
      fc.inconclusive.emplace_back(fc.valid[size_t(pairs[k].first)],
                                   fc.valid[size_t(pairs[k].second)]);
  return fc;
}

std::vector<Specimen> lambda_eq_mN_family(const Int& lambda, int N) {
  if (lambda < 2) fail(errc::invalid_argument, "lambda must be >= 2");
  if (N < 1) fail(errc::invalid_argument, "N must be >= 1");
  std::vector<Specimen> out;
  if (N == 1) {
    out.push_back(Specimen::unchecked_from_m({lambda}));
    return out;
  }
  // v = (1, v_2, ..., v_{N-1}, 1), each v_i in [1, lambda];
  // m_i = lambda v_i - v_{i+1}.
  ZVec v(size_t(N), Int(1));
  auto emit = [&]() {
    ZVec m(size_t(N), Int(0));
    for (int i = 1; i <= N - 1; ++i) m[size_t(i - 1)] = lambda * v[size_t(i - 1)] - v[size_t(i)];
    m[size_t(N - 1)] = lambda;
    Specimen s = Specimen::unchecked_from_m(m);
    PerronData pd = perron(s);
    if (!pd.in_lambda_eq_mN_class(s) || pd.v_int != v)
      fail(errc::internal, "family member misses its prescribed eigenvector");
    out.push_back(std::move(s));
  };
  if (N == 2) {
    emit();
    return out;
  }
  std::vector<int> pos;
  for (int i = 2; i <= N - 1; ++i) pos.push_back(i);
  auto rec = [&](auto&& self, size_t level) -> void {
    if (level == pos.size()) {
      emit();
      return;
    }
    for (Int val = 1; val <= lambda; ++val) {
      v[size_t(pos[level] - 1)] = val;
      self(self, level + 1);
    }
  };
  rec(rec, 0);
  return out;
}

} // namespace afinv
