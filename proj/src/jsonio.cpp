#include "afinv/jsonio.hpp"

#include <algorithm>
#include <random>

#include "afinv/error.hpp"

namespace afinv {

std::string int_str(const Int& v) { return v.get_str(); }
std::string rat_str(const Rat& v) { return v.get_str(); }

namespace {

json prim_json(const std::vector<Int>& ps) {
  json a = json::array();
  for (const Int& p : ps) a.push_back(int_str(p));
  return a;
}

json zvec_json(const ZVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_str(x));
  return a;
}

json zmat_json(const ZMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols; ++j) r.push_back(int_str(m.at(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

json qmat_json(const QMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols; ++j) r.push_back(rat_str(m.at(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

json mlist_json(const Specimen& s) {
  json a = json::array();
  for (const Int& x : s.m()) a.push_back(x.get_si());
  return a;
}

} // namespace

json to_json(const AlgebraicReal& a) {
  json j;
  if (a.is_rational()) {
    j["kind"] = "rational";
    j["value"] = rat_str(a.rational_value());
  } else {
    j["kind"] = "algebraic";
    j["minpoly"] = a.minpoly().str();
    a.refine_to(make_rat(1, 1 << 20));
    j["interval"] = json::array({rat_str(a.lo()), rat_str(a.hi())});
  }
  j["approx"] = a.approx();
  return j;
}

json to_json(const FieldElem& e) {
  json j;
  if (e.is_rational()) {
    j["kind"] = "rational";
    j["value"] = rat_str(e.is_zero() ? Rat(0) : e.rational_value());
  } else {
    j["kind"] = "algebraic";
    j["minpoly"] = e.root().minpoly().str();
    json c = json::array();
    for (const Rat& x : e.coeffs()) c.push_back(rat_str(x));
    j["coeffs"] = c;
    j["expr"] = e.str();
  }
  j["approx"] = e.approx();
  return j;
}

json to_json(const InvariantBundle& b) {
  json j;
  j["m"] = mlist_json(b.s);
  j["valid"] = b.s.gcd_valid();
  j["N"] = b.tf.N;
  j["D"] = b.tf.D;
  j["d"] = int_str(b.s.d());
  j["m_N"] = int_str(b.s.m_N());
  j["lambda"] = to_json(b.pd.lambda);
  j["tau_v"] = to_json(b.pd.tau_v);
  j["R_D"] = int_str(b.tf.R.back());
  j["Q_ND"] = b.tf.Q.empty() ? json(nullptr) : json(int_str(b.tf.Q.back()));
  j["prim_mN"] = prim_json(b.prim_mN);
  j["prim_RD"] = prim_json(b.prim_RD);
  j["prim_QND"] = prim_json(b.prim_QND);
  j["ker_tau_rank"] = b.ker_rank;
  j["I_J"] = b.pd.I_J ? json(int_str(*b.pd.I_J)) : json(nullptr);
  json tor;
  for (const auto& [p, dim] : b.torsion) tor[int_str(p)] = dim;
  j["torsion"] = tor;
  j["split"] = b.split == SplitFlag::splits ? "splits"
               : b.split == SplitFlag::non_split ? "non-split"
                                                 : "unknown";
  j["scaling_certificate"] = b.scaling_cert ? json(*b.scaling_cert) : json(nullptr);
  json series = json::array();
  for (const auto& st : b.series) {
    json e;
    e["rank"] = st.rank;
    e["abs_det"] = int_str(st.abs_det);
    e["poly"] = st.poly.str();
    e["removed"] = st.removed_factor.is_zero() ? json(nullptr) : json(st.removed_factor.str());
    series.push_back(std::move(e));
  }
  j["decomposition"] = series;
  return j;
}

json to_json(const Witness& w) {
  json j;
  if (w.type == Witness::Type::lambda_matrix) {
    j["type"] = "lambda-matrix";
    j["matrix"] = qmat_json(w.lambda_mat);
  } else {
    j["type"] = "block";
    j["A"] = zmat_json(w.A);
    json eta = json::array();
    for (const Rat& x : w.eta) eta.push_back(rat_str(x));
    j["eta"] = eta;
    if (w.c) j["c"] = int_str(*w.c);
  }
  return j;
}

Witness witness_from_json(const json& j) {
  Witness w;
  std::string type = j.at("type").get<std::string>();
  if (type == "lambda-matrix") {
    w.type = Witness::Type::lambda_matrix;
    const json& rows = j.at("matrix");
    int n = int(rows.size());
    w.lambda_mat = QMat(n, n == 0 ? 0 : int(rows[0].size()));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < w.lambda_mat.cols; ++k) {
        Rat v(rows[size_t(i)][size_t(k)].get<std::string>());
        v.canonicalize();
        w.lambda_mat.at(i, k) = v;
      }
  } else if (type == "block") {
    w.type = Witness::Type::block;
    const json& rows = j.at("A");
    int n = int(rows.size());
    w.A = ZMat(n, n == 0 ? 0 : int(rows[0].size()));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < w.A.cols; ++k)
        w.A.at(i, k) = Int(rows[size_t(i)][size_t(k)].get<std::string>());
    if (j.contains("eta") && !j.at("eta").is_null())
      for (const auto& x : j.at("eta")) {
        Rat v(x.get<std::string>());
        v.canonicalize();
        w.eta.push_back(v);
      }
    if (j.contains("c") && !j.at("c").is_null()) w.c = Int(j.at("c").get<std::string>());
  } else {
    fail(errc::parse_error, "unknown witness type '" + type + "'");
  }
  return w;
}

json to_json(const Verdict& v) {
  json j;
  j["kind"] = v.kind == Verdict::Kind::isomorphic ? "isomorphic"
              : v.kind == Verdict::Kind::non_isomorphic ? "non-isomorphic"
                                                        : "inconclusive";
  if (v.kind == Verdict::Kind::inconclusive) {
    j["reason"] = nullptr;
  } else {
    json r;
    r["test"] = v.reason_test;
    r["details"] = v.reason_details;
    j["reason"] = r;
  }
  json t = json::array();
  for (const auto& e : v.trace) {
    json te;
    te["test"] = e.test;
    te["outcome"] = e.outcome;
    te["details"] = e.details;
    t.push_back(std::move(te));
  }
  j["trace"] = t;
  j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  return j;
}

json to_json(const Diagram& d) {
  json j;
  j["m"] = mlist_json(d.s);
  json levels = json::array();
  for (size_t i = 0; i < d.level_numbers.size(); ++i) {
    json l;
    l["level"] = d.level_numbers[i];
    l["dims"] = zvec_json(d.dims[i]);
    levels.push_back(std::move(l));
  }
  j["levels"] = levels;
  json edges = json::array();
  for (size_t i = 0; i < d.incidence.size(); ++i) {
    const ZMat& inc = d.incidence[i];
    for (int k = 0; k < inc.cols; ++k)
      for (int m = 0; m < inc.rows; ++m)
        if (inc.at(m, k) != 0)
          edges.push_back(json::array(
              {d.level_numbers[i], k, m, int_str(inc.at(m, k))}));
  }
  j["edges"] = edges;
  j["stabilization"] = d.stabilization;
  return j;
}

Diagram diagram_from_json(const json& j) {
  Diagram d;
  ZVec m;
  for (const auto& x : j.at("m")) m.push_back(Int(x.get<long>()));
  d.s = Specimen::unchecked_from_m(std::move(m));
  const int N = d.s.N();
  for (const auto& l : j.at("levels")) {
    d.level_numbers.push_back(l.at("level").get<int>());
    ZVec dims;
    for (const auto& x : l.at("dims")) dims.push_back(Int(x.get<std::string>()));
    if (int(dims.size()) != N) fail(errc::parse_error, "dims length != N");
    d.dims.push_back(std::move(dims));
  }
  for (size_t i = 0; i + 1 < d.level_numbers.size(); ++i) d.incidence.emplace_back(N, N);
  for (const auto& e : j.at("edges")) {
    int level = e.at(0).get<int>();
    int from = e.at(1).get<int>();
    int to = e.at(2).get<int>();
    Int mult(e.at(3).get<std::string>());
    auto it = std::find(d.level_numbers.begin(), d.level_numbers.end(), level);
    if (it == d.level_numbers.end() || it + 1 == d.level_numbers.end())
      fail(errc::parse_error, "edge at an absent level");
    d.incidence[size_t(it - d.level_numbers.begin())].at(to, from) = mult;
  }
  d.stabilization = j.at("stabilization").get<int>();
  return d;
}

json to_json(const NumericalSemigroup& sg) {
  json j;
  j["generators"] = zvec_json(sg.generators);
  j["gaps"] = zvec_json(sg.gaps);
  j["conductor"] = int_str(sg.conductor);
  return j;
}

json to_json(const FamilyClassification& fc) {
  json j;
  j["count"] = fc.specimens.size();
  j["valid_count"] = fc.valid.size();
  json specs = json::array();
  for (size_t i = 0; i < fc.specimens.size(); ++i) {
    json e;
    e["index"] = i;
    e["m"] = mlist_json(fc.specimens[i].s);
    e["Q"] = zvec_json(fc.specimens[i].Q);
    e["valid"] = fc.specimens[i].s.gcd_valid();
    if (fc.specimens[i].s.gcd_valid())
      e["bundle"] = to_json(bundle(fc.specimens[i].s));
    specs.push_back(std::move(e));
  }
  j["specimens"] = specs;
  json classes = json::array();
  for (const auto& c : fc.classes) classes.push_back(c);
  j["classes"] = classes;
  json inc = json::array();
  for (const auto& [a, b] : fc.inconclusive) inc.push_back(json::array({a, b}));
  j["inconclusive"] = inc;
  return j;
}

void run_self_checks(const Specimen& s, unsigned long seed) {
  // eigenvalue identities and the factorization p0 p_a = p_L are enforced
  // at construction time by perron() and triangular_form()
  PerronData pd = perron(s);
  TriangularForm tf = triangular_form(s);
  (void)tf;

  // tau([1]) = 1
  QVec e1(size_t(s.N()), Rat(0));
  e1[0] = 1;
  FieldElem t = trace_functional(s, e1);
  if (!(t == FieldElem::from_rational(pd.a, Rat(1))))
    fail(errc::internal, "tau([1]) != 1");

  // digit round trips on random members (verified inside canonical_digits)
  std::mt19937_64 rng(seed);
  QMat Ji = inverse(QMat::from_z(s.to_matrix()));
  for (int trial = 0; trial < 25; ++trial) {
    int level = int(rng() % 4);
    QVec g(size_t(s.N()));
    for (int i = 0; i < s.N(); ++i) g[size_t(i)] = Rat(long(rng() % 19) - 9);
    for (int k = 0; k < level; ++k) g = mul(Ji, g);
    (void)canonical_digits(s, g);
  }

  // quotient congruences to depth 3N
  (void)quotient_relations(s, 3 * s.N());
}

// ---------------------------------------------------------------------------
// reference tables

namespace {

json bundle_row(const Specimen& s) {
  InvariantBundle b = bundle(s);
  json e;
  e["m"] = mlist_json(s);
  e["equation"] = (s.p_L() + IntPoly::from_int(1)).str() + "=1";
  e["valid"] = s.gcd_valid();
  e["d"] = int_str(s.d());
  e["N"] = b.tf.N;
  e["D"] = b.tf.D;
  e["m_N"] = int_str(s.m_N());
  e["R_D"] = int_str(b.tf.R.back());
  e["lambda"] = to_json(b.pd.lambda);
  e["tau_v"] = to_json(b.pd.tau_v);
  return e;
}

json table_appexa(int N) {
  FamilySpec f;
  f.lambda = 2;
  f.N = N;
  FamilyClassification fc = classify_family(f);
  json j;
  j["table"] = "appexa-n" + std::to_string(N);
  j["lambda"] = "2";
  j["N"] = N;
  j["family"] = to_json(fc);
  return j;
}

json table_clmn_48_54() {
  json j;
  j["table"] = "clmn-48-54";
  j["N"] = 3;
  j["lambda"] = "48";
  j["lambda_prime"] = "54";
  std::vector<Specimen> f48 = lambda_eq_mN_family(48, 3);
  std::vector<Specimen> f54 = lambda_eq_mN_family(54, 3);
  json cols = json::array();
  for (const Specimen& a : f48)
    for (const Specimen& b : f54) {
      Int Ia = I_invariant(a), Ib = I_invariant(b);
      if (Ia != Ib) continue;
      PerronData pa = perron(a), pb = perron(b);
      Verdict v = decide_lambda_eq_mN(a, b);
      if (v.kind != Verdict::Kind::isomorphic) fail(errc::internal, "collision not isomorphic");
      WitnessCheck chk = check_witness(a, b, *v.witness, 8);
      json e;
      e["v2"] = int_str(pa.v_int[1]);
      e["v2_prime"] = int_str(pb.v_int[1]);
      e["I"] = int_str(Ia);
      e["m"] = mlist_json(a);
      e["m_prime"] = mlist_json(b);
      e["witness"] = to_json(*v.witness);
      e["witness_verified"] = chk.verified;
      cols.push_back(std::move(e));
    }
  j["collisions"] = cols;
  return j;
}

json table_invariants() {
  json j;
  j["table"] = "invariant-table";
  const std::vector<ZVec> rows = {
      {2},
      {1, 1},
      {0, 0, 0, 2, 1, 0, 0, 1},
      {0, 1, 1},
      {0, 1, 1, 0, 1},
      {1, 0, 0, 0, 1},
      {1, 0, 4},
      {0, 3, 2},
      {1, 0, 3, 2},
      {0, 3, 1, 2},
      {1, 0, 2, 4},
      {0, 3, 0, 4},
  };
  json out = json::array();
  for (const ZVec& m : rows) out.push_back(bundle_row(Specimen::unchecked_from_m(m)));
  j["rows"] = out;
  return j;
}

json table_brunt() {
  json j;
  j["table"] = "brunt-shift-equiv";
  const Specimen sK = Specimen::from_m({6, 36, 432});
  const Specimen sJ = Specimen::from_m({108, 3888, 186624});
  const ZMat K = sK.to_matrix(), J = sJ.to_matrix();
  ZMat T(3, 3);
  long tvals[3][3] = {{1, 0, 0}, {-36, 6, 1}, {0, 432, -36}};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) T.at(i, k) = tvals[i][k];
  QMat S = inverse(QMat::from_z(T));
  const ZMat K2 = mul(K, K);
  const ZMat K4 = mul(K2, K2);
  QMat Aq = mul(QMat::from_z(K4), S);
  if (!is_integral(Aq)) fail(errc::internal, "K^4 S is not integral");
  ZMat A = to_z(Aq);
  ZMat B = mul(T, K4);
  ShiftEquivalenceReport rep = verify_shift_equivalence(A, B, J, K2, 4);
  j["K"] = zmat_json(K);
  j["J"] = zmat_json(J);
  j["T"] = zmat_json(T);
  j["A"] = zmat_json(A);
  j["B"] = zmat_json(B);
  j["identities_hold"] = rep.identities_hold;
  j["nonnegative"] = rep.nonnegative;
  j["failed"] = rep.failed;
  j["verified"] = rep.identities_hold && rep.nonnegative;
  return j;
}

json table_exa() {
  json j;
  j["table"] = "exa1-exa2";
  const Specimen s1 = Specimen::from_m({1, 0, 4});
  const Specimen s2 = Specimen::from_m({0, 3, 2});
  auto entry = [&](const Specimen& s) {
    InvariantBundle b = bundle(s);
    json e = to_json(b);
    TriangularForm tf = triangular_form(s);
    e["p_a"] = tf.p_a.str();
    e["p0"] = tf.p0.str();
    e["J0"] = zmat_json(tf.J0);
    e["Q"] = zvec_json(tf.Q);
    e["R"] = zvec_json(tf.R);
    return e;
  };
  j["exa1"] = entry(s1);
  j["exa2"] = entry(s2);
  j["verdict"] = to_json(compare(s1, s2));
  return j;
}

} // namespace

std::vector<std::string> known_tables() {
  return {"appexa-n2",  "appexa-n3",        "appexa-n4", "clmn-48-54",
          "invariant-table", "brunt-shift-equiv", "exa1-exa2"};
}

std::string generate_table(const std::string& id) {
  json j;
  if (id == "appexa-n2") j = table_appexa(2);
  else if (id == "appexa-n3") j = table_appexa(3);
  else if (id == "appexa-n4") j = table_appexa(4);
  else if (id == "clmn-48-54") j = table_clmn_48_54();
  else if (id == "invariant-table") j = table_invariants();
  else if (id == "brunt-shift-equiv") j = table_brunt();
  else if (id == "exa1-exa2") j = table_exa();
  else fail(errc::unknown_table, id);
  return j.dump(2) + "\n";
}

} // namespace afinv
