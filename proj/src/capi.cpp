#include "afinv.h"

#include <cstring>
#include <string>

#include "afinv/error.hpp"
#include "afinv/jsonio.hpp"

using namespace afinv;

struct afinv_specimen {
  Specimen s;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

afinv_status status_of(const Error& e) {
  switch (e.code()) {
    case errc::parse_error:
    case errc::gcd_not_one:
      return AFINV_ERR_PARSE;
    case errc::budget_exceeded:
    case errc::iteration_cap_exceeded:
      return AFINV_ERR_BUDGET;
    case errc::internal:
      return AFINV_ERR_INTERNAL;
    default:
      return AFINV_ERR_ARGUMENT;
  }
}

template <typename Fn>
afinv_status guarded(Fn&& fn) {
  try {
    fn();
    return AFINV_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AFINV_ERR_INTERNAL;
  }
}

struct Options {
  std::vector<Int> primes = default_torsion_primes();
  int depth = 8;
  bool depth_set = false;
  int cap = 64;
  bool check = false;
  unsigned long seed = 0;
  int jobs = 1;
  long budget = 100000;
  bool classify = false;
};

Options parse_options(const char* opts_json) {
  Options o;
  if (!opts_json || !*opts_json) return o;
  json j;
  try {
    j = json::parse(opts_json);
  } catch (const std::exception& e) {
    fail(errc::parse_error, std::string("options: ") + e.what());
  }
  if (j.contains("primes")) {
    o.primes.clear();
    for (const auto& p : j.at("primes")) {
      Int v = p.is_string() ? Int(p.get<std::string>()) : Int(p.get<long>());
      if (v < 2 || mpz_probab_prime_p(v.get_mpz_t(), 32) == 0)
        fail(errc::invalid_argument, "torsion modulus " + v.get_str() + " is not prime");
      o.primes.push_back(v);
    }
  }
  if (j.contains("depth")) {
    o.depth = j.at("depth").get<int>();
    o.depth_set = true;
    if (o.depth < 0) fail(errc::invalid_argument, "negative depth");
  }
  if (j.contains("cap")) {
    o.cap = j.at("cap").get<int>();
    if (o.cap < 1) fail(errc::invalid_argument, "cap must be positive");
  }
  if (j.contains("check")) o.check = j.at("check").get<bool>();
  if (j.contains("seed")) o.seed = j.at("seed").get<unsigned long>();
  if (j.contains("jobs")) {
    o.jobs = j.at("jobs").get<int>();
    if (o.jobs < 1) fail(errc::invalid_argument, "jobs must be positive");
  }
  if (j.contains("budget")) {
    o.budget = j.at("budget").get<long>();
    if (o.budget < 1) fail(errc::invalid_argument, "budget must be positive");
  }
  if (j.contains("classify")) o.classify = j.at("classify").get<bool>();
  return o;
}

} // namespace

extern "C" {

const char* afinv_version(void) { return "afinv 1.0.0"; }

const char* afinv_last_error(void) { return g_last_error.c_str(); }

void afinv_string_free(char* s) { std::free(s); }

afinv_specimen* afinv_specimen_parse(const char* text) {
  if (!text) {
    g_last_error = "ParseError: null input";
    return nullptr;
  }
  try {
    return new afinv_specimen{Specimen::parse(text)};
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  }
}

afinv_specimen* afinv_specimen_from_m(const int64_t* m, size_t n) {
  try {
    ZVec v;
    for (size_t i = 0; i < n; ++i) v.emplace_back(long(m[i]));
    return new afinv_specimen{Specimen::from_m(std::move(v))};
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return nullptr;
  }
}

void afinv_specimen_free(afinv_specimen* s) { delete s; }

afinv_status afinv_invariants(const afinv_specimen* s, const char* opts_json, char** out_json) {
  if (!s || !out_json) {
    g_last_error = "InvalidArgument: null pointer";
    return AFINV_ERR_ARGUMENT;
  }
  return guarded([&] {
    Options o = parse_options(opts_json);
    InvariantBundle b = bundle(s->s, o.primes);
    json j = to_json(b);
    if (o.check) {
      run_self_checks(s->s, o.seed);
      j["checks"] = "ok";
    }
    *out_json = dup_string(j.dump(2) + "\n");
  });
}

afinv_status afinv_compare(const afinv_specimen* s1, const afinv_specimen* s2,
                           const char* opts_json, char** out_json, int* verdict_kind) {
  if (!s1 || !s2 || !out_json) {
    g_last_error = "InvalidArgument: null pointer";
    return AFINV_ERR_ARGUMENT;
  }
  return guarded([&] {
    Options o = parse_options(opts_json);
    Verdict v = compare(s1->s, s2->s, o.primes, o.depth);
    if (verdict_kind)
      *verdict_kind = v.kind == Verdict::Kind::isomorphic ? AFINV_VERDICT_ISOMORPHIC
                      : v.kind == Verdict::Kind::non_isomorphic ? AFINV_VERDICT_NON_ISOMORPHIC
                                                                : AFINV_VERDICT_INCONCLUSIVE;
    *out_json = dup_string(to_json(v).dump(2) + "\n");
  });
}

afinv_status afinv_enumerate(int64_t lambda, int n, const char* opts_json, char** out_json) {
  if (!out_json) {
    g_last_error = "InvalidArgument: null pointer";
    return AFINV_ERR_ARGUMENT;
  }
  return guarded([&] {
    Options o = parse_options(opts_json);
    FamilySpec f;
    f.lambda = Int(long(lambda));
    f.N = n;
    f.budget = o.budget;
    json j;
    j["lambda"] = int_str(f.lambda);
    j["N"] = n;
    if (o.classify) {
      j["family"] = to_json(classify_family(f, o.primes, o.jobs));
    } else {
      FamilyClassification fc;
      fc.specimens = enumerate_family(f);
      for (size_t i = 0; i < fc.specimens.size(); ++i)
        if (fc.specimens[i].s.gcd_valid()) fc.valid.push_back(int(i));
      json specs = json::array();
      for (size_t i = 0; i < fc.specimens.size(); ++i) {
        json e;
        e["index"] = i;
        json marr = json::array();
        for (const Int& x : fc.specimens[i].s.m()) marr.push_back(x.get_si());
        e["m"] = marr;
        e["valid"] = fc.specimens[i].s.gcd_valid();
        specs.push_back(std::move(e));
      }
      j["count"] = fc.specimens.size();
      j["valid_count"] = fc.valid.size();
      j["specimens"] = specs;
    }
    *out_json = dup_string(j.dump(2) + "\n");
  });
}

afinv_status afinv_diagram(const afinv_specimen* s, const char* opts_json, int as_dot,
                           char** out) {
  if (!s || !out) {
    g_last_error = "InvalidArgument: null pointer";
    return AFINV_ERR_ARGUMENT;
  }
  return guarded([&] {
    Options o = parse_options(opts_json);
    int depth = o.depth;
    if (!o.depth_set) {
      NumericalSemigroup sg = semigroup(s->s.L());
      depth = int(sg.conductor.get_si()) + s->s.N() + 3;
    }
    Diagram d = build_diagram(s->s, depth);
    if (as_dot) {
      *out = dup_string(diagram_to_dot(d));
    } else {
      json j = to_json(d);
      j["semigroup"] = to_json(semigroup(s->s.L()));
      *out = dup_string(j.dump(2) + "\n");
    }
  });
}

afinv_status afinv_witness_check(const afinv_specimen* s1, const afinv_specimen* s2,
                                 const char* witness_json, const char* opts_json, char** out_json,
                                 int* verified) {
  if (!s1 || !s2 || !witness_json || !out_json) {
    g_last_error = "InvalidArgument: null pointer";
    return AFINV_ERR_ARGUMENT;
  }
  return guarded([&] {
    Options o = parse_options(opts_json);
    json wj;
    try {
      wj = json::parse(witness_json);
    } catch (const std::exception& e) {
      fail(errc::parse_error, std::string("witness: ") + e.what());
    }
    Witness w = witness_from_json(wj);
    WitnessCheck chk = check_witness(s1->s, s2->s, w, o.depth);
    if (verified) *verified = chk.verified ? 1 : 0;
    json j;
    j["verified"] = chk.verified;
    j["depth"] = chk.depth;
    j["refuted_condition"] = chk.verified ? json(nullptr) : json(chk.refuted_condition);
    *out_json = dup_string(j.dump(2) + "\n");
  });
}

afinv_status afinv_reproduce(const char* table_id, char** out) {
  if (!table_id || !out) {
    g_last_error = "InvalidArgument: null pointer";
    return AFINV_ERR_ARGUMENT;
  }
  return guarded([&] { *out = dup_string(generate_table(table_id)); });
}

afinv_status afinv_table_ids(char** out) {
  if (!out) {
    g_last_error = "InvalidArgument: null pointer";
    return AFINV_ERR_ARGUMENT;
  }
  return guarded([&] {
    std::string s;
    for (const std::string& id : known_tables()) {
      if (!s.empty()) s += ",";
      s += id;
    }
    *out = dup_string(s);
  });
}

} // extern "C"
