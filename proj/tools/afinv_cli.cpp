// Command-line front end. Links only the C interface of the shared library.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "afinv.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 2;
constexpr int kExitNonIsomorphic = 3;
constexpr int kExitInconclusive = 4;

struct StringGuard {
  char* p = nullptr;
  ~StringGuard() { afinv_string_free(p); }
};

struct SpecimenGuard {
  afinv_specimen* p = nullptr;
  ~SpecimenGuard() { afinv_specimen_free(p); }
};

int fail_with(const std::string& context) {
  std::cerr << "error: " << context << afinv_last_error() << "\n";
  return kExitError;
}

afinv_specimen* parse_or_null(const std::string& text) {
  afinv_specimen* s = afinv_specimen_parse(text.c_str());
  if (!s) std::cerr << "error: " << afinv_last_error() << "\n";
  return s;
}

std::string build_options(const std::vector<int64_t>& primes, int depth, bool depth_set, int cap,
                          bool check, uint64_t seed, int jobs, int64_t budget, bool classify) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  auto field = [&](const std::string& key, const std::string& value) {
    if (!first) os << ",";
    os << "\"" << key << "\":" << value;
    first = false;
  };
  if (!primes.empty()) {
    std::string arr = "[";
    for (size_t i = 0; i < primes.size(); ++i) {
      if (i) arr += ",";
      arr += std::to_string(primes[i]);
    }
    arr += "]";
    field("primes", arr);
  }
  if (depth_set) field("depth", std::to_string(depth));
  field("cap", std::to_string(cap));
  if (check) field("check", "true");
  field("seed", std::to_string(seed));
  field("jobs", std::to_string(jobs));
  field("budget", std::to_string(budget));
  if (classify) field("classify", "true");
  os << "}";
  return os.str();
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return {};
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical C*-isomorphism invariants of stationary AF-algebras"};
  app.set_version_flag("--version", afinv_version());
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand

  std::string format = "json";
  std::vector<int64_t> primes;
  int depth = 8;
  int cap = 64;
  uint64_t seed = 0;
  int jobs = 1;
  int64_t budget = 100000;
  app.add_option("--format", format, "Output format: json | text | dot")->capture_default_str();
  app.add_option("--primes", primes, "Torsion primes (default 2 3 5 7)");
  app.add_option("--depth", depth, "Witness/diagram depth");
  app.add_option("--cap", cap, "Membership iteration cap")->capture_default_str();
  app.add_option("--seed", seed, "Seed for sampled self-checks")->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads for classification")->capture_default_str();
  app.add_option("--cap-budget,--budget", budget, "Enumeration budget")->capture_default_str();

  // invariants
  auto* inv = app.add_subcommand("invariants", "Invariant bundle of one or more specimens");
  std::vector<std::string> inv_specs;
  std::string inv_file;
  bool inv_check = false;
  inv->add_option("specimen", inv_specs, "Specimens as m=... or L=...");
  inv->add_option("--file", inv_file, "File with one specimen per line");
  inv->add_flag("--check", inv_check, "Run per-specimen consistency checks");

  // compare
  auto* cmp = app.add_subcommand("compare", "Decide or refute isomorphism of two specimens");
  std::vector<std::string> cmp_specs;
  std::string cmp_file;
  cmp->add_option("specimens", cmp_specs, "Two specimens");
  cmp->add_option("--file", cmp_file, "File with two specimens on separate lines");

  // enumerate
  auto* enu = app.add_subcommand("enumerate", "Enumerate a (lambda, N) family");
  int64_t enu_lambda = 2;
  int enu_N = 2;
  bool enu_classify = false;
  enu->add_option("--lambda", enu_lambda, "Integer eigenvalue")->required();
  enu->add_option("--N", enu_N, "Rank")->required();
  enu->add_flag("--classify", enu_classify, "Classify the family into isomorphism classes");

  // diagram
  auto* dia = app.add_subcommand("diagram", "Bratteli diagram of a specimen");
  std::string dia_spec;
  bool dia_dot = false;
  dia->add_option("specimen", dia_spec, "Specimen as m=... or L=...")->required();
  dia->add_flag("--dot", dia_dot, "Emit DOT instead of JSON");

  // witness-check
  auto* wit = app.add_subcommand("witness-check", "Verify a supplied isomorphism witness");
  std::vector<std::string> wit_specs;
  std::string wit_file;
  wit->add_option("specimens", wit_specs, "Two specimens")->expected(2);
  wit->add_option("--witness", wit_file, "JSON file with the witness")->required();

  // reproduce
  auto* rep = app.add_subcommand("reproduce", "Recompute a reference table and diff it");
  std::string rep_id;
  std::string rep_golden_dir = AFINV_GOLDEN_DIR;
  bool rep_print = false;
  rep->add_option("table", rep_id, "Table id")->required();
  rep->add_option("--golden-dir", rep_golden_dir, "Directory with the checked-in tables")
      ->capture_default_str();
  rep->add_flag("--print", rep_print, "Print the regenerated table instead of diffing");

  CLI11_PARSE(app, argc, argv);

  const bool depth_set = app.count("--depth") > 0;
  const std::string opts = build_options(primes, depth, depth_set, cap, inv_check, seed, jobs,
                                         budget, enu_classify);

  if (inv->parsed()) {
    std::vector<std::string> texts = inv_specs;
    if (!inv_file.empty()) {
      auto lines = read_lines(inv_file);
      texts.insert(texts.end(), lines.begin(), lines.end());
    }
    if (texts.empty()) {
      std::cerr << "error: no specimens given\n";
      return kExitError;
    }
    bool many = texts.size() > 1;
    if (many) std::cout << "[\n";
    for (size_t i = 0; i < texts.size(); ++i) {
      SpecimenGuard s{parse_or_null(texts[i])};
      if (!s.p) return kExitError;
      StringGuard out;
      if (afinv_invariants(s.p, opts.c_str(), &out.p) != AFINV_OK) return fail_with("");
      std::cout << out.p;
      if (many && i + 1 < texts.size()) std::cout << ",\n";
    }
    if (many) std::cout << "]\n";
    return kExitOk;
  }

  if (cmp->parsed()) {
    std::vector<std::string> texts = cmp_specs;
    if (!cmp_file.empty()) {
      auto lines = read_lines(cmp_file);
      texts.insert(texts.end(), lines.begin(), lines.end());
    }
    if (texts.size() != 2) {
      std::cerr << "error: compare needs exactly two specimens\n";
      return kExitError;
    }
    SpecimenGuard a{parse_or_null(texts[0])}, b{parse_or_null(texts[1])};
    if (!a.p || !b.p) return kExitError;
    StringGuard out;
    int kind = AFINV_VERDICT_INCONCLUSIVE;
    if (afinv_compare(a.p, b.p, opts.c_str(), &out.p, &kind) != AFINV_OK) return fail_with("");
    std::cout << out.p;
    if (kind == AFINV_VERDICT_ISOMORPHIC) return kExitOk;
    if (kind == AFINV_VERDICT_NON_ISOMORPHIC) return kExitNonIsomorphic;
    return kExitInconclusive;
  }

  if (enu->parsed()) {
    StringGuard out;
    if (afinv_enumerate(enu_lambda, enu_N, opts.c_str(), &out.p) != AFINV_OK)
      return fail_with("");
    std::cout << out.p;
    return kExitOk;
  }

  if (dia->parsed()) {
    SpecimenGuard s{parse_or_null(dia_spec)};
    if (!s.p) return kExitError;
    StringGuard out;
    int as_dot = dia_dot || format == "dot";
    if (afinv_diagram(s.p, opts.c_str(), as_dot, &out.p) != AFINV_OK) return fail_with("");
    std::cout << out.p;
    return kExitOk;
  }

  if (wit->parsed()) {
    SpecimenGuard a{parse_or_null(wit_specs[0])}, b{parse_or_null(wit_specs[1])};
    if (!a.p || !b.p) return kExitError;
    std::ifstream in(wit_file);
    if (!in) {
      std::cerr << "error: cannot open " << wit_file << "\n";
      return kExitError;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    StringGuard out;
    int verified = 0;
    if (afinv_witness_check(a.p, b.p, ss.str().c_str(), opts.c_str(), &out.p, &verified) !=
        AFINV_OK)
      return fail_with("");
    std::cout << out.p;
    return verified ? kExitOk : kExitNonIsomorphic;
  }

  if (rep->parsed()) {
    StringGuard out;
    if (afinv_reproduce(rep_id.c_str(), &out.p) != AFINV_OK) return fail_with("");
    if (rep_print) {
      std::cout << out.p;
      return kExitOk;
    }
    std::string path = rep_golden_dir + "/" + rep_id + ".json";
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot open golden file " << path << "\n";
      return kExitError;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    if (ss.str() != out.p) {
      std::cerr << "reproduce " << rep_id << ": MISMATCH against " << path << "\n";
      return 1;
    }
    std::cout << "reproduce " << rep_id << ": OK\n";
    return kExitOk;
  }

  return kExitError;
}
