#pragma once

#include <string>

#include "json.hpp"

#include "afinv/bratteli.hpp"
#include "afinv/classify.hpp"
#include "afinv/enumerate.hpp"

namespace afinv {

using json = nlohmann::json; // std::map-backed: keys serialize sorted

// Exact values cross JSON as decimal/fraction strings so nothing is clipped
// to 64 bits.
std::string int_str(const Int& v);
std::string rat_str(const Rat& v);

json to_json(const AlgebraicReal& a);
json to_json(const FieldElem& e);
json to_json(const InvariantBundle& b);
json to_json(const Verdict& v);
json to_json(const Witness& w);
json to_json(const Diagram& d);
json to_json(const NumericalSemigroup& sg);
json to_json(const FamilyClassification& fc);

Witness witness_from_json(const json& j);
Diagram diagram_from_json(const json& j);

// Per-specimen consistency checks behind `invariants --check` (eigenvalue
// identities, digit round trips, quotient congruences); throws on failure.
void run_self_checks(const Specimen& s, unsigned long seed);

// Generators behind the `reproduce` subcommand. Known ids: appexa-n2,
// appexa-n3, appexa-n4, clmn-48-54, invariant-table, brunt-shift-equiv,
// exa1-exa2. Throws UnknownTable otherwise.
std::string generate_table(const std::string& id);
std::vector<std::string> known_tables();

} // namespace afinv
