#pragma once

#include <string>

#include "hexa/doubly_perfect.hpp"
#include "hexa/two_unitary.hpp"
#include "json.hpp"

namespace hexa {

using Json = nlohmann::ordered_json;

// CycScalar <-> {"conductor": N, "terms": [[exponent, num, den], ...]}.
Json cyc_to_json(const Cyc& v);
Cyc cyc_from_json(const Json& j);

// ExactMatrix <-> {"dim","denom_pow","d","entries":[[CycScalar,...],...]}.
// denom must be d^denom_pow.
Json matrix_to_json(const ExactMatrix& M);
ExactMatrix matrix_from_json(const Json& j);
// Float export: {"dim","entries":[[[re,im],...],...]}.
Json matrix_to_float_json(const ExactMatrix& M);

// PhaseFunction <-> {"d","n","kind":"exponent","base":N,"exponents":[...]}
// or {"d","n","kind":"cyc","values":[CycScalar,...]}.
Json phase_function_to_json(const PhaseFunction& lam);
PhaseFunction phase_function_from_json(const Json& j);
// CSV of the exponent table (root-of-unity-valued functions only).
std::string phase_function_to_csv(const PhaseFunction& lam);

Json latin_to_json(const LatinSquare& K, const LatinSquare& L);

Json scan_report_to_json(const ScanReport& rep);
Json orbit_to_json(const std::vector<OrbitEntry>& entries);

}  // namespace hexa
