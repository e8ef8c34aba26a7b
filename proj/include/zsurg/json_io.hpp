#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "zsurg/census.hpp"
#include "zsurg/diagram.hpp"
#include "zsurg/invariants.hpp"
#include "zsurg/lowindex.hpp"
#include "zsurg/obstructions.hpp"

namespace zsurg {

using Json = nlohmann::ordered_json;

/// Machine-sized integers become JSON numbers, anything larger a decimal string.
Json to_json(const BigInt& v);
Json to_json(const LaurentPolynomial& p);
Json to_json(const KnotDiagram& d);
Json to_json(const ClassicalInvariants& inv);
Json to_json(const AbelianGroup& g);
Json to_json(const Fingerprint& f);
Json to_json(const CensusReport& r);
Json to_json(const ParityWitness& w);
Json to_json(const EvidenceRecord& e);
Json to_json(const TraceVerdict& v, const EvidenceRecord& e);

/// Throws EvidenceError on schema violations.
EvidenceRecord evidence_from_json(const Json& j);
/// Accepts one record or an array of records.
std::vector<EvidenceRecord> evidence_list_from_json(const Json& j);
std::vector<EvidenceRecord> load_evidence(const std::string& path);

/// Two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace zsurg
