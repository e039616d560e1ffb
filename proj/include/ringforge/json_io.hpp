/**
 * @file json_io.hpp
 * @brief JSON and CSV serialization of specs, reports and witnesses.
 *
 * RingSpec JSON:
 *   {"p": 3, "r": 1, "modulus": [..]?, "s": 2, "t": 1, "lambda": 0,
 *    "matrices": [[[1,0],[0,0]]], "sigma": [0,0]?, "theta": [0]?}
 * Omitted automorphism lists default to the identity.
 */
#pragma once

#include <string>

#include <json.hpp>

#include "ringforge/classify.hpp"
#include "ringforge/construction_a.hpp"
#include "ringforge/counting.hpp"
#include "ringforge/iso.hpp"

namespace ringforge {

using nlohmann::json;

/// Throws ParseError on malformed documents.
RingSpec ring_spec_from_json(const json& doc);
json to_json(const RingSpec& spec);

json to_json(const Mat& m);
json to_json(const ClassReport& report);
/// One row per class: index, key, rep, orbit_size, contains_compatible, commutative_capable.
std::string to_csv(const ClassReport& report);

json to_json(const IsoWitness& w);
json to_json(const StructureReport& r);
json to_json(const AxiomReport& r);
json to_json(const Prediction& p);

/// Big integers are written as JSON numbers when they fit 64 bits, else strings.
json big_to_json(const BigInt& v);

/// Multiplication table over encoded elements. Throws RangeError if |R| > 4096.
json multiplication_table_json(const Ring& ring);
std::string multiplication_table_csv(const Ring& ring);

}  // namespace ringforge
