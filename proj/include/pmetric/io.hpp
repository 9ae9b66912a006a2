#pragma once

#include <string>

#include <json.hpp>

#include "pmetric/code.hpp"
#include "pmetric/decoder.hpp"
#include "pmetric/decomposition.hpp"
#include "pmetric/isometry.hpp"
#include "pmetric/partition.hpp"
#include "pmetric/poset.hpp"
#include "pmetric/search.hpp"

namespace pmetric::io {

using nlohmann::json;

/// Reads and parses a JSON file; ValidationError on I/O or syntax problems.
json read_json_file(const std::string& path);

/// {"n": 4, "covers": [[1,3],[1,4],[2,4]]}; covers are 1-based, a below b.
Poset poset_from_json(const json& j);
json to_json(const Poset& p);

/// {"q": 2, "n": 4, "generators": [[1,1,1,1]]}
LinearCode code_from_json(const json& j);
json to_json(const LinearCode& c);

/// {"n": 4, "j0": [1,3], "parts": [[2],[4]]}
PointedPartition partition_from_json(const json& j);
json to_json(const PointedPartition& p);

json to_json(const Profile& p);                  // [[n0,k0],[n1,k1],...]
json complexity_to_json(const Complexity& c);    // number, or decimal string when it does not fit 64 bits

/// {"code": ..., "j0": [...], "components": [[rows...], ...], "profile": ..., "complexity": ...}
json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const json& j);

/// {"sigma": [1,2,3,4], "A": [[...], ...]}
json to_json(const PIsometry& t);
PIsometry isometry_from_json(const json& j, const Poset& p, PrimeField field);

json to_json(const PDecomposition& pd);
json to_json(const BoundsReport& b);

/// Residues as fixed-width hex digits, e.g. (1,0,1) over GF(2) -> "101".
std::string hex_pack(const FieldVector& v);
FieldVector hex_unpack(const std::string& text, PrimeField field, std::size_t n);

/// Per-component syndrome -> leader maps keyed by hex-packed syndromes.
json to_json(const SyndromeTable& t);
/// Rebuilds a table written by to_json(SyndromeTable), checking every leader
/// against its syndrome.
SyndromeTable table_from_json(const json& j, const Poset& p);

/// "1,0,2" -> vector over `field`.
FieldVector parse_vector(const std::string& text, PrimeField field);

}  // namespace pmetric::io
