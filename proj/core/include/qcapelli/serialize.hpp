#pragma once

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include "qcapelli/capelli.hpp"
#include "qcapelli/field.hpp"
#include "qcapelli/matrixrep.hpp"
#include "qcapelli/sergeev.hpp"
#include "qcapelli/superdiff.hpp"

namespace qcapelli {

using Json = nlohmann::ordered_json;

// {"<radicand>": "p/q", ...}; "1" holds the rational part.
Json to_json(const FieldElement& a);
FieldElement field_from_json(const Json& j);

// [{"perm": [...], "clifford": [...], "coeff": {...}}, ...] in key order.
Json to_json(const SergeevElement& x);
SergeevElement sergeev_from_json(const Json& j);

// [{"xs": [[i, a], ...], "ds": [[i, a], ...], "coeff": {...}}, ...]
Json to_json(const NormalOrderedOperator& a);
NormalOrderedOperator operator_from_json(const Json& j, int N, int M);

// [{"exponents": [...], "coeff": {...}}, ...]
Json to_json(const SymPolynomial& p);

// [{"representative": "...", "size": k, "value": {...}}, ...]
Json to_json(const std::vector<CharacterClass>& table, int n);

}  // namespace qcapelli
