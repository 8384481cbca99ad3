#pragma once

// JSON input formats. Every parse failure is a ParseError whose message
// starts with the file or field location.
//
//   lielimits-system/1     levels + edges of a finite prefix
//   lielimits-embedding/1  one embedding source -> target
//   lielimits-chain/1      f -> k_1 + ... + k_l -> f'
//   lielimits-subspace/1   a subspace descriptor of V or V_*

#include "lielimits/decomposition.hpp"
#include "lielimits/subspace.hpp"
#include "lielimits/system.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lielimits::io {

using Json = nlohmann::json;

inline constexpr const char* kSystemFormat = "lielimits-system/1";
inline constexpr const char* kEmbeddingFormat = "lielimits-embedding/1";
inline constexpr const char* kChainFormat = "lielimits-chain/1";
inline constexpr const char* kSubspaceFormat = "lielimits-subspace/1";

Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& where);

// Value of "format", checked against `expected` when that is non-empty.
std::string format_of(const Json& j, const std::string& where, const std::string& expected = "");

// Exact numbers: integers as JSON numbers when they fit, otherwise "p/q" or
// decimal strings.
Json to_json(const Rational& q);
Json to_json(const Integer& z);
Rational rational_from_json(const Json& j, const std::string& where);
Integer integer_from_json(const Json& j, const std::string& where);

SimpleAlgebra algebra_from_json(const Json& j, const std::string& where);
SemisimpleAlgebra semisimple_from_json(const Json& j, const std::string& where);
Json to_json(const SemisimpleAlgebra& a);
Labels labels_from_json(const Json& j, const std::string& where);

// Array of {"weights": [[labels] per factor], "mult": m}.
ModuleDecomposition decomposition_from_json(const Json& j, const SemisimpleAlgebra& alg, const std::string& where);
Json summands_to_json(const ModuleDecomposition& d);

SystemSpec system_from_json(const Json& j, const std::string& where = "system");
Json to_json(const SystemSpec& s);

Embedding embedding_from_json(const Json& j, const std::string& where = "embedding");
Json to_json(const Embedding& e);

struct Chain {
    std::vector<Embedding> first;  // f -> k_j
    Embedding second;              // k_1 + ... + k_l -> f'
    bool operator==(const Chain&) const = default;
};
Chain chain_from_json(const Json& j, const std::string& where = "chain");
Json to_json(const Chain& c);

SubspaceDescriptor subspace_from_json(const Json& j, const std::string& where = "subspace");
Json to_json(const SubspaceDescriptor& d);
Json to_json(const Subspace& s);  // canonical descriptor
Subspace subspace_value_from_json(const Json& j, const std::string& where);

}  // namespace lielimits::io
