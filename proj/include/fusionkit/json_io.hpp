#pragma once

#include <json.hpp>

#include "fusionkit/fusion_engine.hpp"
#include "fusionkit/word_algebra.hpp"

namespace fusionkit {

// Decomposition schema:
//   {"s": <int|"inf">, "instance": "ahs"|"ao"|"au",
//    "terms": [{"word": [int,...], "mult": "<decimal-string>"}, ...]}
// with terms in lexicographic word order and multiplicities as decimal
// strings, so integer width never leaks into the format.
nlohmann::json decomposition_to_json(const Decomposition& d, const FusionAlphabet& a);

struct ParsedDecomposition {
    Decomposition decomposition;
    FusionAlphabet alphabet;
};

ParsedDecomposition decomposition_from_json(const nlohmann::json& j);

}  // namespace fusionkit
