#include "fusionkit/json_io.hpp"

#include <stdexcept>

namespace fusionkit {

nlohmann::json decomposition_to_json(const Decomposition& d, const FusionAlphabet& a) {
    nlohmann::json j;
    const ModulusSpec& m = a.modulus();
    if (m.finite)
        j["s"] = m.order;
    else
        j["s"] = "inf";
    j["instance"] = a.instance_name();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, mult] : d.terms()) {
        nlohmann::json term;
        term["word"] = w;
        term["mult"] = to_decimal(mult);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

ParsedDecomposition decomposition_from_json(const nlohmann::json& j) {
    ModulusSpec m = ModulusSpec::finite_order(1);
    const auto& s = j.at("s");
    if (s.is_string()) {
        m = parse_modulus(s.get<std::string>());
    } else if (s.is_number_integer()) {
        m = ModulusSpec::finite_order(s.get<long>());
    } else {
        throw std::invalid_argument("field 's' must be an integer or \"inf\"");
    }
    FusionAlphabet alphabet = FusionAlphabet::from_name(j.at("instance").get<std::string>(), m);

    Decomposition d;
    for (const auto& term : j.at("terms")) {
        Word w = term.at("word").get<std::vector<Letter>>();
        if (!alphabet.word_valid(w)) throw std::invalid_argument("invalid word in JSON terms");
        BigInt mult = bigint_from_decimal(term.at("mult").get<std::string>());
        if (mult <= 0) throw std::invalid_argument("multiplicities must be positive");
        d.add(w, mult);
    }
    return ParsedDecomposition{std::move(d), alphabet};
}

}  // namespace fusionkit
