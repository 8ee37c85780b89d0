#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "poset_embed.hpp"

namespace typelattice::poset_embed {

// Poset input format: a JSON object { "n": int, "le": [[a, b], ...] }
// listing either a reduction or the full relation; the pairs are closed
// reflexively and transitively, and antisymmetry is validated.
inline FinitePoset load_poset_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("le"))
        throw ParseError("expected an object with fields \"n\" and \"le\"", 0);
    if (!j["n"].is_number_unsigned())
        throw ParseError("field \"n\" must be a non-negative integer", 0);
    if (!j["le"].is_array())
        throw ParseError("field \"le\" must be an array of [a, b] pairs", 0);

    const auto n = j["n"].get<std::size_t>();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& item : j["le"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() ||
            !item[1].is_number_unsigned())
            throw ParseError("each \"le\" item must be a pair of non-negative integers", 0);
        pairs.emplace_back(item[0].get<std::size_t>(), item[1].get<std::size_t>());
    }
    return FinitePoset::from_pairs(n, pairs);
}

inline FinitePoset load_poset_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open poset file: " + path, 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_poset_json(buffer.str());
}

} // namespace typelattice::poset_embed
