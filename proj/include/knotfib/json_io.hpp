#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "knotfib/annulus.hpp"
#include "knotfib/module_element.hpp"
#include "knotfib/moves.hpp"

namespace knotfib {

using ordered_json = nlohmann::ordered_json;

// Doubled-storage coefficient rendered as "3" or "3/2".
std::string coeff_str(long long stored);

// Array of {"key": ..., "coeff": ...} rows sorted by key text.
template <typename Key>
ordered_json module_to_json(const ModuleElement<Key>& m) {
    std::vector<std::pair<std::string, long long>> rows;
    for (const auto& [key, coeff] : m.terms()) {
        rows.emplace_back(key.str(), coeff);
    }
    std::sort(rows.begin(), rows.end());
    ordered_json arr = ordered_json::array();
    for (const auto& [key, coeff] : rows) {
        ordered_json row;
        row["key"] = key;
        row["coeff"] = coeff;
        arr.push_back(std::move(row));
    }
    return arr;
}

// Object {"<exponent>": "<coefficient>"} with exponents ascending.
ordered_json laurent_to_json(const LaurentPoly& p);

ordered_json move_to_json(const Move& m);
Move move_from_json(const ordered_json& j);

// One compact JSON object per line.
std::string movelog_to_jsonl(const MoveLog& log);
MoveLog movelog_from_jsonl(const std::string& text);

} // namespace knotfib
