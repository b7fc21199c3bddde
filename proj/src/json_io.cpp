#include "knotfib/json_io.hpp"

#include <sstream>

#include "knotfib/errors.hpp"

namespace knotfib {

std::string coeff_str(long long stored) {
    if (stored % 2 == 0) return std::to_string(stored / 2);
    return std::to_string(stored) + "/2";
}

ordered_json laurent_to_json(const LaurentPoly& p) {
    ordered_json obj = ordered_json::object();
    for (auto [exp, st] : p.stored_terms()) {
        obj[std::to_string(exp)] = coeff_str(st);
    }
    return obj;
}

ordered_json move_to_json(const Move& m) {
    ordered_json j;
    j["kind"] = move_kind_name(m.kind);
    j["comp"] = m.comp;
    j["comp2"] = m.comp2;
    j["pos"] = m.pos;
    j["pos2"] = m.pos2;
    j["q"] = m.q;
    j["q2"] = m.q2;
    j["q3"] = m.q3;
    j["sign"] = m.sign;
    j["letter"] = m.letter;
    j["before"] = m.before;
    j["word"] = m.word.str();
    return j;
}

Move move_from_json(const ordered_json& j) {
    try {
        Move m;
        m.kind = move_kind_from(j.at("kind").get<std::string>());
        m.comp = j.at("comp").get<std::string>();
        m.comp2 = j.at("comp2").get<std::string>();
        m.pos = j.at("pos").get<int>();
        m.pos2 = j.at("pos2").get<int>();
        m.q = j.at("q").get<std::string>();
        m.q2 = j.at("q2").get<std::string>();
        m.q3 = j.at("q3").get<std::string>();
        m.sign = j.at("sign").get<int>();
        m.letter = j.at("letter").get<Letter>();
        m.before = j.at("before").get<bool>();
        m.word = Word::parse(j.at("word").get<std::string>());
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw Error("parse", std::string("bad move record: ") + e.what());
    }
}

std::string movelog_to_jsonl(const MoveLog& log) {
    std::string out;
    for (const Move& m : log.moves) {
        out += move_to_json(m).dump();
        out += '\n';
    }
    return out;
}

MoveLog movelog_from_jsonl(const std::string& text) {
    MoveLog log;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string trimmed = line;
        while (!trimmed.empty() &&
               (trimmed.back() == '\r' || trimmed.back() == ' ')) {
            trimmed.pop_back();
        }
        if (trimmed.empty()) continue;
        ordered_json j;
        try {
            j = ordered_json::parse(trimmed);
        } catch (const nlohmann::json::exception& e) {
            throw Error("parse", "move log line " + std::to_string(number) +
                                     ": " + e.what());
        }
        log.moves.push_back(move_from_json(j));
    }
    return log;
}

} // namespace knotfib
