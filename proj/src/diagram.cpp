#include "knotfib/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "knotfib/errors.hpp"
#include "knotfib/rng.hpp"

namespace knotfib {

namespace {

struct Token {
    std::string text;
    int column = 0; // 1-based start column
};

struct LineTokens {
    int number = 0; // 1-based
    std::vector<Token> tokens;
};

// Strip '#' comments, split on whitespace, remember positions.
std::vector<LineTokens> tokenize(const std::string& text) {
    std::vector<LineTokens> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        LineTokens line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < raw.size() &&
                   !std::isspace(static_cast<unsigned char>(raw[j]))) {
                ++j;
            }
            line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
            i = j;
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

bool parse_int(const std::string& s, long long& out) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
    if (i == s.size()) return false;
    long long v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        v = v * 10 + (s[i] - '0');
        if (v > 1000000000LL) return false;
    }
    out = s[0] == '-' ? -v : v;
    return true;
}

} // namespace

int component_index(const Diagram& d, const std::string& name) {
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        if (d.components[i].name == name) return static_cast<int>(i);
    }
    throw Error("unknown-component", "no component named " + name);
}

const Component& get_component(const Diagram& d, const std::string& name) {
    return d.components[static_cast<std::size_t>(component_index(d, name))];
}

const Crossing* find_crossing(const Diagram& d, const std::string& id) {
    for (const Crossing& c : d.crossings) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

int sign_of(const Diagram& d, const std::string& crossing) {
    const Crossing* c = find_crossing(d, crossing);
    if (!c) throw Error("unknown-crossing", "no crossing named " + crossing);
    return c->sign;
}

std::vector<std::pair<int, int>> visits_of(const Diagram& d,
                                           const std::string& crossing) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
        const auto& ev = d.components[ci].events;
        for (std::size_t p = 0; p < ev.size(); ++p) {
            if (ev[p].is_visit() && ev[p].crossing == crossing) {
                out.emplace_back(static_cast<int>(ci), static_cast<int>(p));
            }
        }
    }
    return out;
}

std::vector<std::string> validate(const Diagram& d) {
    std::vector<std::string> out;
    if (d.surface.rank < 0) {
        out.push_back("gate-range: surface rank is negative");
    }
    for (const Crossing& c : d.crossings) {
        if (c.sign != 1 && c.sign != -1) {
            out.push_back("sign-domain: crossing " + c.id + " has sign " +
                          std::to_string(c.sign));
        }
    }
    std::set<std::string> ids;
    for (const Crossing& c : d.crossings) {
        if (!ids.insert(c.id).second) {
            out.push_back("duplicate-crossing: " + c.id);
        }
    }
    std::set<std::string> names;
    for (const Component& c : d.components) {
        if (!names.insert(c.name).second) {
            out.push_back("duplicate-component: " + c.name);
        }
    }
    std::map<std::string, int> visit_count;
    for (const Component& c : d.components) {
        for (std::size_t p = 0; p < c.events.size(); ++p) {
            const Event& e = c.events[p];
            if (e.is_gate()) {
                int k = e.letter > 0 ? e.letter : -e.letter;
                if (e.letter == 0 || k > d.surface.rank) {
                    out.push_back("gate-range: component " + c.name +
                                  " position " + std::to_string(p) +
                                  ": generator outside rank " +
                                  std::to_string(d.surface.rank));
                }
            } else {
                if (!ids.count(e.crossing)) {
                    out.push_back("unknown-crossing: " + e.crossing +
                                  " visited in component " + c.name);
                }
                ++visit_count[e.crossing];
            }
        }
    }
    for (const Crossing& c : d.crossings) {
        int n = visit_count.count(c.id) ? visit_count[c.id] : 0;
        if (n != 2) {
            out.push_back("arity: crossing " + c.id + " visited " +
                          std::to_string(n) + " times (expected 2)");
        }
    }
    return out;
}

std::pair<Word, Word> split_at(const Diagram& d, const std::string& crossing) {
    if (!find_crossing(d, crossing)) {
        throw Error("unknown-crossing", "no crossing named " + crossing);
    }
    auto vs = visits_of(d, crossing);
    if (vs.size() != 2) {
        throw Error("validation", "crossing " + crossing + " is visited " +
                                      std::to_string(vs.size()) +
                                      " times (expected 2)");
    }
    if (vs[0].first != vs[1].first) {
        throw Error("not-a-self-crossing",
                    "crossing " + crossing + " joins two components");
    }
    const auto& ev = d.components[static_cast<std::size_t>(vs[0].first)].events;
    int n = static_cast<int>(ev.size());
    int p1 = vs[0].second, p2 = vs[1].second;
    std::vector<Letter> w1, w2;
    for (int i = (p1 + 1) % n; i != p2; i = (i + 1) % n) {
        if (ev[static_cast<std::size_t>(i)].is_gate()) {
            w1.push_back(ev[static_cast<std::size_t>(i)].letter);
        }
    }
    for (int i = (p2 + 1) % n; i != p1; i = (i + 1) % n) {
        if (ev[static_cast<std::size_t>(i)].is_gate()) {
            w2.push_back(ev[static_cast<std::size_t>(i)].letter);
        }
    }
    return {reduce(w1, d.surface.rank), reduce(w2, d.surface.rank)};
}

Word component_word(const Diagram& d, const std::string& component) {
    const Component& c = get_component(d, component);
    std::vector<Letter> letters;
    for (const Event& e : c.events) {
        if (e.is_gate()) letters.push_back(e.letter);
    }
    return reduce(letters, d.surface.rank);
}

Diagram parse_diagram(const std::string& text) {
    std::vector<LineTokens> lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty input; expected surface line");

    Diagram d;
    bool have_surface = false;
    std::set<std::string> crossing_ids;
    std::vector<const LineTokens*> comp_lines;
    std::set<std::string> comp_names;

    for (const LineTokens& line : lines) {
        const std::string& head = line.tokens[0].text;
        if (!have_surface) {
            if (head != "surface") {
                throw ParseError(line.number, line.tokens[0].column,
                                 "expected `surface rank=<n>` as the first line");
            }
            if (line.tokens.size() != 2 ||
                line.tokens[1].text.rfind("rank=", 0) != 0) {
                throw ParseError(line.number,
                                 line.tokens.size() > 1 ? line.tokens[1].column
                                                        : line.tokens[0].column,
                                 "expected `surface rank=<n>`");
            }
            long long r = 0;
            if (!parse_int(line.tokens[1].text.substr(5), r) || r < 0) {
                throw ParseError(line.number, line.tokens[1].column,
                                 "surface rank must be a non-negative integer");
            }
            d.surface.rank = static_cast<int>(r);
            have_surface = true;
            continue;
        }
        if (head == "surface") {
            throw ParseError(line.number, line.tokens[0].column,
                             "duplicate surface line");
        }
        if (head == "crossing") {
            if (line.tokens.size() != 3) {
                throw ParseError(line.number, line.tokens[0].column,
                                 "expected `crossing <id> <+1|-1>`");
            }
            const std::string& id = line.tokens[1].text;
            if (id == "surface" || id == "crossing" || id == "comp") {
                throw ParseError(line.number, line.tokens[1].column,
                                 "crossing id is a reserved word: " + id);
            }
            Letter as_letter = parse_letter(id);
            int k = as_letter > 0 ? as_letter : -as_letter;
            if (as_letter != 0 && k <= d.surface.rank) {
                throw ParseError(line.number, line.tokens[1].column,
                                 "crossing id shadows a gate name: " + id);
            }
            if (!crossing_ids.insert(id).second) {
                throw ParseError(line.number, line.tokens[1].column,
                                 "duplicate crossing id: " + id);
            }
            const std::string& s = line.tokens[2].text;
            if (s != "+1" && s != "-1") {
                throw ParseError(line.number, line.tokens[2].column,
                                 "crossing sign must be +1 or -1, got " + s);
            }
            d.crossings.push_back({id, s == "+1" ? 1 : -1});
            continue;
        }
        if (head == "comp") {
            if (line.tokens.size() < 2) {
                throw ParseError(line.number, line.tokens[0].column,
                                 "expected `comp <name>: <events>`");
            }
            std::string name = line.tokens[1].text;
            bool colon_attached = !name.empty() && name.back() == ':';
            if (colon_attached) name.pop_back();
            if (name.empty() || name.find(':') != std::string::npos) {
                throw ParseError(line.number, line.tokens[1].column,
                                 "bad component name");
            }
            if (!colon_attached) {
                if (line.tokens.size() < 3 || line.tokens[2].text != ":") {
                    throw ParseError(line.number, line.tokens[1].column,
                                     "expected `:` after component name");
                }
            }
            if (!comp_names.insert(name).second) {
                throw ParseError(line.number, line.tokens[1].column,
                                 "duplicate component name: " + name);
            }
            d.components.push_back({name, {}});
            comp_lines.push_back(&line);
            continue;
        }
        throw ParseError(line.number, line.tokens[0].column,
                         "expected `crossing` or `comp`, got " + head);
    }

    // Second pass: event tokens, now that every crossing id is known.
    std::size_t comp_index = 0;
    for (const LineTokens* line : comp_lines) {
        Component& comp = d.components[comp_index++];
        std::size_t first_event = line->tokens[1].text.back() == ':' ? 2 : 3;
        for (std::size_t t = first_event; t < line->tokens.size(); ++t) {
            const Token& tok = line->tokens[t];
            if (crossing_ids.count(tok.text)) {
                comp.events.push_back(Event::make_visit(tok.text));
                continue;
            }
            Letter l = parse_letter(tok.text);
            if (l == 0) {
                throw ParseError(line->number, tok.column,
                                 "unknown event token: " + tok.text);
            }
            int k = l > 0 ? l : -l;
            if (k > d.surface.rank) {
                throw ParseError(line->number, tok.column,
                                 "generator " + tok.text + " exceeds surface rank " +
                                     std::to_string(d.surface.rank));
            }
            comp.events.push_back(Event::make_gate(l));
        }
    }

    std::vector<std::string> violations = validate(d);
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return d;
}

std::string serialize(const Diagram& d) {
    std::string out = "surface rank=" + std::to_string(d.surface.rank) + "\n";
    for (const Crossing& c : d.crossings) {
        out += "crossing " + c.id + (c.sign > 0 ? " +1" : " -1") + "\n";
    }
    for (const Component& c : d.components) {
        out += "comp " + c.name + ":";
        for (const Event& e : c.events) {
            out += ' ';
            out += e.is_gate() ? letter_name(e.letter) : e.crossing;
        }
        out += '\n';
    }
    return out;
}

Diagram random_diagram(int rank, int components, int crossings, int gate_budget,
                       std::uint64_t seed) {
    if (rank < 0 || components < 0 || crossings < 0 || gate_budget < 0) {
        throw Error("bad-argument", "random_diagram parameters must be >= 0");
    }
    if (components == 0 && crossings > 0) {
        throw Error("bad-argument",
                    "cannot place crossings in a diagram with no components");
    }
    Rng rng(seed);
    Diagram d;
    d.surface.rank = rank;
    for (int i = 0; i < components; ++i) {
        d.components.push_back({"K" + std::to_string(i + 1), {}});
    }
    for (int i = 0; i < crossings; ++i) {
        std::string id = "q" + std::to_string(i + 1);
        d.crossings.push_back({id, rng.sign()});
        for (int v = 0; v < 2; ++v) {
            auto& comp =
                d.components[static_cast<std::size_t>(rng.below(
                    static_cast<std::uint64_t>(components)))];
            comp.events.push_back(Event::make_visit(id));
        }
    }
    int gates = rank > 0 && components > 0 ? gate_budget : 0;
    for (int i = 0; i < gates; ++i) {
        Letter l = static_cast<Letter>(rng.range(1, rank)) * rng.sign();
        auto& comp = d.components[static_cast<std::size_t>(
            rng.below(static_cast<std::uint64_t>(components)))];
        comp.events.push_back(Event::make_gate(l));
    }
    for (Component& c : d.components) {
        for (std::size_t i = c.events.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(rng.below(i));
            std::swap(c.events[i - 1], c.events[j]);
        }
    }
    std::vector<std::string> violations = validate(d);
    if (!violations.empty()) {
        throw std::logic_error("random_diagram produced an invalid diagram: " +
                               violations[0]);
    }
    return d;
}

Diagram rotate_start(const Diagram& d, const std::string& component, int k) {
    Diagram out = d;
    Component& c =
        out.components[static_cast<std::size_t>(component_index(d, component))];
    int n = static_cast<int>(c.events.size());
    if (n == 0) return out;
    int shift = ((k % n) + n) % n;
    std::rotate(c.events.begin(), c.events.begin() + shift, c.events.end());
    return out;
}

} // namespace knotfib
