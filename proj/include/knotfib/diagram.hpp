#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "knotfib/words.hpp"

namespace knotfib {

struct Surface {
    int rank = 0;
    bool operator==(const Surface&) const = default;
};

struct Crossing {
    std::string id;
    int sign = 1;
    bool operator==(const Crossing&) const = default;
};

// One step of a component's cyclic itinerary: either a signed passage
// through a gate (a generator of the surface group) or a crossing visit.
struct Event {
    enum class Kind { gate, visit };

    Kind kind = Kind::gate;
    Letter letter = 0;      // gate only
    std::string crossing;   // visit only

    static Event make_gate(Letter l) { return {Kind::gate, l, {}}; }
    static Event make_visit(std::string id) {
        return {Kind::visit, 0, std::move(id)};
    }
    bool is_gate() const { return kind == Kind::gate; }
    bool is_visit() const { return kind == Kind::visit; }

    bool operator==(const Event&) const = default;
};

struct Component {
    std::string name;
    std::vector<Event> events; // cyclic; the stored start is remembered
    bool operator==(const Component&) const = default;
};

// Gated Gauss code: formal diagram of a link on a disc with `rank` holes.
// Geometric realizability is not checked.
struct Diagram {
    Surface surface;
    std::vector<Crossing> crossings;   // declaration order
    std::vector<Component> components; // declaration order
    bool operator==(const Diagram&) const = default;
};

// Lookups. The throwing accessors raise unknown-component / unknown-crossing.
int component_index(const Diagram& d, const std::string& name);
const Component& get_component(const Diagram& d, const std::string& name);
const Crossing* find_crossing(const Diagram& d, const std::string& id);
int sign_of(const Diagram& d, const std::string& crossing);

// (component index, event position) of every visit of `crossing`,
// in storage order.
std::vector<std::pair<int, int>> visits_of(const Diagram& d,
                                           const std::string& crossing);

// Violation strings with stable prefixes: "arity:", "unknown-crossing:",
// "gate-range:", "sign-domain:", "duplicate-crossing:",
// "duplicate-component:". Empty list iff the diagram is valid.
std::vector<std::string> validate(const Diagram& d);

// Split the component at a self-crossing: first word = gate letters strictly
// between the two visits in stored order, second word = the complementary
// arc. Both freely reduced.
std::pair<Word, Word> split_at(const Diagram& d, const std::string& crossing);

// All gate letters of the full cycle, freely reduced.
Word component_word(const Diagram& d, const std::string& component);

// Text codec. parse throws ParseError (syntax) or ValidationError;
// serialize emits the canonical rendering, and parse(serialize(d)) == d.
Diagram parse_diagram(const std::string& text);
std::string serialize(const Diagram& d);

// Deterministic valid diagram for fuzzing: components K1.., crossings q1..
// with random signs, visits and gates shuffled per component.
Diagram random_diagram(int rank, int components, int crossings, int gate_budget,
                       std::uint64_t seed);

// Rotate the stored starting event of a component left by k (k may be
// negative or exceed the length).
Diagram rotate_start(const Diagram& d, const std::string& component, int k);

} // namespace knotfib
