#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "knotfib/diagram.hpp"
#include "knotfib/invariants.hpp"

namespace knotfib {

enum class MoveKind {
    r1_insert,
    r1_remove,
    r2_insert,
    r2_remove,
    r3,
    gate_cancel_insert,
    gate_cancel_remove,
    slide,
    fiber_flip,
    bite,
};

std::string move_kind_name(MoveKind k);
MoveKind move_kind_from(const std::string& name); // throws bad-argument

// One move; only the fields relevant to `kind` are meaningful.
//   r1_insert:          comp, pos, q, sign
//   r1_remove:          q
//   r2_insert:          comp, pos, comp2, pos2, q, q2, sign (q2 gets -sign)
//   r2_remove:          q, q2
//   r3:                 q, q2, q3 — adjacent visit pairs (q q2), (q3 q),
//                       (q2 q3) each get reversed in place
//   gate_cancel_insert: comp, pos, letter — inserts [letter, letter^-1]
//   gate_cancel_remove: comp, pos — the pair [l, l^-1] starting at pos
//   slide:              q, letter, before — swap the (gate, visit) adjacency
//                       at BOTH visits of q, same signed letter on the same
//                       side (before = gate precedes the visit)
//   fiber_flip:         q
//   bite:               comp, pos, q, q2, sign, word — inserts the
//                       null-homotopic detour [q q2 word q q2 word^-1];
//                       q gets `sign`, q2 gets -sign
struct Move {
    MoveKind kind = MoveKind::r1_insert;
    std::string comp;
    std::string comp2;
    int pos = 0;
    int pos2 = 0;
    std::string q;
    std::string q2;
    std::string q3;
    int sign = 1;
    Letter letter = 0;
    bool before = true;
    Word word;

    bool operator==(const Move&) const = default;
};

// Replayable sequence: folding apply over `moves` reproduces the end diagram.
struct MoveLog {
    std::vector<Move> moves;
    bool operator==(const MoveLog&) const = default;
};

// Pure: returns the transformed diagram. Throws pattern-not-found when a
// removal's exact pattern is absent, plus unknown-component /
// unknown-crossing / bad-argument for dangling parameters.
Diagram apply(const Diagram& d, const Move& m);

Diagram fiber_flip(const Diagram& d, const std::string& crossing);

// (delta u_knot, delta u_tilde) caused by flipping the self-crossing:
// -2*sign*(class(xi1) + class(xi2)) and -2*sign*eight(xi1, xi2) when both
// split loops are nontrivial, zero otherwise.
std::pair<ModuleElement<ConjClass>, ModuleElement<EightClass>>
predicted_jump(const Diagram& d, const std::string& crossing);

// n random invariance-preserving moves (no fiber flips), deterministic per
// seed; unavailable moves are redrawn.
std::pair<Diagram, MoveLog> fuzz(const Diagram& d, int n, std::uint64_t seed);

Diagram replay(const Diagram& d, const MoveLog& log);

// Bite with fresh crossings, then flip the second one: adds
// 2 * sign * eight(w, w^-1 R) to u_tilde when both loops are nontrivial,
// where R is the based gate word of the component read from `pos`.
Diagram bite_then_flip(const Diagram& d, const std::string& component, int pos,
                       const Word& w, int sign);

// The unordered figure-eight class that bite_then_flip at this spot targets.
EightClass bite_class(const Diagram& d, const std::string& component, int pos,
                      const Word& w);

} // namespace knotfib
