#include "knotfib/moves.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

#include "knotfib/errors.hpp"
#include "knotfib/rng.hpp"

namespace knotfib {

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

Component& comp_ref(Diagram& d, const std::string& name) {
    return d.components[static_cast<std::size_t>(component_index(d, name))];
}

void check_insert_pos(const Component& c, int pos) {
    if (pos < 0 || pos > static_cast<int>(c.events.size())) {
        throw Error("bad-argument",
                    "position " + std::to_string(pos) + " outside component " +
                        c.name + " (size " + std::to_string(c.events.size()) + ")");
    }
}

void require_fresh(const Diagram& d, const std::string& id) {
    if (id.empty()) throw Error("bad-argument", "empty crossing id");
    if (find_crossing(d, id)) {
        throw Error("duplicate-crossing", "crossing id already in use: " + id);
    }
}

void require_sign(int s) {
    if (s != 1 && s != -1) {
        throw Error("bad-argument", "sign must be +1 or -1");
    }
}

void erase_positions(Component& c, std::vector<int> positions) {
    std::sort(positions.begin(), positions.end(), std::greater<int>());
    for (int p : positions) {
        c.events.erase(c.events.begin() + p);
    }
}

void erase_crossing(Diagram& d, const std::string& id) {
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        if (d.crossings[i].id == id) {
            d.crossings.erase(d.crossings.begin() + static_cast<long>(i));
            return;
        }
    }
}

// Cyclically adjacent event index pair (i, wrap(i+1)) where the first event
// visits x and the second visits y.
struct AdjPair {
    int ci = 0;
    int i = 0;
    int j = 0;
};

bool pairs_disjoint(const AdjPair& a, const AdjPair& b) {
    if (a.ci != b.ci) return true;
    return a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j;
}

std::vector<AdjPair> adjacent_visit_pairs(const Diagram& d, const std::string& x,
                                          const std::string& y) {
    std::vector<AdjPair> out;
    for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
        const auto& ev = d.components[ci].events;
        int n = static_cast<int>(ev.size());
        if (n < 2) continue;
        for (int i = 0; i < n; ++i) {
            int j = wrap(i + 1, n);
            if (ev[static_cast<std::size_t>(i)].is_visit() &&
                ev[static_cast<std::size_t>(i)].crossing == x &&
                ev[static_cast<std::size_t>(j)].is_visit() &&
                ev[static_cast<std::size_t>(j)].crossing == y) {
                out.push_back({static_cast<int>(ci), i, j});
            }
        }
    }
    return out;
}

Diagram apply_r1_insert(Diagram d, const Move& m) {
    require_fresh(d, m.q);
    require_sign(m.sign);
    Component& c = comp_ref(d, m.comp);
    check_insert_pos(c, m.pos);
    d.crossings.push_back({m.q, m.sign});
    c.events.insert(c.events.begin() + m.pos,
                    {Event::make_visit(m.q), Event::make_visit(m.q)});
    return d;
}

Diagram apply_r1_remove(Diagram d, const Move& m) {
    if (!find_crossing(d, m.q)) {
        throw Error("unknown-crossing", "no crossing named " + m.q);
    }
    auto vs = visits_of(d, m.q);
    if (vs.size() != 2 || vs[0].first != vs[1].first) {
        throw Error("pattern-not-found",
                    "kink pattern [" + m.q + " " + m.q + "] not present");
    }
    Component& c = d.components[static_cast<std::size_t>(vs[0].first)];
    int n = static_cast<int>(c.events.size());
    int p1 = vs[0].second, p2 = vs[1].second;
    bool adjacent = p2 == p1 + 1 || (p1 == 0 && p2 == n - 1);
    if (!adjacent) {
        throw Error("pattern-not-found",
                    "kink pattern [" + m.q + " " + m.q + "] not present");
    }
    erase_positions(c, {p1, p2});
    erase_crossing(d, m.q);
    return d;
}

Diagram apply_r2_insert(Diagram d, const Move& m) {
    require_fresh(d, m.q);
    require_fresh(d, m.q2);
    if (m.q == m.q2) throw Error("bad-argument", "r2 needs two distinct ids");
    require_sign(m.sign);
    std::vector<Event> block1 = {Event::make_visit(m.q), Event::make_visit(m.q2)};
    std::vector<Event> block2 = {Event::make_visit(m.q2), Event::make_visit(m.q)};
    if (m.comp == m.comp2) {
        Component& c = comp_ref(d, m.comp);
        check_insert_pos(c, m.pos);
        check_insert_pos(c, m.pos2);
        // Insert at the later index first so the earlier one stays valid.
        if (m.pos > m.pos2) {
            c.events.insert(c.events.begin() + m.pos, block1.begin(), block1.end());
            c.events.insert(c.events.begin() + m.pos2, block2.begin(), block2.end());
        } else {
            c.events.insert(c.events.begin() + m.pos2, block2.begin(), block2.end());
            c.events.insert(c.events.begin() + m.pos, block1.begin(), block1.end());
        }
    } else {
        Component& c1 = comp_ref(d, m.comp);
        Component& c2 = comp_ref(d, m.comp2);
        check_insert_pos(c1, m.pos);
        check_insert_pos(c2, m.pos2);
        c1.events.insert(c1.events.begin() + m.pos, block1.begin(), block1.end());
        c2.events.insert(c2.events.begin() + m.pos2, block2.begin(), block2.end());
    }
    d.crossings.push_back({m.q, m.sign});
    d.crossings.push_back({m.q2, -m.sign});
    return d;
}

Diagram apply_r2_remove(Diagram d, const Move& m) {
    if (m.q == m.q2) throw Error("bad-argument", "r2 needs two distinct ids");
    int s1 = sign_of(d, m.q);
    int s2 = sign_of(d, m.q2);
    if (s1 != -s2) {
        throw Error("pattern-not-found",
                    "r2 pair " + m.q + ", " + m.q2 + " must have opposite signs");
    }
    auto as = adjacent_visit_pairs(d, m.q, m.q2);
    auto bs = adjacent_visit_pairs(d, m.q2, m.q);
    for (const AdjPair& a : as) {
        for (const AdjPair& b : bs) {
            if (!pairs_disjoint(a, b)) continue;
            if (a.ci == b.ci) {
                erase_positions(d.components[static_cast<std::size_t>(a.ci)],
                                {a.i, a.j, b.i, b.j});
            } else {
                erase_positions(d.components[static_cast<std::size_t>(a.ci)],
                                {a.i, a.j});
                erase_positions(d.components[static_cast<std::size_t>(b.ci)],
                                {b.i, b.j});
            }
            erase_crossing(d, m.q);
            erase_crossing(d, m.q2);
            return d;
        }
    }
    throw Error("pattern-not-found", "r2 pattern [" + m.q + " " + m.q2 +
                                         "] / [" + m.q2 + " " + m.q +
                                         "] not present");
}

Diagram apply_r3(Diagram d, const Move& m) {
    for (const std::string* id : {&m.q, &m.q2, &m.q3}) {
        if (!find_crossing(d, *id)) {
            throw Error("unknown-crossing", "no crossing named " + *id);
        }
    }
    if (m.q == m.q2 || m.q == m.q3 || m.q2 == m.q3) {
        throw Error("bad-argument", "r3 needs three distinct ids");
    }
    auto p1s = adjacent_visit_pairs(d, m.q, m.q2);
    auto p2s = adjacent_visit_pairs(d, m.q3, m.q);
    auto p3s = adjacent_visit_pairs(d, m.q2, m.q3);
    for (const AdjPair& a : p1s) {
        for (const AdjPair& b : p2s) {
            if (!pairs_disjoint(a, b)) continue;
            for (const AdjPair& c : p3s) {
                if (!pairs_disjoint(a, c) || !pairs_disjoint(b, c)) continue;
                for (const AdjPair& p : {a, b, c}) {
                    auto& ev = d.components[static_cast<std::size_t>(p.ci)].events;
                    std::swap(ev[static_cast<std::size_t>(p.i)],
                              ev[static_cast<std::size_t>(p.j)]);
                }
                return d;
            }
        }
    }
    throw Error("pattern-not-found", "r3 triangle pattern not present for " +
                                         m.q + ", " + m.q2 + ", " + m.q3);
}

Diagram apply_gate_cancel_insert(Diagram d, const Move& m) {
    if (m.letter == 0) throw Error("bad-argument", "gate letter must be nonzero");
    int k = m.letter > 0 ? m.letter : -m.letter;
    if (k > d.surface.rank) {
        throw Error("rank-violation",
                    "generator index " + std::to_string(k) +
                        " outside surface rank " + std::to_string(d.surface.rank));
    }
    Component& c = comp_ref(d, m.comp);
    check_insert_pos(c, m.pos);
    c.events.insert(c.events.begin() + m.pos,
                    {Event::make_gate(m.letter), Event::make_gate(-m.letter)});
    return d;
}

Diagram apply_gate_cancel_remove(Diagram d, const Move& m) {
    Component& c = comp_ref(d, m.comp);
    int n = static_cast<int>(c.events.size());
    if (m.pos < 0 || m.pos >= n || n < 2) {
        throw Error("pattern-not-found", "no cancelling gate pair at position " +
                                             std::to_string(m.pos));
    }
    int j = wrap(m.pos + 1, n);
    const Event& e1 = c.events[static_cast<std::size_t>(m.pos)];
    const Event& e2 = c.events[static_cast<std::size_t>(j)];
    bool match = e1.is_gate() && e2.is_gate() && e2.letter == -e1.letter &&
                 (m.letter == 0 || e1.letter == m.letter);
    if (!match) {
        throw Error("pattern-not-found", "no cancelling gate pair at position " +
                                             std::to_string(m.pos));
    }
    erase_positions(c, {m.pos, j});
    return d;
}

Diagram apply_slide(Diagram d, const Move& m) {
    if (m.letter == 0) throw Error("bad-argument", "gate letter must be nonzero");
    if (!find_crossing(d, m.q)) {
        throw Error("unknown-crossing", "no crossing named " + m.q);
    }
    auto vs = visits_of(d, m.q);
    if (vs.size() != 2) {
        throw Error("validation", "crossing " + m.q + " is visited " +
                                      std::to_string(vs.size()) +
                                      " times (expected 2)");
    }
    std::array<std::pair<int, int>, 2> swaps{}; // (visit pos, gate pos) per comp
    for (int v = 0; v < 2; ++v) {
        const auto& [ci, p] = vs[static_cast<std::size_t>(v)];
        const auto& ev = d.components[static_cast<std::size_t>(ci)].events;
        int n = static_cast<int>(ev.size());
        int g = m.before ? wrap(p - 1, n) : wrap(p + 1, n);
        const Event& e = ev[static_cast<std::size_t>(g)];
        if (g == p || !e.is_gate() || e.letter != m.letter) {
            throw Error("pattern-not-found",
                        "slide pattern (gate " + letter_name(m.letter) +
                            (m.before ? " before" : " after") + " both visits of " +
                            m.q + ") not present");
        }
        swaps[static_cast<std::size_t>(v)] = {p, g};
    }
    for (int v = 0; v < 2; ++v) {
        auto& ev =
            d.components[static_cast<std::size_t>(vs[static_cast<std::size_t>(v)].first)]
                .events;
        auto [p, g] = swaps[static_cast<std::size_t>(v)];
        std::swap(ev[static_cast<std::size_t>(p)], ev[static_cast<std::size_t>(g)]);
    }
    return d;
}

Diagram apply_fiber_flip(Diagram d, const std::string& q) {
    for (Crossing& c : d.crossings) {
        if (c.id == q) {
            c.sign = -c.sign;
            return d;
        }
    }
    throw Error("unknown-crossing", "no crossing named " + q);
}

Diagram apply_bite(Diagram d, const Move& m) {
    require_fresh(d, m.q);
    require_fresh(d, m.q2);
    if (m.q == m.q2) throw Error("bad-argument", "bite needs two distinct ids");
    require_sign(m.sign);
    Word w = reduce(m.word.letters(), d.surface.rank);
    Component& c = comp_ref(d, m.comp);
    check_insert_pos(c, m.pos);
    std::vector<Event> block;
    block.push_back(Event::make_visit(m.q));
    block.push_back(Event::make_visit(m.q2));
    for (Letter l : w.letters()) block.push_back(Event::make_gate(l));
    block.push_back(Event::make_visit(m.q));
    block.push_back(Event::make_visit(m.q2));
    Word winv = w.inverse();
    for (Letter l : winv.letters()) block.push_back(Event::make_gate(l));
    c.events.insert(c.events.begin() + m.pos, block.begin(), block.end());
    d.crossings.push_back({m.q, m.sign});
    d.crossings.push_back({m.q2, -m.sign});
    return d;
}

} // namespace

std::string move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::r1_insert: return "r1_insert";
        case MoveKind::r1_remove: return "r1_remove";
        case MoveKind::r2_insert: return "r2_insert";
        case MoveKind::r2_remove: return "r2_remove";
        case MoveKind::r3: return "r3";
        case MoveKind::gate_cancel_insert: return "gate_cancel_insert";
        case MoveKind::gate_cancel_remove: return "gate_cancel_remove";
        case MoveKind::slide: return "slide";
        case MoveKind::fiber_flip: return "fiber_flip";
        case MoveKind::bite: return "bite";
    }
    throw Error("bad-argument", "unknown move kind");
}

MoveKind move_kind_from(const std::string& name) {
    static const std::array<MoveKind, 10> kinds = {
        MoveKind::r1_insert,    MoveKind::r1_remove,
        MoveKind::r2_insert,    MoveKind::r2_remove,
        MoveKind::r3,           MoveKind::gate_cancel_insert,
        MoveKind::gate_cancel_remove, MoveKind::slide,
        MoveKind::fiber_flip,   MoveKind::bite,
    };
    for (MoveKind k : kinds) {
        if (move_kind_name(k) == name) return k;
    }
    throw Error("bad-argument", "unknown move kind: " + name);
}

Diagram apply(const Diagram& d, const Move& m) {
    Diagram out;
    switch (m.kind) {
        case MoveKind::r1_insert: out = apply_r1_insert(d, m); break;
        case MoveKind::r1_remove: out = apply_r1_remove(d, m); break;
        case MoveKind::r2_insert: out = apply_r2_insert(d, m); break;
        case MoveKind::r2_remove: out = apply_r2_remove(d, m); break;
        case MoveKind::r3: out = apply_r3(d, m); break;
        case MoveKind::gate_cancel_insert: out = apply_gate_cancel_insert(d, m); break;
        case MoveKind::gate_cancel_remove: out = apply_gate_cancel_remove(d, m); break;
        case MoveKind::slide: out = apply_slide(d, m); break;
        case MoveKind::fiber_flip: out = apply_fiber_flip(d, m.q); break;
        case MoveKind::bite: out = apply_bite(d, m); break;
    }
    std::vector<std::string> violations = validate(out);
    if (!violations.empty()) {
        throw std::logic_error("move " + move_kind_name(m.kind) +
                               " produced an invalid diagram: " + violations[0]);
    }
    return out;
}

Diagram fiber_flip(const Diagram& d, const std::string& crossing) {
    return apply_fiber_flip(d, crossing);
}

std::pair<ModuleElement<ConjClass>, ModuleElement<EightClass>>
predicted_jump(const Diagram& d, const std::string& crossing) {
    auto [x1, x2] = split_at(d, crossing);
    ModuleElement<ConjClass> du;
    ModuleElement<EightClass> dt;
    if (!x1.empty() && !x2.empty()) {
        long long c = -2LL * sign_of(d, crossing);
        du.add(ConjClass(x1), c);
        du.add(ConjClass(x2), c);
        dt.add(EightClass(x1, x2, false), c);
    }
    return {du, dt};
}

namespace {

std::size_t total_events(const Diagram& d) {
    std::size_t n = 0;
    for (const Component& c : d.components) n += c.events.size();
    return n;
}

std::vector<std::string> removable_kinks(const Diagram& d) {
    std::vector<std::string> out;
    for (const Crossing& q : d.crossings) {
        auto vs = visits_of(d, q.id);
        if (vs.size() != 2 || vs[0].first != vs[1].first) continue;
        int n = static_cast<int>(
            d.components[static_cast<std::size_t>(vs[0].first)].events.size());
        int p1 = vs[0].second, p2 = vs[1].second;
        if (p2 == p1 + 1 || (p1 == 0 && p2 == n - 1)) out.push_back(q.id);
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> r2_candidates(const Diagram& d) {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
        const auto& ev = d.components[ci].events;
        int n = static_cast<int>(ev.size());
        if (n < 2) continue;
        for (int i = 0; i < n; ++i) {
            int j = wrap(i + 1, n);
            const Event& a = ev[static_cast<std::size_t>(i)];
            const Event& b = ev[static_cast<std::size_t>(j)];
            if (!a.is_visit() || !b.is_visit() || a.crossing == b.crossing) continue;
            if (sign_of(d, a.crossing) != -sign_of(d, b.crossing)) continue;
            AdjPair here{static_cast<int>(ci), i, j};
            for (const AdjPair& back :
                 adjacent_visit_pairs(d, b.crossing, a.crossing)) {
                if (pairs_disjoint(here, back)) {
                    out.emplace_back(a.crossing, b.crossing);
                    break;
                }
            }
        }
    }
    return out;
}

std::vector<std::array<std::string, 3>> r3_candidates(const Diagram& d) {
    std::vector<std::array<std::string, 3>> out;
    std::vector<std::array<int, 3>> pairs; // (ci, i, j) of adjacent visit pairs
    for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
        const auto& ev = d.components[ci].events;
        int n = static_cast<int>(ev.size());
        if (n < 2) continue;
        for (int i = 0; i < n; ++i) {
            int j = wrap(i + 1, n);
            if (ev[static_cast<std::size_t>(i)].is_visit() &&
                ev[static_cast<std::size_t>(j)].is_visit()) {
                pairs.push_back({static_cast<int>(ci), i, j});
            }
        }
    }
    auto id_at = [&](int ci, int p) {
        return d.components[static_cast<std::size_t>(ci)]
            .events[static_cast<std::size_t>(p)]
            .crossing;
    };
    for (const auto& [ci, i, j] : pairs) {
        std::string a = id_at(ci, i), b = id_at(ci, j);
        if (a == b) continue;
        AdjPair p1{ci, i, j};
        for (const auto& [ci2, i2, j2] : pairs) {
            if (id_at(ci2, j2) != a) continue;
            std::string c = id_at(ci2, i2);
            if (c == a || c == b) continue;
            AdjPair p2{ci2, i2, j2};
            if (!pairs_disjoint(p1, p2)) continue;
            for (const AdjPair& p3 : adjacent_visit_pairs(d, b, c)) {
                if (pairs_disjoint(p1, p3) && pairs_disjoint(p2, p3)) {
                    out.push_back({a, b, c});
                    break;
                }
            }
        }
    }
    return out;
}

struct SlideOption {
    std::string q;
    Letter letter = 0;
    bool before = true;
};

std::vector<SlideOption> slide_candidates(const Diagram& d) {
    std::vector<SlideOption> out;
    for (const Crossing& q : d.crossings) {
        auto vs = visits_of(d, q.id);
        if (vs.size() != 2) continue;
        for (bool before : {true, false}) {
            Letter want = 0;
            bool ok = true;
            for (const auto& [ci, p] : vs) {
                const auto& ev = d.components[static_cast<std::size_t>(ci)].events;
                int n = static_cast<int>(ev.size());
                int g = before ? wrap(p - 1, n) : wrap(p + 1, n);
                const Event& e = ev[static_cast<std::size_t>(g)];
                if (g == p || !e.is_gate() || (want != 0 && e.letter != want)) {
                    ok = false;
                    break;
                }
                want = e.letter;
            }
            if (ok && want != 0) out.push_back({q.id, want, before});
        }
    }
    return out;
}

struct GatePairOption {
    std::string comp;
    int pos = 0;
    Letter letter = 0;
};

std::vector<GatePairOption> gate_cancel_candidates(const Diagram& d) {
    std::vector<GatePairOption> out;
    for (const Component& c : d.components) {
        int n = static_cast<int>(c.events.size());
        if (n < 2) continue;
        for (int i = 0; i < n; ++i) {
            int j = wrap(i + 1, n);
            const Event& a = c.events[static_cast<std::size_t>(i)];
            const Event& b = c.events[static_cast<std::size_t>(j)];
            if (a.is_gate() && b.is_gate() && b.letter == -a.letter) {
                out.push_back({c.name, i, a.letter});
            }
        }
    }
    return out;
}

std::optional<Move> propose(const Diagram& d, MoveKind kind, Rng& rng,
                            int& fresh_counter) {
    auto fresh = [&]() {
        std::string id;
        do {
            id = "f" + std::to_string(++fresh_counter);
        } while (find_crossing(d, id));
        return id;
    };
    auto random_spot = [&](std::string& comp, int& pos) {
        if (d.components.empty()) return false;
        const Component& c = d.components[static_cast<std::size_t>(
            rng.below(d.components.size()))];
        comp = c.name;
        pos = static_cast<int>(rng.below(c.events.size() + 1));
        return true;
    };

    Move m;
    m.kind = kind;
    switch (kind) {
        case MoveKind::r1_insert: {
            if (!random_spot(m.comp, m.pos)) return std::nullopt;
            m.sign = rng.sign();
            m.q = fresh();
            return m;
        }
        case MoveKind::r1_remove: {
            auto ks = removable_kinks(d);
            if (ks.empty()) return std::nullopt;
            m.q = ks[static_cast<std::size_t>(rng.below(ks.size()))];
            return m;
        }
        case MoveKind::r2_insert: {
            if (!random_spot(m.comp, m.pos)) return std::nullopt;
            if (!random_spot(m.comp2, m.pos2)) return std::nullopt;
            m.sign = rng.sign();
            m.q = fresh();
            m.q2 = fresh();
            return m;
        }
        case MoveKind::r2_remove: {
            auto cs = r2_candidates(d);
            if (cs.empty()) return std::nullopt;
            auto [x, y] = cs[static_cast<std::size_t>(rng.below(cs.size()))];
            m.q = x;
            m.q2 = y;
            return m;
        }
        case MoveKind::r3: {
            auto cs = r3_candidates(d);
            if (cs.empty()) return std::nullopt;
            auto t = cs[static_cast<std::size_t>(rng.below(cs.size()))];
            m.q = t[0];
            m.q2 = t[1];
            m.q3 = t[2];
            return m;
        }
        case MoveKind::gate_cancel_insert: {
            if (d.surface.rank < 1) return std::nullopt;
            if (!random_spot(m.comp, m.pos)) return std::nullopt;
            m.letter = static_cast<Letter>(rng.range(1, d.surface.rank)) *
                       rng.sign();
            return m;
        }
        case MoveKind::gate_cancel_remove: {
            auto cs = gate_cancel_candidates(d);
            if (cs.empty()) return std::nullopt;
            auto g = cs[static_cast<std::size_t>(rng.below(cs.size()))];
            m.comp = g.comp;
            m.pos = g.pos;
            m.letter = g.letter;
            return m;
        }
        case MoveKind::slide: {
            auto cs = slide_candidates(d);
            if (cs.empty()) return std::nullopt;
            auto s = cs[static_cast<std::size_t>(rng.below(cs.size()))];
            m.q = s.q;
            m.letter = s.letter;
            m.before = s.before;
            return m;
        }
        case MoveKind::bite: {
            if (!random_spot(m.comp, m.pos)) return std::nullopt;
            m.sign = rng.sign();
            m.q = fresh();
            m.q2 = fresh();
            std::vector<Letter> letters;
            if (d.surface.rank >= 1) {
                std::uint64_t len = rng.below(3);
                for (std::uint64_t i = 0; i < len; ++i) {
                    letters.push_back(
                        static_cast<Letter>(rng.range(1, d.surface.rank)) *
                        rng.sign());
                }
            }
            m.word = Word(std::move(letters));
            return m;
        }
        case MoveKind::fiber_flip:
            return std::nullopt; // never proposed by the fuzzer
    }
    return std::nullopt;
}

} // namespace

std::pair<Diagram, MoveLog> fuzz(const Diagram& d, int n, std::uint64_t seed) {
    if (n < 0) throw Error("bad-argument", "move count must be >= 0");
    static const std::array<MoveKind, 9> grow = {
        MoveKind::r1_insert,    MoveKind::r1_remove,
        MoveKind::r2_insert,    MoveKind::r2_remove,
        MoveKind::r3,           MoveKind::gate_cancel_insert,
        MoveKind::gate_cancel_remove, MoveKind::slide,
        MoveKind::bite,
    };
    static const std::array<MoveKind, 5> shrink = {
        MoveKind::r1_remove, MoveKind::r2_remove, MoveKind::gate_cancel_remove,
        MoveKind::slide, MoveKind::r3,
    };
    Rng rng(seed);
    Diagram cur = d;
    MoveLog log;
    int fresh_counter = 0;
    for (int step = 0; step < n; ++step) {
        bool applied = false;
        for (int attempt = 0; attempt < 400 && !applied; ++attempt) {
            MoveKind kind;
            if (total_events(cur) > 140 && attempt < 200) {
                kind = shrink[static_cast<std::size_t>(rng.below(shrink.size()))];
            } else {
                kind = grow[static_cast<std::size_t>(rng.below(grow.size()))];
            }
            auto mv = propose(cur, kind, rng, fresh_counter);
            if (!mv) continue;
            cur = apply(cur, *mv);
            log.moves.push_back(std::move(*mv));
            applied = true;
        }
        if (!applied) break; // nothing applicable (e.g. empty diagram)
    }
    return {cur, log};
}

Diagram replay(const Diagram& d, const MoveLog& log) {
    Diagram cur = d;
    for (const Move& m : log.moves) cur = apply(cur, m);
    return cur;
}

Diagram bite_then_flip(const Diagram& d, const std::string& component, int pos,
                       const Word& w, int sign) {
    int counter = 0;
    auto fresh = [&]() {
        std::string id;
        do {
            id = "b" + std::to_string(++counter);
        } while (find_crossing(d, id));
        return id;
    };
    Move m;
    m.kind = MoveKind::bite;
    m.comp = component;
    m.pos = pos;
    m.q = fresh();
    m.q2 = fresh();
    m.sign = sign;
    m.word = w;
    Diagram out = apply(d, m);
    return fiber_flip(out, m.q2);
}

EightClass bite_class(const Diagram& d, const std::string& component, int pos,
                      const Word& w) {
    const Component& c = get_component(d, component);
    int n = static_cast<int>(c.events.size());
    if (pos < 0 || pos > n) {
        throw Error("bad-argument", "position " + std::to_string(pos) +
                                        " outside component " + component);
    }
    std::vector<Letter> letters;
    for (int s = 0; s < n; ++s) {
        const Event& e = c.events[static_cast<std::size_t>((pos + s) % n)];
        if (e.is_gate()) letters.push_back(e.letter);
    }
    Word r = reduce(letters, d.surface.rank);
    return EightClass(w, concat(w.inverse(), r), false);
}

} // namespace knotfib
