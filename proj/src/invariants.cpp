#include "knotfib/invariants.hpp"

#include "knotfib/errors.hpp"

namespace knotfib {

namespace {

// Based loop of the component read from just after the visit at `pos`
// all the way around; crossings contribute no letters.
Word based_word(const Diagram& d, int ci, int pos) {
    const auto& ev = d.components[static_cast<std::size_t>(ci)].events;
    int n = static_cast<int>(ev.size());
    std::vector<Letter> letters;
    for (int s = 1; s < n; ++s) {
        const Event& e = ev[static_cast<std::size_t>((pos + s) % n)];
        if (e.is_gate()) letters.push_back(e.letter);
    }
    return reduce(letters, d.surface.rank);
}

} // namespace

ModuleElement<ConjClass> u_knot(const Diagram& d, const std::string& component) {
    int ci = component_index(d, component);
    ModuleElement<ConjClass> out;
    for (const Crossing& q : d.crossings) {
        auto vs = visits_of(d, q.id);
        if (vs.size() != 2 || vs[0].first != ci || vs[1].first != ci) continue;
        auto [x1, x2] = split_at(d, q.id);
        if (x1.empty() || x2.empty()) continue;
        out.add(ConjClass(x1), q.sign);
        out.add(ConjClass(x2), q.sign);
    }
    return out;
}

ModuleElement<EightClass> u_tilde(const Diagram& d, const std::string& component) {
    int ci = component_index(d, component);
    ModuleElement<EightClass> out;
    for (const Crossing& q : d.crossings) {
        auto vs = visits_of(d, q.id);
        if (vs.size() != 2 || vs[0].first != ci || vs[1].first != ci) continue;
        auto [x1, x2] = split_at(d, q.id);
        if (x1.empty() || x2.empty()) continue;
        out.add(EightClass(x1, x2, false), q.sign);
    }
    return out;
}

ModuleElement<EightClass> u_link(const Diagram& d, const std::string& c1,
                                 const std::string& c2) {
    int i1 = component_index(d, c1);
    int i2 = component_index(d, c2);
    if (i1 == i2) {
        throw Error("same-component",
                    "u_link needs two distinct components, got " + c1 + " twice");
    }
    ModuleElement<EightClass> out;
    for (const Crossing& q : d.crossings) {
        auto vs = visits_of(d, q.id);
        if (vs.size() != 2) continue;
        int p1 = -1, p2 = -1;
        for (const auto& [ci, pos] : vs) {
            if (ci == i1) p1 = pos;
            if (ci == i2) p2 = pos;
        }
        if (p1 < 0 || p2 < 0) continue;
        out.add(EightClass(based_word(d, i1, p1), based_word(d, i2, p2), true),
                q.sign);
    }
    return out;
}

ModuleElement<AbelianVector> u_homological(const Diagram& d,
                                           const std::string& component) {
    int ci = component_index(d, component);
    ModuleElement<AbelianVector> out;
    for (const Crossing& q : d.crossings) {
        auto vs = visits_of(d, q.id);
        if (vs.size() != 2 || vs[0].first != ci || vs[1].first != ci) continue;
        auto [x1, x2] = split_at(d, q.id);
        AbelianVector a1 = abelianize(x1, d.surface.rank);
        AbelianVector a2 = abelianize(x2, d.surface.rank);
        if (a1.zero() || a2.zero()) continue;
        out.add(a1, q.sign);
        out.add(a2, q.sign);
    }
    return out;
}

ModuleElement<ConjClass> phi_push(const ModuleElement<EightClass>& u) {
    ModuleElement<ConjClass> out;
    for (const auto& [k, c] : u.terms()) {
        out.add(ConjClass(k.a()), c);
        out.add(ConjClass(k.b()), c);
    }
    return out;
}

WeightSystem::WeightSystem(std::map<EightClass, long long> weights_in,
                           Diagram base_in, std::string base_component_in,
                           long long base_value_in)
    : weights(std::move(weights_in)),
      base(std::move(base_in)),
      base_component(std::move(base_component_in)),
      base_value(base_value_in) {
    for (const auto& [k, c] : weights) {
        (void)c;
        if (k.ordered() || k.a().empty() || k.b().empty()) {
            throw Error("bad-argument",
                        "weight system keys must be unordered figure-eight "
                        "classes with both loops nontrivial");
        }
    }
    if (base.components.empty()) {
        throw Error("bad-argument", "weight system base diagram has no components");
    }
    if (base_component.empty()) base_component = base.components[0].name;
    get_component(base, base_component); // throws unknown-component
}

long long evaluate_v1(const WeightSystem& ws, const Diagram& d,
                      const std::string& component) {
    Word wd = component_word(d, component);
    Word wb = component_word(ws.base, ws.base_component);
    if (!(ConjClass(wd) == ConjClass(wb))) {
        throw Error("precondition",
                    "component is not freely homotopic to the base knot "
                    "(conjugacy classes differ)");
    }
    ModuleElement<EightClass> diff =
        u_tilde(d, component) - u_tilde(ws.base, ws.base_component);
    long long pairing = 0;
    for (const auto& [k, c] : diff.terms()) {
        auto it = ws.weights.find(k);
        if (it != ws.weights.end()) pairing += c * it->second;
    }
    if (pairing % 2 != 0) {
        throw Error("homotopy-mismatch",
                    "pairing with the weight system is odd");
    }
    return ws.base_value + pairing / 2;
}

MultiInvariant u_multi(const Diagram& d) {
    MultiInvariant out;
    for (const Component& c : d.components) {
        out.knots.push_back({c.name, u_knot(d, c.name)});
    }
    for (std::size_t i = 1; i < d.components.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const std::string& a = d.components[i].name;
            const std::string& b = d.components[j].name;
            out.pairs.push_back({a, b, u_link(d, a, b)});
        }
    }
    return out;
}

} // namespace knotfib
