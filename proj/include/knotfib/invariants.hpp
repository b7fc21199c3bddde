#pragma once

#include <map>
#include <string>
#include <vector>

#include "knotfib/diagram.hpp"
#include "knotfib/module_element.hpp"
#include "knotfib/words.hpp"

namespace knotfib {

// Sum of sign * (class(xi1) + class(xi2)) over the component's
// self-crossings whose both split loops are nontrivial.
ModuleElement<ConjClass> u_knot(const Diagram& d, const std::string& component);

// Same crossings, keyed by the unordered figure-eight class of the splits.
ModuleElement<EightClass> u_tilde(const Diagram& d, const std::string& component);

// Sum over crossings shared by the two components, keyed by the ordered
// figure-eight class (based loop of c1, based loop of c2); no exclusion.
ModuleElement<EightClass> u_link(const Diagram& d, const std::string& c1,
                                 const std::string& c2);

// Like u_knot with abelianized keys; crossings with either split loop
// homologous to zero are skipped.
ModuleElement<AbelianVector> u_homological(const Diagram& d,
                                           const std::string& component);

// eight(a, b) -> class(a) + class(b), extended linearly.
ModuleElement<ConjClass> phi_push(const ModuleElement<EightClass>& u);

// Integer functional on unordered figure-eight classes with both loops
// nontrivial, anchored at a base knot whose invariant value is known.
struct WeightSystem {
    WeightSystem(std::map<EightClass, long long> weights, Diagram base,
                 std::string base_component, long long base_value);

    std::map<EightClass, long long> weights;
    Diagram base;
    std::string base_component;
    long long base_value = 0;
};

// base value + half the pairing of the weights with the figure-eight
// difference. Throws precondition when the component's free class differs
// from the base's, homotopy-mismatch when the pairing is odd.
long long evaluate_v1(const WeightSystem& ws, const Diagram& d,
                      const std::string& component);

struct MultiInvariant {
    struct KnotTerm {
        std::string component;
        ModuleElement<ConjClass> value;
    };
    struct PairTerm {
        std::string first, second;
        ModuleElement<EightClass> value;
    };
    std::vector<KnotTerm> knots;   // declaration order
    std::vector<PairTerm> pairs;   // (comp[i], comp[j]) for i > j
};

MultiInvariant u_multi(const Diagram& d);

} // namespace knotfib
