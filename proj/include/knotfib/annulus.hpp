#pragma once

#include <map>
#include <string>
#include <utility>

#include "knotfib/diagram.hpp"
#include "knotfib/module_element.hpp"
#include "knotfib/words.hpp"

namespace knotfib {

// Laurent polynomial in t over half-integers. Coefficients are stored doubled
// (stored value = 2 * coefficient) so that halves stay exact; a coefficient is
// integral iff its stored value is even. No zero entries are kept.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly from_stored(std::map<int, long long> stored);
    // Builds from true integral coefficients (each gets doubled).
    static LaurentPoly from_integral(const std::map<int, long long>& coeffs);
    // Grammar: terms joined by " + " / " - ", each term
    // [int[/2]] [ t [^exp] ], e.g. "t^-1 + 3/2t + 2t^2", or "0".
    static LaurentPoly parse(const std::string& text);

    long long stored(int exp) const; // doubled coefficient, 0 if absent
    const std::map<int, long long>& stored_terms() const { return stored_; }
    bool integral() const; // every stored value even
    bool zero() const { return stored_.empty(); }

    void add_stored(int exp, long long stored_value);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(long long k);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
        a += b;
        return a;
    }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
        a -= b;
        return a;
    }
    friend LaurentPoly operator*(LaurentPoly a, long long k) {
        a *= k;
        return a;
    }
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly&) const = default;

    std::string str() const;

private:
    std::map<int, long long> stored_;
    void strip();
};

// Sum of annulus-generator exponents along the component word.
long long homology_class(const Diagram& d, const std::string& component);

// Partial linking polynomial of one component: over its self-crossings whose
// two loop classes are both non-trivial in homology, add half the crossing
// sign at both winding exponents. Requires surface rank 1.
LaurentPoly a_poly(const Diagram& d, const std::string& component);

// Exponent-sum substitution class(w) -> t^(sum of generator-1 exponents),
// applied to a combination of conjugacy classes. For rank-1 diagrams
// psi(u_knot) == a_poly * 2.
LaurentPoly psi(const ModuleElement<ConjClass>& u);

// True iff a_0 = a_h = 0 and a_i = a_(h-i) for all i.
bool symmetry_check(const LaurentPoly& a, long long h);

// Change of the polynomial under one positive meridian twist:
// -|h|(t + ... + t^(h-1)) for h > 0, -|h|(t^-1 + ... + t^(h+1)) for h < 0.
LaurentPoly delta_twist(long long h);

// Inserts a full meridian twist on the given component: every pair of its
// gate passages picks up two new crossings. direction +1 twists, -1 untwists.
// Requires surface rank 1.
Diagram twist_diagram(const Diagram& d, const std::string& component,
                      int direction);

// Twists A into the canonical window (0 <= a_1 < h for h > 0, mirrored for
// h < 0; h = 0 is always canonical). Returns (canonical polynomial, n) with
// A == canonical + n * delta_twist(h). Requires symmetry_check(A, h).
std::pair<LaurentPoly, long long> canonical_form(const LaurentPoly& a,
                                                 long long h);

// Empty string if p lies in the value range for homology h; otherwise the
// first violated condition, checked in the order: integrality, p_0, p_h,
// symmetry, odd midpoint (h = 2k, k != 0).
std::string range_violation(const LaurentPoly& p, long long h);
bool is_in_range(const LaurentPoly& p, long long h);

// Ascending one-crossing-per-turn spiral of winding h; its polynomial is
// t + ... + t^(h-1) (mirrored for h < 0), 0 for |h| <= 1. Component "K".
Diagram spiral_knot(long long h);

// Builds a diagram whose component "K" has homology h and polynomial exactly
// `target`, starting from spiral_knot(h) and adding same-sign crossing pairs.
// Throws RangeError when target is not in the value range.
Diagram realize_polynomial(long long h, const LaurentPoly& target);

} // namespace knotfib
