#include "knotfib/annulus.hpp"

#include <array>
#include <cctype>
#include <climits>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "knotfib/errors.hpp"
#include "knotfib/moves.hpp"

namespace knotfib {

void LaurentPoly::strip() {
    for (auto it = stored_.begin(); it != stored_.end();) {
        if (it->second == 0) {
            it = stored_.erase(it);
        } else {
            ++it;
        }
    }
}

LaurentPoly LaurentPoly::from_stored(std::map<int, long long> stored) {
    LaurentPoly p;
    p.stored_ = std::move(stored);
    p.strip();
    return p;
}

LaurentPoly LaurentPoly::from_integral(const std::map<int, long long>& coeffs) {
    LaurentPoly p;
    for (auto [e, c] : coeffs) {
        if (c != 0) p.stored_[e] = 2 * c;
    }
    return p;
}

long long LaurentPoly::stored(int exp) const {
    auto it = stored_.find(exp);
    return it == stored_.end() ? 0 : it->second;
}

bool LaurentPoly::integral() const {
    for (auto [e, st] : stored_) {
        if (st % 2 != 0) return false;
    }
    return true;
}

void LaurentPoly::add_stored(int exp, long long stored_value) {
    long long& slot = stored_[exp];
    slot += stored_value;
    if (slot == 0) stored_.erase(exp);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto [e, st] : o.stored_) add_stored(e, st);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto [e, st] : o.stored_) add_stored(e, -st);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(long long k) {
    if (k == 0) {
        stored_.clear();
        return *this;
    }
    for (auto& [e, st] : stored_) st *= k;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    p *= -1;
    return p;
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty()) throw Error("poly-parse", "empty polynomial");
    LaurentPoly out;
    std::size_t i = 0;
    long long sign = 1;
    if (s[0] == '-') {
        sign = -1;
        i = 1;
    }
    while (true) {
        std::size_t start = i;
        long long num = 1;
        bool have_num = false;
        bool half = false;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) {
            if (j - i > 12) throw Error("poly-parse", "coefficient too large");
            num = std::stoll(s.substr(i, j - i));
            have_num = true;
            i = j;
            if (i < s.size() && s[i] == '/') {
                if (i + 1 >= s.size() || s[i + 1] != '2') {
                    throw Error("poly-parse", "only halves (/2) are supported");
                }
                half = true;
                i += 2;
            }
        }
        int exp = 0;
        bool have_t = false;
        if (i < s.size() && s[i] == 't') {
            have_t = true;
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                long long esign = 1;
                if (i < s.size() && s[i] == '-') {
                    esign = -1;
                    ++i;
                }
                std::size_t k = i;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])))
                    ++k;
                if (k == i) throw Error("poly-parse", "missing exponent after '^'");
                if (k - i > 6) throw Error("poly-parse", "exponent too large");
                exp = static_cast<int>(esign * std::stoll(s.substr(i, k - i)));
                i = k;
            }
        }
        if (!have_num && !have_t) {
            throw Error("poly-parse",
                        "expected a term at position " + std::to_string(start + 1));
        }
        out.add_stored(exp, sign * (half ? num : 2 * num));
        if (i == s.size()) break;
        if (s[i] == '+') {
            sign = 1;
        } else if (s[i] == '-') {
            sign = -1;
        } else {
            throw Error("poly-parse",
                        std::string("unexpected character '") + s[i] + "'");
        }
        ++i;
        if (i >= s.size() || s[i] == '+' || s[i] == '-') {
            throw Error("poly-parse", "dangling sign");
        }
    }
    return out;
}

std::string LaurentPoly::str() const {
    if (stored_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto [exp, st] : stored_) {
        bool neg = st < 0;
        long long mag = neg ? -st : st;
        std::string coeff;
        bool unit = false;
        if (mag % 2 == 0) {
            unit = mag == 2;
            coeff = std::to_string(mag / 2);
        } else {
            coeff = std::to_string(mag) + "/2";
        }
        std::string term;
        if (exp == 0) {
            term = coeff;
        } else {
            if (!unit) term = coeff;
            term += "t";
            if (exp != 1) term += "^" + std::to_string(exp);
        }
        if (first) {
            out = (neg ? "-" : "") + term;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + term;
        }
    }
    return out;
}

namespace {

long long floor_div(long long a, long long b) { // b > 0
    long long q = a / b;
    long long r = a % b;
    return r != 0 && r < 0 ? q - 1 : q;
}

long long stored_at(const LaurentPoly& p, long long e) {
    if (e < INT_MIN || e > INT_MAX) return 0;
    return p.stored(static_cast<int>(e));
}

} // namespace

long long homology_class(const Diagram& d, const std::string& component) {
    const Component& c = get_component(d, component);
    long long h = 0;
    for (const Event& e : c.events) {
        if (!e.is_gate()) continue;
        if (e.letter == 1) ++h;
        if (e.letter == -1) --h;
    }
    return h;
}

LaurentPoly a_poly(const Diagram& d, const std::string& component) {
    if (d.surface.rank != 1) {
        throw Error("rank-violation",
                    "partial linking polynomial requires surface rank 1, got " +
                        std::to_string(d.surface.rank));
    }
    const Component& c = get_component(d, component);
    std::map<std::string, int> sign;
    for (const Crossing& q : d.crossings) sign[q.id] = q.sign;
    std::size_t n = c.events.size();
    std::vector<long long> prefix(n + 1, 0);
    std::map<std::string, std::vector<std::size_t>> pos;
    for (std::size_t i = 0; i < n; ++i) {
        const Event& e = c.events[i];
        prefix[i + 1] = prefix[i] + (e.is_gate() ? e.letter : 0);
        if (e.is_visit()) pos[e.crossing].push_back(i);
    }
    long long h = prefix[n];
    LaurentPoly a;
    for (const auto& [id, ps] : pos) {
        if (ps.size() != 2) continue; // not a self-crossing of this component
        long long i1 = prefix[ps[1]] - prefix[ps[0]];
        long long i2 = h - i1;
        if (i1 == 0 || i2 == 0) continue;
        long long w = sign[id];
        a.add_stored(static_cast<int>(i1), w);
        a.add_stored(static_cast<int>(i2), w);
    }
    return a;
}

LaurentPoly psi(const ModuleElement<ConjClass>& u) {
    LaurentPoly out;
    for (const auto& [key, coeff] : u.terms()) {
        long long s = 0;
        for (Letter l : key.word().letters()) {
            if (l == 1) ++s;
            if (l == -1) --s;
        }
        out.add_stored(static_cast<int>(s), 2 * coeff);
    }
    return out;
}

bool symmetry_check(const LaurentPoly& a, long long h) {
    if (a.stored(0) != 0) return false;
    if (stored_at(a, h) != 0) return false;
    for (auto [e, st] : a.stored_terms()) {
        if (stored_at(a, h - e) != st) return false;
    }
    return true;
}

LaurentPoly delta_twist(long long h) {
    long long mag = h >= 0 ? h : -h;
    if (mag > 1000000) throw Error("bad-argument", "twist winding too large");
    LaurentPoly out;
    if (h > 0) {
        for (long long e = 1; e < h; ++e) {
            out.add_stored(static_cast<int>(e), -2 * mag);
        }
    } else if (h < 0) {
        for (long long e = -1; e > h; --e) {
            out.add_stored(static_cast<int>(e), -2 * mag);
        }
    }
    return out;
}

Diagram twist_diagram(const Diagram& d, const std::string& component,
                      int direction) {
    if (d.surface.rank != 1) {
        throw Error("rank-violation",
                    "meridian twist requires surface rank 1, got " +
                        std::to_string(d.surface.rank));
    }
    if (direction != 1 && direction != -1) {
        throw Error("bad-argument", "direction must be +1 or -1");
    }
    int ci = component_index(d, component);
    const Component& c = d.components[static_cast<std::size_t>(ci)];

    std::vector<int> eps; // gate directions in stored order
    for (const Event& e : c.events) {
        if (e.is_gate()) eps.push_back(e.letter > 0 ? 1 : -1);
    }
    int k = static_cast<int>(eps.size());

    Diagram out = d;
    std::set<std::string> used;
    for (const Crossing& q : d.crossings) used.insert(q.id);
    int counter = 0;
    auto fresh = [&]() {
        std::string id;
        do {
            id = "t" + std::to_string(++counter);
        } while (used.count(id));
        used.insert(id);
        return id;
    };

    // Two crossings per unordered pair of gate passages (one per half-twist).
    std::vector<std::vector<std::array<std::string, 2>>> ids(
        static_cast<std::size_t>(k),
        std::vector<std::array<std::string, 2>>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            auto& slot = ids[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            slot = {fresh(), fresh()};
            int s = -direction * eps[static_cast<std::size_t>(i)] *
                    eps[static_cast<std::size_t>(j)];
            out.crossings.push_back({slot[0], s});
            out.crossings.push_back({slot[1], s});
        }
    }
    auto pair_id = [&](int m, int j, int copy) {
        int lo = m < j ? m : j;
        int hi = m < j ? j : m;
        return ids[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)]
                  [static_cast<std::size_t>(copy)];
    };
    auto block = [&](int m) {
        std::vector<Event> b;
        for (int j = 0; j < k; ++j) {
            if (j != m) b.push_back(Event::make_visit(pair_id(m, j, 0)));
        }
        for (int j = k - 1; j >= 0; --j) {
            if (j != m) b.push_back(Event::make_visit(pair_id(m, j, 1)));
        }
        return b;
    };

    // A strand entering along the gate direction meets the twist region after
    // the gate; an opposing strand meets it first.
    std::vector<Event> ev;
    int g = 0;
    for (const Event& e : c.events) {
        if (e.is_gate()) {
            std::vector<Event> b = block(g);
            if (eps[static_cast<std::size_t>(g)] == -1) {
                ev.insert(ev.end(), b.begin(), b.end());
                ev.push_back(e);
            } else {
                ev.push_back(e);
                ev.insert(ev.end(), b.begin(), b.end());
            }
            ++g;
        } else {
            ev.push_back(e);
        }
    }
    out.components[static_cast<std::size_t>(ci)].events = std::move(ev);

    std::vector<std::string> violations = validate(out);
    if (!violations.empty()) {
        throw std::logic_error("twist produced an invalid diagram: " +
                               violations[0]);
    }
    return out;
}

std::pair<LaurentPoly, long long> canonical_form(const LaurentPoly& a,
                                                 long long h) {
    if (!symmetry_check(a, h)) {
        throw Error("symmetry", "polynomial is not symmetric about h = " +
                                    std::to_string(h));
    }
    if (h == 0) return {a, 0};
    long long mag = h > 0 ? h : -h;
    int e = h > 0 ? 1 : -1;
    long long n = -floor_div(a.stored(e), 2 * mag);
    LaurentPoly result = a - delta_twist(h) * n;
    return {result, n};
}

std::string range_violation(const LaurentPoly& p, long long h) {
    if (!p.integral()) return "coefficients must be integral";
    if (p.stored(0) != 0) return "p_0 must be 0";
    if (stored_at(p, h) != 0) return "p_h must be 0";
    for (auto [e, st] : p.stored_terms()) {
        if (stored_at(p, h - e) != st) return "symmetry p_j = p_(h-j) violated";
    }
    if (h != 0 && h % 2 == 0) {
        long long pk = stored_at(p, h / 2) / 2;
        if (pk % 2 == 0) return "midpoint coefficient p_k must be odd";
    }
    return "";
}

bool is_in_range(const LaurentPoly& p, long long h) {
    return range_violation(p, h).empty();
}

Diagram spiral_knot(long long h) {
    long long mag = h >= 0 ? h : -h;
    if (mag > 100000) throw Error("bad-argument", "winding too large");
    Letter x = h >= 0 ? 1 : -1;
    Diagram d;
    d.surface.rank = 1;
    Component c;
    c.name = "K";
    if (mag <= 1) {
        if (mag == 1) c.events.push_back(Event::make_gate(x));
    } else {
        for (long long i = 1; i < mag; ++i) {
            std::string id = "q" + std::to_string(i);
            d.crossings.push_back({id, 1});
            c.events.push_back(Event::make_gate(x));
            c.events.push_back(Event::make_visit(id));
        }
        c.events.push_back(Event::make_gate(x));
        for (long long i = mag - 1; i >= 1; --i) {
            c.events.push_back(Event::make_visit("q" + std::to_string(i)));
        }
    }
    d.components.push_back(std::move(c));
    std::vector<std::string> violations = validate(d);
    if (!violations.empty()) {
        throw std::logic_error("spiral construction invalid: " + violations[0]);
    }
    return d;
}

Diagram realize_polynomial(long long h, const LaurentPoly& target) {
    std::string cond = range_violation(target, h);
    if (!cond.empty()) throw RangeError(cond);
    Diagram d = spiral_knot(h);
    LaurentPoly diff = target - a_poly(d, "K");
    for (auto [e, st] : diff.stored_terms()) {
        long long mirror = h - e;
        if (e < mirror) continue; // handled at the mirror exponent
        long long bites;
        if (e == mirror) {
            if (st % 4 != 0) {
                throw std::logic_error("midpoint defect is not a double pair");
            }
            bites = std::llabs(st) / 4;
        } else {
            bites = std::llabs(st) / 2;
        }
        int sign = st > 0 ? 1 : -1;
        std::vector<Letter> wl(static_cast<std::size_t>(std::llabs(e)),
                               e > 0 ? 1 : -1);
        Word w(std::move(wl));
        for (long long b = 0; b < bites; ++b) {
            d = bite_then_flip(d, "K", 0, w, sign);
        }
    }
    if (!(a_poly(d, "K") == target)) {
        throw std::logic_error("realized polynomial does not match the target");
    }
    return d;
}

} // namespace knotfib
