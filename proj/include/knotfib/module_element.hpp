#pragma once

#include <map>
#include <string>

namespace knotfib {

// Finitely supported integer combination of canonical class keys.
// No zero coefficients are ever stored, so equality is map equality.
template <typename Key>
class ModuleElement {
public:
    ModuleElement() = default;

    void add(const Key& k, long long c) {
        if (c == 0) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    long long coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? 0 : it->second;
    }

    bool zero() const { return terms_.empty(); }
    const std::map<Key, long long>& terms() const { return terms_; }

    ModuleElement& operator+=(const ModuleElement& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    ModuleElement& operator-=(const ModuleElement& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    ModuleElement& operator*=(long long s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend ModuleElement operator+(ModuleElement x, const ModuleElement& y) {
        x += y;
        return x;
    }
    friend ModuleElement operator-(ModuleElement x, const ModuleElement& y) {
        x -= y;
        return x;
    }
    friend ModuleElement operator*(ModuleElement x, long long s) {
        x *= s;
        return x;
    }
    ModuleElement operator-() const {
        ModuleElement r = *this;
        r *= -1;
        return r;
    }

    bool operator==(const ModuleElement&) const = default;

    // "2*(a) + (a b)"; terms in key order; "0" when empty.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (first) {
                if (c < 0) out += '-';
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            long long m = c < 0 ? -c : c;
            if (m != 1) out += std::to_string(m) + "*";
            out += display(k.str());
        }
        return out;
    }

private:
    static std::string display(const std::string& s) {
        if (!s.empty() && s.front() == '(') return s;
        return "(" + s + ")";
    }

    std::map<Key, long long> terms_;
};

} // namespace knotfib
