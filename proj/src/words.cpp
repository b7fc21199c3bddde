#include "knotfib/words.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>
#include <sstream>

#include "knotfib/errors.hpp"

namespace knotfib {

namespace {

using LetterVec = std::vector<Letter>;

LetterVec free_reduce(const LetterVec& raw) {
    LetterVec out;
    out.reserve(raw.size());
    for (Letter l : raw) {
        if (!out.empty() && out.back() == -l) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

bool letters_lex_less(const LetterVec& x, const LetterVec& y) {
    std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        int a = letter_key(x[i]), b = letter_key(y[i]);
        if (a != b) return a < b;
    }
    return x.size() < y.size();
}

// Tie-break encoding for a pair: letter keys of a (+1 to clear the
// separator value), then 0, then letter keys of b.
std::vector<int> encode_pair(const LetterVec& a, const LetterVec& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size() + 1);
    for (Letter l : a) out.push_back(letter_key(l) + 1);
    out.push_back(0);
    for (Letter l : b) out.push_back(letter_key(l) + 1);
    return out;
}

LetterVec conj_vec(const LetterVec& v, Letter g) {
    LetterVec raw;
    raw.reserve(v.size() + 2);
    raw.push_back(g);
    raw.insert(raw.end(), v.begin(), v.end());
    raw.push_back(-g);
    return free_reduce(raw);
}

// Minimal representative of (a, b) under simultaneous conjugation only.
// Trim the shared conjugating wrap, then search the plateau reachable by
// single-letter simultaneous conjugations that never increase total length;
// such a path to the global minimum always exists because the total
// conjugated length is convex along geodesics of the Cayley tree.
std::pair<LetterVec, LetterVec> canon_pair(LetterVec a, LetterVec b) {
    while (a.size() >= 2 && b.size() >= 2 && a.front() == b.front() &&
           a.back() == -a.front() && b.back() == -b.front()) {
        a = LetterVec(a.begin() + 1, a.end() - 1);
        b = LetterVec(b.begin() + 1, b.end() - 1);
    }

    using State = std::pair<LetterVec, LetterVec>;
    auto size_of = [](const State& s) { return s.first.size() + s.second.size(); };

    State best{std::move(a), std::move(b)};
    std::vector<int> best_code = encode_pair(best.first, best.second);
    std::set<std::vector<int>> seen{best_code};
    std::queue<State> work;
    work.push(best);

    while (!work.empty()) {
        State cur = std::move(work.front());
        work.pop();
        std::size_t cur_size = size_of(cur);

        // Conjugating by a generator absent from both words strictly grows
        // them, so the plateau only needs the letters present.
        std::set<int> gens;
        for (Letter l : cur.first) gens.insert(l > 0 ? l : -l);
        for (Letter l : cur.second) gens.insert(l > 0 ? l : -l);

        for (int k : gens) {
            for (Letter g : {Letter(k), Letter(-k)}) {
                State nxt{conj_vec(cur.first, g), conj_vec(cur.second, g)};
                if (size_of(nxt) > cur_size) continue;
                std::vector<int> code = encode_pair(nxt.first, nxt.second);
                if (!seen.insert(code).second) continue;
                if (size_of(nxt) < size_of(best) ||
                    (size_of(nxt) == size_of(best) && code < best_code)) {
                    best = nxt;
                    best_code = std::move(code);
                }
                work.push(std::move(nxt));
            }
        }
    }
    return {best.first, best.second};
}

bool pair_less(const std::pair<LetterVec, LetterVec>& x,
               const std::pair<LetterVec, LetterVec>& y) {
    std::size_t sx = x.first.size() + x.second.size();
    std::size_t sy = y.first.size() + y.second.size();
    if (sx != sy) return sx < sy;
    return encode_pair(x.first, x.second) < encode_pair(y.first, y.second);
}

} // namespace

int letter_key(Letter l) {
    int k = l > 0 ? l : -l;
    return 2 * (k - 1) + (l < 0 ? 1 : 0);
}

std::string letter_name(Letter l) {
    int k = l > 0 ? l : -l;
    std::string base =
        k <= 26 ? std::string(1, char('a' + k - 1)) : "g" + std::to_string(k);
    return l < 0 ? base + "^-1" : base;
}

Letter parse_letter(const std::string& token) {
    if (token.empty()) return 0;
    std::size_t pos = 0;
    int index = 0;
    if (token[0] == 'g' && token.size() > 1 &&
        std::isdigit(static_cast<unsigned char>(token[1]))) {
        pos = 1;
        while (pos < token.size() &&
               std::isdigit(static_cast<unsigned char>(token[pos]))) {
            index = index * 10 + (token[pos] - '0');
            if (index > 1000000) return 0;
            ++pos;
        }
    } else if (token[0] >= 'a' && token[0] <= 'z') {
        index = token[0] - 'a' + 1;
        pos = 1;
    } else {
        return 0;
    }
    if (index < 1) return 0;
    if (pos == token.size()) return index;
    if (token.compare(pos, std::string::npos, "^-1") == 0) return -index;
    return 0;
}

Word::Word(std::vector<Letter> letters) : letters_(free_reduce(letters)) {}

Word Word::parse(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.size() == 1 && tokens[0] == "e") return Word();
    std::vector<Letter> letters;
    letters.reserve(tokens.size());
    for (const std::string& t : tokens) {
        Letter l = parse_letter(t);
        if (l == 0) throw Error("bad-argument", "not a letter token: " + t);
        letters.push_back(l);
    }
    return Word(std::move(letters));
}

Word Word::inverse() const {
    std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
    for (Letter& l : rev) l = -l;
    return Word(std::move(rev));
}

std::string Word::str() const {
    if (letters_.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += letter_name(letters_[i]);
    }
    return out;
}

bool word_less(const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() < v.size();
    return letters_lex_less(u.letters(), v.letters());
}

Word concat(const Word& u, const Word& v) {
    std::vector<Letter> raw = u.letters();
    raw.insert(raw.end(), v.letters().begin(), v.letters().end());
    return Word(std::move(raw));
}

Word conjugate(const Word& w, Letter g) { return Word(conj_vec(w.letters(), g)); }

Word conjugate(const Word& w, const Word& g) {
    return concat(concat(g, w), g.inverse());
}

Word reduce(const std::vector<Letter>& raw, int rank) {
    for (Letter l : raw) {
        int k = l > 0 ? l : -l;
        if (k < 1 || k > rank) {
            throw Error("rank-violation",
                        "generator index " + std::to_string(k) +
                            " outside surface rank " + std::to_string(rank));
        }
    }
    return Word(raw);
}

bool AbelianVector::zero() const {
    return std::all_of(e.begin(), e.end(), [](long long v) { return v == 0; });
}

std::string AbelianVector::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(e[i]);
    }
    return out + ")";
}

AbelianVector abelianize(const Word& w, int rank) {
    AbelianVector v{std::vector<long long>(static_cast<std::size_t>(rank), 0)};
    for (Letter l : w.letters()) {
        int k = l > 0 ? l : -l;
        if (k > rank) {
            throw Error("rank-violation",
                        "generator index " + std::to_string(k) +
                            " outside surface rank " + std::to_string(rank));
        }
        v.e[static_cast<std::size_t>(k - 1)] += l > 0 ? 1 : -1;
    }
    return v;
}

ConjClass::ConjClass(const Word& w) {
    LetterVec v = w.letters();
    while (v.size() >= 2 && v.front() == -v.back()) {
        v.pop_back();
        v.erase(v.begin());
    }
    if (v.size() >= 2) {
        LetterVec best = v;
        LetterVec rot = v;
        for (std::size_t r = 1; r < v.size(); ++r) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (letters_lex_less(rot, best)) best = rot;
        }
        v = best;
    }
    word_ = Word(std::move(v));
}

EightClass::EightClass(const Word& a, const Word& b, bool ordered)
    : ordered_(ordered) {
    auto p = canon_pair(a.letters(), b.letters());
    if (!ordered) {
        auto q = canon_pair(b.letters(), a.letters());
        if (pair_less(q, p)) p = q;
    }
    a_ = Word(std::move(p.first));
    b_ = Word(std::move(p.second));
}

std::string EightClass::str() const {
    return "(" + a_.str() + ", " + b_.str() + ")";
}

bool EightClass::operator<(const EightClass& o) const {
    if (ordered_ != o.ordered_) return ordered_ < o.ordered_;
    std::size_t s = a_.size() + b_.size();
    std::size_t t = o.a_.size() + o.b_.size();
    if (s != t) return s < t;
    return encode_pair(a_.letters(), b_.letters()) <
           encode_pair(o.a_.letters(), o.b_.letters());
}

} // namespace knotfib
