#pragma once

#include <string>
#include <vector>

namespace knotfib {

// Signed generator letter: +k is the k-th generator (k >= 1), -k its inverse.
using Letter = int;

// Position in the fixed global order g1 < g1^-1 < g2 < g2^-1 < ...
int letter_key(Letter l);

// "a".."z" for generators 1..26, "g<k>" beyond; "^-1" suffix on inverses.
std::string letter_name(Letter l);

// Inverse of letter_name; also accepts "g<k>" forms for small k.
// Returns 0 when the token is not a letter.
Letter parse_letter(const std::string& token);

// Freely reduced word in the free group. Reduction happens on construction.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    // Whitespace-separated letter tokens. The sole token "e" is the empty
    // word; in longer inputs "e" reads as generator 5 like any letter.
    static Word parse(const std::string& text);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const;
    std::string str() const; // "a b^-1 a"; "e" when empty

    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

// Shortlex: length first, then the global letter order.
bool word_less(const Word& u, const Word& v);

Word concat(const Word& u, const Word& v);
Word conjugate(const Word& w, Letter g);      // g w g^-1
Word conjugate(const Word& w, const Word& g); // g w g^-1

// Reduction that also checks every generator index against the surface rank.
Word reduce(const std::vector<Letter>& raw, int rank);

// Exponent-sum vector, one entry per generator.
struct AbelianVector {
    std::vector<long long> e;

    bool zero() const;
    std::string str() const; // "(1, -2)"

    bool operator==(const AbelianVector&) const = default;
    bool operator<(const AbelianVector& o) const { return e < o.e; }
};

AbelianVector abelianize(const Word& w, int rank);

// Conjugacy class of a loop: cyclically reduced, minimal rotation.
class ConjClass {
public:
    ConjClass() = default;
    explicit ConjClass(const Word& w);

    const Word& word() const { return word_; }
    bool trivial() const { return word_.empty(); }
    std::string str() const { return word_.str(); }

    bool operator==(const ConjClass&) const = default;
    bool operator<(const ConjClass& o) const { return word_less(word_, o.word_); }

private:
    Word word_;
};

// Pair of loops up to simultaneous conjugation, and up to swap when not
// ordered. The stored pair has minimal total length in its orbit, ties
// broken lexicographically on the concatenation a # b.
class EightClass {
public:
    EightClass() = default;
    EightClass(const Word& a, const Word& b, bool ordered);

    const Word& a() const { return a_; }
    const Word& b() const { return b_; }
    bool ordered() const { return ordered_; }
    std::string str() const; // "(a, a a)"

    bool operator==(const EightClass&) const = default;
    bool operator<(const EightClass& o) const;

private:
    Word a_, b_;
    bool ordered_ = false;
};

} // namespace knotfib
