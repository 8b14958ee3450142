#pragma once

#include <map>

#include "wha/scalar.hpp"
#include "wha/word.hpp"

namespace wha {

// Finite Scalar-linear combination of words. Zero coefficients are never
// stored; two elements are equal iff their term maps are identical.
class Element {
public:
    std::map<Word, Scalar, WordLess> terms;

    Element() = default;

    static Element zero() { return {}; }
    static Element one() { return of_word({}); }
    static Element of_word(const Word& w)
    {
        Element e;
        e.terms.emplace(w, Scalar(1));
        return e;
    }
    static Element monomial(const Scalar& c, const Word& w)
    {
        Element e;
        e.add_term(w, c);
        return e;
    }
    static Element constant(const Scalar& c) { return monomial(c, {}); }

    bool is_zero() const { return terms.empty(); }
    int degree() const { return terms.empty() ? -1 : static_cast<int>(terms.rbegin()->first.size()); }

    void add_term(const Word& w, const Scalar& c);

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    // Free (concatenation) product; rewriting is applied separately.
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const Scalar& c, const Element& e);

    bool operator==(const Element& o) const { return terms == o.terms; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    // Is this a pure coefficient (multiple of the empty word)?
    bool is_scalar() const;
    Scalar scalar_value() const; // 0 for the zero element

    std::string str(const Alphabet& alph) const;
};

} // namespace wha
