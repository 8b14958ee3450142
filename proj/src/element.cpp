#include "wha/element.hpp"

#include <sstream>

namespace wha {

void Element::add_term(const Word& w, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

Element Element::operator-() const
{
    Element r;
    for (const auto& [w, c] : terms)
        r.terms.emplace(w, -c);
    return r;
}

Element& Element::operator+=(const Element& o)
{
    for (const auto& [w, c] : o.terms)
        add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o)
{
    for (const auto& [w, c] : o.terms)
        add_term(w, -c);
    return *this;
}

Element operator*(const Element& a, const Element& b)
{
    Element r;
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms)
            r.add_term(concat(wa, wb), ca * cb);
    return r;
}

Element operator*(const Scalar& c, const Element& e)
{
    Element r;
    for (const auto& [w, cw] : e.terms)
        r.add_term(w, c * cw);
    return r;
}

bool Element::is_scalar() const
{
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
}

Scalar Element::scalar_value() const
{
    if (terms.empty())
        return Scalar(0);
    if (!is_scalar())
        throw Error("element is not a scalar");
    return terms.begin()->second;
}

std::string Element::str(const Alphabet& alph) const
{
    if (terms.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms) {
        std::string cs = c.str();
        // A leading '-' may only be pulled out of a single-monomial coefficient.
        bool neg = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos;
        if (neg)
            cs = cs.substr(1);
        if (first) {
            if (neg)
                out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        bool needs_parens = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
        if (w.empty()) {
            out << (needs_parens ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            out << word_str(w, alph);
        } else {
            out << (needs_parens ? "(" + cs + ")" : cs) << "*" << word_str(w, alph);
        }
    }
    return out.str();
}

} // namespace wha
