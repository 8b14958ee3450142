#include "wha/tensor.hpp"

#include <functional>
#include <sstream>

namespace wha {

void TensorElement::add_term(const std::vector<Word>& slots, const Scalar& c)
{
    if (static_cast<int>(slots.size()) != arity)
        throw Error("tensor term arity mismatch");
    if (c.is_zero())
        return;
    auto [it, fresh] = terms.emplace(slots, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

TensorElement TensorElement::operator-() const
{
    TensorElement r(arity);
    for (const auto& [s, c] : terms)
        r.terms.emplace(s, -c);
    return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& o)
{
    if (arity != o.arity)
        throw Error("tensor arity mismatch");
    for (const auto& [s, c] : o.terms)
        add_term(s, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o)
{
    if (arity != o.arity)
        throw Error("tensor arity mismatch");
    for (const auto& [s, c] : o.terms)
        add_term(s, -c);
    return *this;
}

TensorElement operator*(const Scalar& c, const TensorElement& t)
{
    TensorElement r(t.arity);
    for (const auto& [s, tc] : t.terms)
        r.add_term(s, c * tc);
    return r;
}

std::string TensorElement::str(const Alphabet& alph) const
{
    if (terms.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [s, c] : terms) {
        if (!first)
            out << " + ";
        first = false;
        std::string cs = c.str();
        if (cs != "1")
            out << "(" << cs << ")*";
        for (size_t i = 0; i < s.size(); ++i) {
            if (i)
                out << " (x) ";
            out << word_str(s[i], alph);
        }
    }
    return out.str();
}

TensorElement tensor_of(const Element& a, const Element& b, const RewriteSystem& rs)
{
    TensorElement r(2);
    Element na = rs.nf(a), nb = rs.nf(b);
    for (const auto& [wa, ca] : na.terms)
        for (const auto& [wb, cb] : nb.terms)
            r.add_term({wa, wb}, ca * cb);
    return r;
}

TensorElement tensor_of(const Element& a, const Element& b, const Element& c,
                        const RewriteSystem& rs)
{
    TensorElement r(3);
    Element na = rs.nf(a), nb = rs.nf(b), nc = rs.nf(c);
    for (const auto& [wa, ca] : na.terms)
        for (const auto& [wb, cb] : nb.terms)
            for (const auto& [wc, cc] : nc.terms)
                r.add_term({wa, wb, wc}, ca * cb * cc);
    return r;
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b,
                              const RewriteSystem& rs)
{
    if (a.arity != b.arity)
        throw Error("tensor arity mismatch in product");
    TensorElement r(a.arity);
    for (const auto& [sa, ca] : a.terms) {
        for (const auto& [sb, cb] : b.terms) {
            // Slotwise products, each normalized; distribute over the
            // resulting terms of every slot.
            std::vector<Element> slot_products(static_cast<size_t>(a.arity));
            for (int k = 0; k < a.arity; ++k)
                slot_products[static_cast<size_t>(k)] =
                    multiply(Element::of_word(sa[static_cast<size_t>(k)]),
                             Element::of_word(sb[static_cast<size_t>(k)]), rs);
            // Cartesian product over slots.
            std::vector<Word> slots(static_cast<size_t>(a.arity));
            std::function<void(int, Scalar)> rec = [&](int k, Scalar acc) {
                if (k == a.arity) {
                    r.add_term(slots, acc);
                    return;
                }
                for (const auto& [w, c] : slot_products[static_cast<size_t>(k)].terms) {
                    slots[static_cast<size_t>(k)] = w;
                    rec(k + 1, acc * c);
                }
            };
            rec(0, ca * cb);
        }
    }
    return r;
}

TensorElement flip(const TensorElement& a)
{
    if (a.arity != 2)
        throw Error("flip requires arity 2");
    TensorElement r(2);
    for (const auto& [s, c] : a.terms)
        r.add_term({s[1], s[0]}, c);
    return r;
}

TensorElement embed(const TensorElement& a, int pos1, int pos2, const Word& unit_word)
{
    if (a.arity != 2)
        throw Error("embed requires an arity-2 element");
    if (pos1 < 1 || pos2 > 3 || pos1 >= pos2)
        throw Error("embed positions must satisfy 1 <= pos1 < pos2 <= 3");
    int free_slot = 6 - pos1 - pos2; // {1,2,3} minus the used pair
    TensorElement r(3);
    for (const auto& [s, c] : a.terms) {
        std::vector<Word> slots(3);
        slots[static_cast<size_t>(pos1 - 1)] = s[0];
        slots[static_cast<size_t>(pos2 - 1)] = s[1];
        slots[static_cast<size_t>(free_slot - 1)] = unit_word;
        r.add_term(slots, c);
    }
    return r;
}

} // namespace wha
