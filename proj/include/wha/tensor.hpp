#pragma once

#include "wha/rewrite.hpp"

namespace wha {

struct SlotsLess {
    bool operator()(const std::vector<Word>& a, const std::vector<Word>& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i])
                return word_less(a[i], b[i]);
        }
        return false;
    }
};

// Finite linear combination of k-fold word tensors, k = 2 or 3. Slot words
// are kept in normal form by the operations that produce them.
class TensorElement {
public:
    int arity = 2;
    std::map<std::vector<Word>, Scalar, SlotsLess> terms;

    TensorElement() = default;
    explicit TensorElement(int k) : arity(k)
    {
        if (k != 2 && k != 3)
            throw Error("tensor arity must be 2 or 3");
    }

    bool is_zero() const { return terms.empty(); }
    void add_term(const std::vector<Word>& slots, const Scalar& c);

    TensorElement operator-() const;
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const Scalar& c, const TensorElement& t);

    bool operator==(const TensorElement& o) const
    {
        return arity == o.arity && terms == o.terms;
    }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    std::string str(const Alphabet& alph) const;
};

// a (x) b and a (x) b (x) c, bilinear in the factors; slot words are
// normalized with the given system.
TensorElement tensor_of(const Element& a, const Element& b, const RewriteSystem& rs);
TensorElement tensor_of(const Element& a, const Element& b, const Element& c,
                        const RewriteSystem& rs);

// Slotwise product; both operands must share the arity.
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b,
                              const RewriteSystem& rs);

// Exchange the two slots of an arity-2 element.
TensorElement flip(const TensorElement& a);

// Place an arity-2 element into two of three slots (1-based, pos1 < pos2),
// with unit_word filling the remaining slot.
TensorElement embed(const TensorElement& a, int pos1, int pos2, const Word& unit_word);

// Apply a linear map (defined termwise on slot words) to one slot.
template <typename F>
TensorElement map_slot(const TensorElement& t, int slot, F&& word_to_element)
{
    TensorElement out(t.arity);
    for (const auto& [slots, c] : t.terms) {
        Element image = word_to_element(slots[static_cast<size_t>(slot)]);
        for (const auto& [w, wc] : image.terms) {
            auto ns = slots;
            ns[static_cast<size_t>(slot)] = w;
            out.add_term(ns, c * wc);
        }
    }
    return out;
}

} // namespace wha
