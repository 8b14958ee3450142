#pragma once

#include <memory>

#include "wha/tensor.hpp"

namespace wha {

// Structure maps given on generators: the coproduct and counit extend
// multiplicatively, the (weak) antipode anti-multiplicatively.
struct StructureMaps {
    enum class Kind { weak, genuine };
    std::map<int, TensorElement> coproduct; // generator id -> arity-2 element
    std::map<int, Scalar> counit;
    std::map<int, Element> antipode;
    Kind kind = Kind::weak;
};

// A presented algebra: alphabet in monomial order, the defining relations as
// stated, the completed rewrite system, and the coalgebra tables.
struct Presentation {
    std::string name;
    Alphabet alphabet;
    char variable = 'q';
    std::vector<std::pair<Element, Element>> defining_relations;
    RewriteSystem rs;
    StructureMaps maps;
    std::optional<Word> j_word; // normal form of K_i*Kb_i, when present

    Element gen(const std::string& n) const { return Element::of_word({alphabet.id_of(n)}); }
    Element unit() const { return Element::one(); }
    Element j() const
    {
        if (!j_word)
            throw Error("presentation '" + name + "' has no J element");
        return Element::of_word(*j_word);
    }

    // One relation per line, `lhs = rhs`; round-trips through the parser.
    std::string relations_text() const;
};

using PresPtr = std::shared_ptr<const Presentation>;

} // namespace wha
