#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wha/errors.hpp"

namespace wha {

enum class Sort { raising, lowering, cartan, cartan_bar, other };
enum class GenType { type1, type2, na };

struct GeneratorSymbol {
    std::string name;
    Sort sort = Sort::other;
    int index = 0; // 0 = no index
    GenType gen_type = GenType::na;
};

// Generator alphabet. Insertion order IS the monomial order: generator ids
// ascend with rank, so deglex on words reduces to (length, lex on ids).
class Alphabet {
public:
    int add(GeneratorSymbol g)
    {
        if (by_name_.count(g.name))
            throw Error("duplicate generator name '" + g.name + "'");
        int id = static_cast<int>(gens_.size());
        by_name_[g.name] = id;
        gens_.push_back(std::move(g));
        return id;
    }
    int size() const { return static_cast<int>(gens_.size()); }
    const GeneratorSymbol& operator[](int id) const { return gens_.at(static_cast<size_t>(id)); }
    std::optional<int> find(const std::string& name) const
    {
        auto it = by_name_.find(name);
        if (it == by_name_.end())
            return std::nullopt;
        return it->second;
    }
    int id_of(const std::string& name) const
    {
        auto id = find(name);
        if (!id)
            throw Error("unknown generator '" + name + "'");
        return *id;
    }

private:
    std::vector<GeneratorSymbol> gens_;
    std::map<std::string, int> by_name_;
};

// A word in generator ids; the empty word is the algebra unit.
using Word = std::vector<int>;

// Degree-lexicographic order.
inline bool word_less(const Word& a, const Word& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

inline Word concat(const Word& a, const Word& b)
{
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

inline std::string word_str(const Word& w, const Alphabet& alph)
{
    if (w.empty())
        return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += "*";
        s += alph[w[i]].name;
    }
    return s;
}

} // namespace wha
