#pragma once

#include <cstdint>
#include <optional>

#include "wha/element.hpp"

namespace wha {

// Oriented relation lhs -> rhs with lhs deglex-greater than every rhs word.
struct RewriteRule {
    Word lhs;
    Element rhs;
};

// A terminating rewrite system over one alphabet, with all critical pairs of
// overlap degree <= complete_up_to known to resolve. Immutable once built.
class RewriteSystem {
public:
    RewriteSystem() = default;
    RewriteSystem(int alphabet_size, int degree_bound);

    void add_rule(RewriteRule r); // used during construction/completion
    // Completion retires rules whose lhs became reducible; retired rules no
    // longer participate in matching.
    void deactivate(size_t idx) { active_[idx] = false; }
    bool is_active(size_t idx) const { return active_[idx]; }

    const std::vector<RewriteRule>& rules() const { return rules_; }
    int degree_bound() const { return degree_bound_; }
    int complete_up_to() const { return complete_up_to_; }
    void set_complete_up_to(int d) { complete_up_to_ = d; }

    bool is_irreducible(const Word& w) const;
    // First (position, rule) pair scanning positions left to right.
    std::optional<std::pair<size_t, size_t>> find_redex(const Word& w) const;
    // Every (position, rule) pair, in scan order.
    std::vector<std::pair<size_t, size_t>> all_redexes(const Word& w) const;

    // Apply the rule at the given position once.
    Element rewrite_at(const Word& w, size_t pos, size_t rule_idx, const Scalar& coeff) const;

    // Canonical normal form (reduce the deglex-largest word first). Throws
    // DegreeOverflow when a word exceeds complete_up_to.
    Element nf(const Element& e) const;
    Element nf_word(const Word& w) const;
    // Normal form with seeded random redex choices; agrees with nf on a
    // confluent system.
    Element nf_random(const Word& w, std::uint64_t seed) const;

    // All irreducible words of degree <= max_degree, deglex order.
    std::vector<Word> normal_words(int max_degree) const;

    // Does lhs occur as a subword ending at the last position of w?
    bool redex_at_end(const Word& w) const;

private:
    std::vector<RewriteRule> rules_;
    std::vector<bool> active_;
    std::vector<std::vector<size_t>> buckets_; // rules by first lhs letter
    int degree_bound_ = 0;
    int complete_up_to_ = 0;
    bool matches_at(const Word& w, size_t pos, const Word& lhs) const;
};

// Product followed by normal form; throws DegreeOverflow if any concatenated
// word exceeds the confirmed degree.
Element multiply(const Element& a, const Element& b, const RewriteSystem& rs);

struct CompletionStats {
    int seed_rules = 0;
    int derived_rules = 0;
    int pairs_processed = 0;
};

// Bounded Knuth-Bendix completion: resolves every critical pair whose overlap
// word has degree <= degree_bound, adding oriented rules as needed.
// Deterministic given the seed ordering. Throws CompletionError (naming the
// offending overlap) if the iteration cap is hit.
RewriteSystem complete(int alphabet_size, std::vector<RewriteRule> seeds, int degree_bound,
                       CompletionStats* stats = nullptr);

// Deterministic pseudo-random word for property tests.
Word random_word(const Alphabet& alph, int max_degree, std::uint64_t seed);

} // namespace wha
