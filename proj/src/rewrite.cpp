#include "wha/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

namespace wha {

RewriteSystem::RewriteSystem(int alphabet_size, int degree_bound)
    : buckets_(static_cast<size_t>(alphabet_size)), degree_bound_(degree_bound),
      complete_up_to_(degree_bound)
{
}

void RewriteSystem::add_rule(RewriteRule r)
{
    if (r.lhs.empty())
        throw Error("rewrite rule with empty left-hand side");
    for (const auto& [w, c] : r.rhs.terms)
        if (!word_less(w, r.lhs))
            throw Error("rewrite rule is not deglex-decreasing");
    size_t idx = rules_.size();
    size_t first = static_cast<size_t>(r.lhs.front());
    if (first >= buckets_.size())
        buckets_.resize(first + 1);
    buckets_[first].push_back(idx);
    rules_.push_back(std::move(r));
    active_.push_back(true);
}

bool RewriteSystem::matches_at(const Word& w, size_t pos, const Word& lhs) const
{
    if (pos + lhs.size() > w.size())
        return false;
    return std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<long>(pos));
}

std::optional<std::pair<size_t, size_t>> RewriteSystem::find_redex(const Word& w) const
{
    for (size_t pos = 0; pos < w.size(); ++pos) {
        for (size_t ri : buckets_[static_cast<size_t>(w[pos])])
            if (active_[ri] && matches_at(w, pos, rules_[ri].lhs))
                return std::make_pair(pos, ri);
    }
    return std::nullopt;
}

std::vector<std::pair<size_t, size_t>> RewriteSystem::all_redexes(const Word& w) const
{
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t pos = 0; pos < w.size(); ++pos)
        for (size_t ri : buckets_[static_cast<size_t>(w[pos])])
            if (active_[ri] && matches_at(w, pos, rules_[ri].lhs))
                out.emplace_back(pos, ri);
    return out;
}

bool RewriteSystem::is_irreducible(const Word& w) const { return !find_redex(w).has_value(); }

bool RewriteSystem::redex_at_end(const Word& w) const
{
    for (size_t ri = 0; ri < rules_.size(); ++ri) {
        if (!active_[ri])
            continue;
        const auto& r = rules_[ri];
        if (r.lhs.size() > w.size())
            continue;
        size_t pos = w.size() - r.lhs.size();
        if (matches_at(w, pos, r.lhs))
            return true;
    }
    return false;
}

Element RewriteSystem::rewrite_at(const Word& w, size_t pos, size_t rule_idx,
                                  const Scalar& coeff) const
{
    const RewriteRule& r = rules_[rule_idx];
    Element out;
    for (const auto& [rw, rc] : r.rhs.terms) {
        Word nw;
        nw.reserve(w.size() - r.lhs.size() + rw.size());
        nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(pos));
        nw.insert(nw.end(), rw.begin(), rw.end());
        nw.insert(nw.end(), w.begin() + static_cast<long>(pos + r.lhs.size()), w.end());
        out.add_term(nw, coeff * rc);
    }
    return out;
}

Element RewriteSystem::nf(const Element& e) const
{
    for (const auto& [w, c] : e.terms) {
        (void)c;
        if (static_cast<int>(w.size()) > complete_up_to_) {
            throw DegreeOverflow("word of degree " + std::to_string(w.size()) +
                                 " exceeds confirmed degree " + std::to_string(complete_up_to_));
        }
    }
    // Work map keyed by word; always reduce the deglex-largest pending word,
    // so every distinct word is expanded at most once.
    std::map<Word, Scalar, WordLess> work(e.terms.begin(), e.terms.end());
    Element result;
    while (!work.empty()) {
        auto it = std::prev(work.end());
        Word w = it->first;
        Scalar c = it->second;
        work.erase(it);
        if (c.is_zero())
            continue;
        auto redex = find_redex(w);
        if (!redex) {
            result.add_term(w, c);
            continue;
        }
        Element step = rewrite_at(w, redex->first, redex->second, c);
        for (const auto& [nw, nc] : step.terms) {
            auto [jt, fresh] = work.emplace(nw, nc);
            if (!fresh) {
                jt->second += nc;
                if (jt->second.is_zero())
                    work.erase(jt);
            }
        }
    }
    return result;
}

Element RewriteSystem::nf_word(const Word& w) const { return nf(Element::of_word(w)); }

Element RewriteSystem::nf_random(const Word& w, std::uint64_t seed) const
{
    if (static_cast<int>(w.size()) > complete_up_to_)
        throw DegreeOverflow("word exceeds confirmed degree");
    std::mt19937_64 rng(seed);
    Element cur = Element::of_word(w);
    while (true) {
        // Pick a random reducible term, then a random redex in it.
        std::vector<const Word*> reducible;
        for (const auto& [tw, tc] : cur.terms) {
            (void)tc;
            if (!is_irreducible(tw))
                reducible.push_back(&tw);
        }
        if (reducible.empty())
            return cur;
        const Word target = *reducible[rng() % reducible.size()];
        auto redexes = all_redexes(target);
        auto [pos, ri] = redexes[rng() % redexes.size()];
        Scalar c = cur.terms.at(target);
        cur.terms.erase(target);
        cur += rewrite_at(target, pos, ri, c);
    }
}

std::vector<Word> RewriteSystem::normal_words(int max_degree) const
{
    std::vector<Word> out{{}};
    std::vector<Word> level{{}};
    int letters = static_cast<int>(buckets_.size());
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<Word> next;
        for (const Word& w : level) {
            for (int g = 0; g < letters; ++g) {
                Word nw = w;
                nw.push_back(g);
                // w is irreducible, so only a redex ending at the new last
                // letter can appear.
                if (!redex_at_end(nw))
                    next.push_back(std::move(nw));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

Element multiply(const Element& a, const Element& b, const RewriteSystem& rs)
{
    Element prod;
    for (const auto& [wa, ca] : a.terms) {
        for (const auto& [wb, cb] : b.terms) {
            if (static_cast<int>(wa.size() + wb.size()) > rs.complete_up_to()) {
                throw DegreeOverflow("product degree " + std::to_string(wa.size() + wb.size()) +
                                     " exceeds confirmed degree " +
                                     std::to_string(rs.complete_up_to()));
            }
            prod.add_term(concat(wa, wb), ca * cb);
        }
    }
    return rs.nf(prod);
}

namespace {

struct PendingPair {
    size_t i, j;   // rule indices: suffix of lhs_i overlaps prefix of lhs_j,
    size_t param;  // overlap length, or containment position (i contains j)
    bool contain;  // true: lhs_j occurs inside lhs_i at position param
};

std::string describe_overlap(const Word& w)
{
    std::ostringstream out;
    out << "[";
    for (size_t k = 0; k < w.size(); ++k) {
        if (k)
            out << " ";
        out << w[k];
    }
    out << "]";
    return out.str();
}

} // namespace

RewriteSystem complete(int alphabet_size, std::vector<RewriteRule> seeds, int degree_bound,
                       CompletionStats* stats)
{
    RewriteSystem rs(alphabet_size, degree_bound);
    std::deque<Element> equations;
    std::deque<PendingPair> pairs;

    for (auto& s : seeds)
        equations.push_back(Element::of_word(s.lhs) - s.rhs);
    if (stats)
        stats->seed_rules = static_cast<int>(seeds.size());

    auto enqueue_pairs_with = [&](size_t k) {
        const Word& a = rs.rules()[k].lhs;
        for (size_t j = 0; j < rs.rules().size(); ++j) {
            if (!rs.is_active(j))
                continue;
            const Word& b = rs.rules()[j].lhs;
            // Proper overlaps in both directions (k before j, j before k).
            for (int dir = 0; dir < 2; ++dir) {
                const Word& x = dir == 0 ? a : b;
                const Word& y = dir == 0 ? b : a;
                size_t xi = dir == 0 ? k : j;
                size_t yi = dir == 0 ? j : k;
                if (dir == 1 && j == k)
                    break; // self-overlaps enumerated once
                for (size_t o = 1; o < std::min(x.size(), y.size()); ++o) {
                    if (std::equal(x.end() - static_cast<long>(o), x.end(), y.begin()) &&
                        static_cast<int>(x.size() + y.size() - o) <= degree_bound)
                        pairs.push_back({xi, yi, o, false});
                }
            }
            if (j == k)
                continue;
            // Containments.
            if (b.size() < a.size()) {
                for (size_t p = 0; p + b.size() <= a.size(); ++p)
                    if (std::equal(b.begin(), b.end(), a.begin() + static_cast<long>(p)))
                        pairs.push_back({k, j, p, true});
            } else if (a.size() < b.size()) {
                for (size_t p = 0; p + a.size() <= b.size(); ++p)
                    if (std::equal(a.begin(), a.end(), b.begin() + static_cast<long>(p)))
                        pairs.push_back({j, k, p, true});
            } else if (a == b) {
                pairs.push_back({k, j, 0, true});
            }
        }
    };

    const int kMaxRules = 4000;
    const long kMaxIterations = 4000000;
    long iterations = 0;
    std::string last_overlap = "(none)";

    while (!equations.empty() || !pairs.empty()) {
        if (++iterations > kMaxIterations || static_cast<int>(rs.rules().size()) > kMaxRules)
            throw CompletionError("completion did not stabilize; last overlap " + last_overlap);
        if (!equations.empty()) {
            Element e = rs.nf(equations.front());
            equations.pop_front();
            if (e.is_zero())
                continue;
            // Orient: deglex-largest word becomes the new lhs.
            auto lead = std::prev(e.terms.end());
            Word lhs = lead->first;
            Scalar lc = lead->second;
            Element rhs;
            for (const auto& [w, c] : e.terms)
                if (w != lhs)
                    rhs.add_term(w, -(c / lc));
            if (lhs.empty())
                throw CompletionError("relation forces 1 = 0 (inconsistent presentation)");
            rs.add_rule({lhs, std::move(rhs)});
            size_t k = rs.rules().size() - 1;
            if (stats)
                stats->derived_rules++;
            // Knuth-Bendix simplification: retire rules whose lhs became
            // reducible, re-queueing their content as equations.
            for (size_t j = 0; j + 1 < rs.rules().size(); ++j) {
                if (!rs.is_active(j))
                    continue;
                const Word& lj = rs.rules()[j].lhs;
                if (lj.size() < lhs.size())
                    continue;
                for (size_t p = 0; p + lhs.size() <= lj.size(); ++p) {
                    if (std::equal(lhs.begin(), lhs.end(), lj.begin() + static_cast<long>(p))) {
                        rs.deactivate(j);
                        equations.push_back(Element::of_word(lj) - rs.rules()[j].rhs);
                        break;
                    }
                }
            }
            enqueue_pairs_with(k);
            continue;
        }
        PendingPair p = pairs.front();
        pairs.pop_front();
        if (!rs.is_active(p.i) || !rs.is_active(p.j))
            continue;
        if (stats)
            stats->pairs_processed++;
        const RewriteRule& ri = rs.rules()[p.i];
        const RewriteRule& rj = rs.rules()[p.j];
        Element left, right;
        Word overlap;
        if (!p.contain) {
            // overlap word: lhs_i with lhs_j glued over a length-p.param fit
            Word tail(rj.lhs.begin() + static_cast<long>(p.param), rj.lhs.end());
            Word head(ri.lhs.begin(), ri.lhs.end() - static_cast<long>(p.param));
            overlap = concat(ri.lhs, tail);
            left = ri.rhs * Element::of_word(tail);
            right = Element::of_word(head) * rj.rhs;
        } else {
            overlap = ri.lhs;
            Word pre(ri.lhs.begin(), ri.lhs.begin() + static_cast<long>(p.param));
            Word post(ri.lhs.begin() + static_cast<long>(p.param + rj.lhs.size()), ri.lhs.end());
            left = ri.rhs;
            right = Element::of_word(pre) * rj.rhs * Element::of_word(post);
        }
        last_overlap = describe_overlap(overlap);
        Element diff = rs.nf(left - right);
        if (!diff.is_zero())
            equations.push_back(std::move(diff));
    }

    // Canonical final form: active rules sorted by lhs, rhs fully reduced.
    std::vector<RewriteRule> final_rules;
    for (size_t i = 0; i < rs.rules().size(); ++i)
        if (rs.is_active(i))
            final_rules.push_back(rs.rules()[i]);
    std::sort(final_rules.begin(), final_rules.end(),
              [](const RewriteRule& a, const RewriteRule& b) { return word_less(a.lhs, b.lhs); });
    RewriteSystem out(alphabet_size, degree_bound);
    for (auto& r : final_rules) {
        r.rhs = rs.nf(r.rhs);
        out.add_rule(std::move(r));
    }
    out.set_complete_up_to(degree_bound);
    return out;
}

Word random_word(const Alphabet& alph, int max_degree, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    if (max_degree <= 0 || alph.size() == 0)
        return {};
    size_t len = static_cast<size_t>(rng() % (static_cast<std::uint64_t>(max_degree) + 1));
    Word w(len);
    for (auto& g : w)
        g = static_cast<int>(rng() % static_cast<std::uint64_t>(alph.size()));
    return w;
}

} // namespace wha
