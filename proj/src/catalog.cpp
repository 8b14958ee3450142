#include "wha/catalog.hpp"

#include <cstdlib>
#include <sstream>

#include "wha/classify.hpp"

namespace wha {

int cartan_entry(int i, int j)
{
    if (i == j)
        return 2;
    if (i == j + 1 || j == i + 1)
        return -1;
    return 0;
}

std::string Presentation::relations_text() const
{
    std::ostringstream out;
    for (const auto& [lhs, rhs] : defining_relations)
        out << lhs.str(alphabet) << " = " << rhs.str(alphabet) << "\n";
    return out.str();
}

namespace {

// WHA_DEGREE_BOUND overrides the per-rank defaults (8 for n <= 3, 6 above).
int degree_bound_for(int n)
{
    if (const char* env = std::getenv("WHA_DEGREE_BOUND"))
        return std::max(4, std::atoi(env));
    return n <= 3 ? 8 : 6;
}

Element w1(int a) { return Element::of_word({a}); }
Element w2(int a, int b) { return Element::of_word({a, b}); }
Element w3(int a, int b, int c) { return Element::of_word({a, b, c}); }

struct WslLayout {
    int n;
    int F(int i) const { return i - 1; }
    int Kb(int i) const { return (n - 1) + i - 1; }
    int K(int i) const { return 2 * (n - 1) + i - 1; }
    int E(int i) const { return 3 * (n - 1) + i - 1; }
};

// Rules shared by every mixture: Cartan commutation, the J identifications
// and absorptions, E/F commutation with scalars q^{+-a_ij}, the EF relation,
// Serre and distant commutation.
void seed_common_wsl(const WslLayout& L, const std::vector<GenType>& etype,
                     const std::vector<GenType>& ftype, std::vector<RewriteRule>& rules)
{
    const int n = L.n;
    const Scalar q = Scalar::variable('q');
    const Scalar qserre = q + var_pow('q', -1);
    const Scalar c = (q - var_pow('q', -1)).inverse();

    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            rules.push_back({{L.K(j), L.K(i)}, w2(L.K(i), L.K(j))});
            rules.push_back({{L.Kb(j), L.Kb(i)}, w2(L.Kb(i), L.Kb(j))});
        }
    }
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            rules.push_back({{L.K(i), L.Kb(j)}, w2(L.Kb(j), L.K(i))});
    for (int i = 2; i < n; ++i)
        rules.push_back({{L.Kb(i), L.K(i)}, w2(L.Kb(1), L.K(1))});
    for (int j = 1; j < n; ++j) {
        rules.push_back({{L.Kb(1), L.K(1), L.K(j)}, w1(L.K(j))});
        rules.push_back({{L.Kb(1), L.Kb(j), L.K(1)}, w1(L.Kb(j))});
    }

    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            int a = cartan_entry(i, j);
            rules.push_back({{L.E(i), L.K(j)}, var_pow('q', -a) * w2(L.K(j), L.E(i))});
            rules.push_back({{L.E(i), L.Kb(j)}, var_pow('q', a) * w2(L.Kb(j), L.E(i))});
            rules.push_back({{L.K(j), L.F(i)}, var_pow('q', -a) * w2(L.F(i), L.K(j))});
            rules.push_back({{L.Kb(j), L.F(i)}, var_pow('q', a) * w2(L.F(i), L.Kb(j))});
        }
    }

    // Type-2 generators additionally absorb J (the two derived commutation
    // rules above hold for both types).
    for (int i = 1; i < n; ++i) {
        if (etype[static_cast<size_t>(i - 1)] == GenType::type2)
            rules.push_back({{L.Kb(1), L.K(1), L.E(i)}, w1(L.E(i))});
        if (ftype[static_cast<size_t>(i - 1)] == GenType::type2)
            rules.push_back({{L.F(i), L.Kb(1), L.K(1)}, w1(L.F(i))});
    }

    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            if (i == j) {
                Element rhs = w2(L.F(i), L.E(i));
                rhs += c * w1(L.K(i));
                rhs -= c * w1(L.Kb(i));
                rules.push_back({{L.E(i), L.F(i)}, rhs});
            } else {
                rules.push_back({{L.E(i), L.F(j)}, w2(L.F(j), L.E(i))});
            }
        }
    }

    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            if (j == i + 1) {
                // largest word of E_i^2 E_j - (q+q^-1) E_i E_j E_i + E_j E_i^2
                Element rhs = qserre * w3(L.E(i), L.E(j), L.E(i)) - w3(L.E(i), L.E(i), L.E(j));
                rules.push_back({{L.E(j), L.E(i), L.E(i)}, rhs});
                Element rhsf = qserre * w3(L.F(i), L.F(j), L.F(i)) - w3(L.F(i), L.F(i), L.F(j));
                rules.push_back({{L.F(j), L.F(i), L.F(i)}, rhsf});
            } else if (j == i - 1) {
                Element rhs = qserre * w3(L.E(i), L.E(j), L.E(i)) - w3(L.E(j), L.E(i), L.E(i));
                rules.push_back({{L.E(i), L.E(i), L.E(j)}, rhs});
                Element rhsf = qserre * w3(L.F(i), L.F(j), L.F(i)) - w3(L.F(j), L.F(i), L.F(i));
                rules.push_back({{L.F(i), L.F(i), L.F(j)}, rhsf});
            } else if (j > i + 1) {
                rules.push_back({{L.E(j), L.E(i)}, w2(L.E(i), L.E(j))});
                rules.push_back({{L.F(j), L.F(i)}, w2(L.F(i), L.F(j))});
            }
        }
    }
}

void wsl_defining_relations(const WslLayout& L, const std::vector<GenType>& etype,
                            const std::vector<GenType>& ftype, Presentation& p)
{
    const int n = L.n;
    const Scalar q = Scalar::variable('q');
    const Scalar qserre = q + var_pow('q', -1);
    const Scalar c = (q - var_pow('q', -1)).inverse();
    auto& rel = p.defining_relations;

    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            rel.push_back({w2(L.K(i), L.K(j)), w2(L.K(j), L.K(i))});
            rel.push_back({w2(L.Kb(i), L.Kb(j)), w2(L.Kb(j), L.Kb(i))});
        }
    }
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            rel.push_back({w2(L.K(i), L.Kb(j)), w2(L.Kb(j), L.K(i))});
    for (int i = 2; i < n; ++i)
        rel.push_back({w2(L.K(i), L.Kb(i)), w2(L.K(1), L.Kb(1))});
    for (int j = 1; j < n; ++j) {
        rel.push_back({w1(L.K(1)) * w1(L.Kb(1)) * w1(L.K(j)), w1(L.K(j))});
        rel.push_back({w1(L.K(1)) * w1(L.Kb(1)) * w1(L.Kb(j)), w1(L.Kb(j))});
    }
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            int a = cartan_entry(i, j);
            if (etype[static_cast<size_t>(i - 1)] == GenType::type1) {
                rel.push_back({w2(L.K(j), L.E(i)), var_pow('q', a) * w2(L.E(i), L.K(j))});
                rel.push_back({w2(L.E(i), L.Kb(j)), var_pow('q', a) * w2(L.Kb(j), L.E(i))});
            } else {
                rel.push_back({w3(L.K(j), L.E(i), L.Kb(j)), var_pow('q', a) * w1(L.E(i))});
            }
            if (ftype[static_cast<size_t>(i - 1)] == GenType::type1) {
                rel.push_back({w2(L.K(j), L.F(i)), var_pow('q', -a) * w2(L.F(i), L.K(j))});
                rel.push_back({w2(L.F(i), L.Kb(j)), var_pow('q', -a) * w2(L.Kb(j), L.F(i))});
            } else {
                rel.push_back({w3(L.K(j), L.F(i), L.Kb(j)), var_pow('q', -a) * w1(L.F(i))});
            }
        }
    }
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            Element lhs = w2(L.E(i), L.F(j)) - w2(L.F(j), L.E(i));
            Element rhs;
            if (i == j)
                rhs = c * w1(L.K(i)) - c * w1(L.Kb(i));
            rel.push_back({lhs, rhs});
        }
    }
    for (int i = 1; i < n; ++i) {
        for (int dj : {-1, 1}) {
            int j = i + dj;
            if (j < 1 || j >= n)
                continue;
            Element e = w3(L.E(i), L.E(i), L.E(j)) - qserre * w3(L.E(i), L.E(j), L.E(i)) +
                        w3(L.E(j), L.E(i), L.E(i));
            rel.push_back({e, Element::zero()});
            Element f = w3(L.F(i), L.F(i), L.F(j)) - qserre * w3(L.F(i), L.F(j), L.F(i)) +
                        w3(L.F(j), L.F(i), L.F(i));
            rel.push_back({f, Element::zero()});
        }
        for (int j = i + 2; j < n; ++j) {
            rel.push_back({w2(L.E(i), L.E(j)), w2(L.E(j), L.E(i))});
            rel.push_back({w2(L.F(i), L.F(j)), w2(L.F(j), L.F(i))});
        }
    }
}

} // namespace

PresPtr build_wsl(int n, long d)
{
    if (n < 2)
        throw Error("build_wsl requires n >= 2");
    auto types = classify::decode(n, d); // E_1..E_{n-1}, F_1..F_{n-1}
    std::vector<GenType> etype(types.begin(), types.begin() + (n - 1));
    std::vector<GenType> ftype(types.begin() + (n - 1), types.end());

    auto p = std::make_shared<Presentation>();
    p->name = "wsl:" + std::to_string(n) + ":" + std::to_string(d);
    p->variable = 'q';
    WslLayout L{n};
    for (int i = 1; i < n; ++i)
        p->alphabet.add({"F" + std::to_string(i), Sort::lowering, i,
                         ftype[static_cast<size_t>(i - 1)]});
    for (int i = 1; i < n; ++i)
        p->alphabet.add({"Kb" + std::to_string(i), Sort::cartan_bar, i, GenType::na});
    for (int i = 1; i < n; ++i)
        p->alphabet.add({"K" + std::to_string(i), Sort::cartan, i, GenType::na});
    for (int i = 1; i < n; ++i)
        p->alphabet.add({"E" + std::to_string(i), Sort::raising, i,
                         etype[static_cast<size_t>(i - 1)]});

    std::vector<RewriteRule> rules;
    seed_common_wsl(L, etype, ftype, rules);
    int bound = degree_bound_for(n);
    p->rs = complete(p->alphabet.size(), std::move(rules), bound);
    p->j_word = p->rs.nf_word({L.K(1), L.Kb(1)}).terms.begin()->first;

    wsl_defining_relations(L, etype, ftype, *p);

    // Structure maps.
    Element unit = Element::one();
    Element jel = Element::of_word(*p->j_word);
    for (int i = 1; i < n; ++i) {
        int e = L.E(i), f = L.F(i), k = L.K(i), kb = L.Kb(i);
        p->maps.coproduct[k] = tensor_of(w1(k), w1(k), p->rs);
        p->maps.coproduct[kb] = tensor_of(w1(kb), w1(kb), p->rs);
        bool e1 = etype[static_cast<size_t>(i - 1)] == GenType::type1;
        bool f1 = ftype[static_cast<size_t>(i - 1)] == GenType::type1;
        p->maps.coproduct[e] =
            tensor_of(e1 ? unit : jel, w1(e), p->rs) + tensor_of(w1(e), w1(k), p->rs);
        p->maps.coproduct[f] =
            tensor_of(w1(f), f1 ? unit : jel, p->rs) + tensor_of(w1(kb), w1(f), p->rs);
        p->maps.counit[k] = Scalar(1);
        p->maps.counit[kb] = Scalar(1);
        p->maps.counit[e] = Scalar(0);
        p->maps.counit[f] = Scalar(0);
        p->maps.antipode[k] = w1(kb);
        p->maps.antipode[kb] = w1(k);
        p->maps.antipode[e] = p->rs.nf(-w2(e, kb));
        p->maps.antipode[f] = p->rs.nf(-w2(k, f));
    }
    p->maps.kind = StructureMaps::Kind::weak;
    return p;
}

PresPtr build_uqsl_classical(int n)
{
    if (n < 2)
        throw Error("build_uqsl_classical requires n >= 2");
    auto p = std::make_shared<Presentation>();
    p->name = "uqsl:" + std::to_string(n);
    p->variable = 'q';
    // Same block order as the weak case, with Kinv in place of Kb.
    auto F = [&](int i) { return i - 1; };
    auto Ki = [&](int i) { return (n - 1) + i - 1; };
    auto K = [&](int i) { return 2 * (n - 1) + i - 1; };
    auto E = [&](int i) { return 3 * (n - 1) + i - 1; };
    for (int i = 1; i < n; ++i)
        p->alphabet.add({"F" + std::to_string(i), Sort::lowering, i, GenType::type1});
    for (int i = 1; i < n; ++i)
        p->alphabet.add({"Kinv" + std::to_string(i), Sort::cartan_bar, i, GenType::na});
    for (int i = 1; i < n; ++i)
        p->alphabet.add({"K" + std::to_string(i), Sort::cartan, i, GenType::na});
    for (int i = 1; i < n; ++i)
        p->alphabet.add({"E" + std::to_string(i), Sort::raising, i, GenType::type1});

    const Scalar q = Scalar::variable('q');
    const Scalar qserre = q + var_pow('q', -1);
    const Scalar c = (q - var_pow('q', -1)).inverse();

    std::vector<RewriteRule> rules;
    for (int i = 1; i < n; ++i) {
        rules.push_back({{K(i), Ki(i)}, Element::one()});
        rules.push_back({{Ki(i), K(i)}, Element::one()});
        for (int j = i + 1; j < n; ++j) {
            rules.push_back({{K(j), K(i)}, w2(K(i), K(j))});
            rules.push_back({{Ki(j), Ki(i)}, w2(Ki(i), Ki(j))});
        }
        for (int j = 1; j < n; ++j)
            if (i != j)
                rules.push_back({{K(i), Ki(j)}, w2(Ki(j), K(i))});
    }
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            int a = cartan_entry(i, j);
            rules.push_back({{E(i), K(j)}, var_pow('q', -a) * w2(K(j), E(i))});
            rules.push_back({{E(i), Ki(j)}, var_pow('q', a) * w2(Ki(j), E(i))});
            rules.push_back({{K(j), F(i)}, var_pow('q', -a) * w2(F(i), K(j))});
            rules.push_back({{Ki(j), F(i)}, var_pow('q', a) * w2(F(i), Ki(j))});
            if (i == j) {
                Element rhs = w2(F(i), E(i));
                rhs += c * w1(K(i));
                rhs -= c * w1(Ki(i));
                rules.push_back({{E(i), F(i)}, rhs});
            } else {
                rules.push_back({{E(i), F(j)}, w2(F(j), E(i))});
            }
            if (j == i + 1) {
                rules.push_back({{E(j), E(i), E(i)},
                                 qserre * w3(E(i), E(j), E(i)) - w3(E(i), E(i), E(j))});
                rules.push_back({{F(j), F(i), F(i)},
                                 qserre * w3(F(i), F(j), F(i)) - w3(F(i), F(i), F(j))});
            } else if (j == i - 1) {
                rules.push_back({{E(i), E(i), E(j)},
                                 qserre * w3(E(i), E(j), E(i)) - w3(E(j), E(i), E(i))});
                rules.push_back({{F(i), F(i), F(j)},
                                 qserre * w3(F(i), F(j), F(i)) - w3(F(j), F(i), F(i))});
            } else if (j > i + 1) {
                rules.push_back({{E(j), E(i)}, w2(E(i), E(j))});
                rules.push_back({{F(j), F(i)}, w2(F(i), F(j))});
            }
        }
    }
    int bound = degree_bound_for(n);
    p->rs = complete(p->alphabet.size(), std::move(rules), bound);

    auto& rel = p->defining_relations;
    for (int i = 1; i < n; ++i) {
        rel.push_back({w2(K(i), Ki(i)), Element::one()});
        rel.push_back({w2(Ki(i), K(i)), Element::one()});
        for (int j = 1; j < n; ++j) {
            int a = cartan_entry(i, j);
            rel.push_back({w3(K(j), E(i), Ki(j)), var_pow('q', a) * w1(E(i))});
            rel.push_back({w3(K(j), F(i), Ki(j)), var_pow('q', -a) * w1(F(i))});
            Element lhs = w2(E(i), F(j)) - w2(F(j), E(i));
            Element rhs;
            if (i == j)
                rhs = c * w1(K(i)) - c * w1(Ki(i));
            rel.push_back({lhs, rhs});
        }
        for (int dj : {-1, 1}) {
            int j = i + dj;
            if (j < 1 || j >= n)
                continue;
            rel.push_back({w3(E(i), E(i), E(j)) - qserre * w3(E(i), E(j), E(i)) +
                               w3(E(j), E(i), E(i)),
                           Element::zero()});
            rel.push_back({w3(F(i), F(i), F(j)) - qserre * w3(F(i), F(j), F(i)) +
                               w3(F(j), F(i), F(i)),
                           Element::zero()});
        }
        for (int j = i + 2; j < n; ++j) {
            rel.push_back({w2(E(i), E(j)), w2(E(j), E(i))});
            rel.push_back({w2(F(i), F(j)), w2(F(j), F(i))});
        }
    }

    for (int i = 1; i < n; ++i) {
        p->maps.coproduct[K(i)] = tensor_of(w1(K(i)), w1(K(i)), p->rs);
        p->maps.coproduct[Ki(i)] = tensor_of(w1(Ki(i)), w1(Ki(i)), p->rs);
        p->maps.coproduct[E(i)] =
            tensor_of(w1(E(i)), w1(K(i)), p->rs) + tensor_of(Element::one(), w1(E(i)), p->rs);
        p->maps.coproduct[F(i)] =
            tensor_of(w1(F(i)), Element::one(), p->rs) + tensor_of(w1(Ki(i)), w1(F(i)), p->rs);
        p->maps.counit[K(i)] = Scalar(1);
        p->maps.counit[Ki(i)] = Scalar(1);
        p->maps.counit[E(i)] = Scalar(0);
        p->maps.counit[F(i)] = Scalar(0);
        p->maps.antipode[K(i)] = w1(Ki(i));
        p->maps.antipode[Ki(i)] = w1(K(i));
        p->maps.antipode[E(i)] = p->rs.nf(-w2(E(i), Ki(i)));
        p->maps.antipode[F(i)] = p->rs.nf(-w2(K(i), F(i)));
    }
    p->maps.kind = StructureMaps::Kind::genuine;
    return p;
}

PresPtr build_sweedler(SweedlerKind kind)
{
    auto p = std::make_shared<Presentation>();
    p->variable = 'a';
    const bool upper = kind == SweedlerKind::H;
    int g = p->alphabet.add({upper ? "G" : "g", Sort::other, 0, GenType::na});
    GenType xtype = kind == SweedlerKind::H2 ? GenType::type2
                    : kind == SweedlerKind::H1 ? GenType::type1
                                               : GenType::na;
    int x = p->alphabet.add({upper ? "X" : "x", Sort::other, 0, xtype});

    std::vector<RewriteRule> rules;
    auto& rel = p->defining_relations;
    switch (kind) {
    case SweedlerKind::H:
        p->name = "sweedler:H";
        rules.push_back({{g, g}, Element::one()});
        rules.push_back({{x, g}, -w2(g, x)});
        rules.push_back({{x, x}, Element::zero()});
        rel.push_back({w2(g, g), Element::one()});
        rel.push_back({w2(g, x), -w2(x, g)});
        rel.push_back({w2(x, x), Element::zero()});
        break;
    case SweedlerKind::H1:
        p->name = "sweedler:H1";
        rules.push_back({{g, g, g}, w1(g)});
        rules.push_back({{x, g}, -w2(g, x)});
        rules.push_back({{x, x}, Element::zero()});
        rel.push_back({w3(g, g, g), w1(g)});
        rel.push_back({w2(g, x), -w2(x, g)});
        rel.push_back({w2(x, x), Element::zero()});
        break;
    case SweedlerKind::H2:
        p->name = "sweedler:H2";
        rules.push_back({{g, g, g}, w1(g)});
        rules.push_back({{g, x, g}, -w1(x)});
        rules.push_back({{x, x}, Element::zero()});
        rel.push_back({w3(g, g, g), w1(g)});
        rel.push_back({w3(g, x, g), -w1(x)});
        rel.push_back({w2(x, x), Element::zero()});
        break;
    }
    p->rs = complete(p->alphabet.size(), std::move(rules), 8);

    p->maps.coproduct[g] = tensor_of(w1(g), w1(g), p->rs);
    if (kind == SweedlerKind::H2)
        p->maps.coproduct[x] =
            tensor_of(w1(x), w1(g), p->rs) + tensor_of(w2(g, g), w1(x), p->rs);
    else
        p->maps.coproduct[x] =
            tensor_of(w1(x), w1(g), p->rs) + tensor_of(Element::one(), w1(x), p->rs);
    p->maps.counit[g] = Scalar(1);
    p->maps.counit[x] = Scalar(0);
    p->maps.antipode[g] = w1(g);
    p->maps.antipode[x] = w2(g, x);
    p->maps.kind = kind == SweedlerKind::H ? StructureMaps::Kind::genuine
                                           : StructureMaps::Kind::weak;
    return p;
}

PresPtr get_presentation(const std::string& name)
{
    static std::map<std::string, PresPtr> cache;
    auto it = cache.find(name);
    if (it != cache.end())
        return it->second;

    PresPtr p;
    std::istringstream in(name);
    std::string head;
    std::getline(in, head, ':');
    if (head == "wsl") {
        std::string ns, ds;
        std::getline(in, ns, ':');
        std::getline(in, ds, ':');
        if (ns.empty() || ds.empty())
            throw Error("expected wsl:<n>:<d>");
        p = build_wsl(std::stoi(ns), std::stol(ds));
    } else if (head == "uqsl") {
        std::string ns;
        std::getline(in, ns, ':');
        if (ns.empty())
            throw Error("expected uqsl:<n>");
        p = build_uqsl_classical(std::stoi(ns));
    } else if (head == "sweedler") {
        std::string ks;
        std::getline(in, ks, ':');
        if (ks == "H")
            p = build_sweedler(SweedlerKind::H);
        else if (ks == "H1")
            p = build_sweedler(SweedlerKind::H1);
        else if (ks == "H2")
            p = build_sweedler(SweedlerKind::H2);
        else
            throw Error("expected sweedler:H|H1|H2");
    } else {
        throw Error("unknown algebra name '" + name + "'");
    }
    cache[name] = p;
    return p;
}

} // namespace wha
