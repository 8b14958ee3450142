#pragma once

#include <cstdint>

#include "wha/presentation.hpp"
#include "wha/report.hpp"

namespace wha {

// A coalgebra-side view of a presentation: optionally the opposite coproduct
// and/or a replacement antipode table (used for solved weak antipodes).
struct HopfView {
    const Presentation* p;
    bool opposite = false;
    const std::map<int, Element>* antipode_override = nullptr;

    HopfView(const Presentation& pres) : p(&pres) {}
    HopfView(const Presentation& pres, bool opp, const std::map<int, Element>* t)
        : p(&pres), opposite(opp), antipode_override(t)
    {
    }
    const std::map<int, Element>& antipode_table() const
    {
        return antipode_override ? *antipode_override : p->maps.antipode;
    }
};

// Multiplicative extension of the coproduct table; Delta(1) = 1 (x) 1.
TensorElement apply_coproduct(const Element& e, const HopfView& v);
// (Delta (x) id) Delta, arity 3.
TensorElement apply_coproduct3(const Element& e, const HopfView& v);
// Multiplicative extension of the counit.
Scalar apply_counit(const Element& e, const Presentation& p);
// Anti-multiplicative extension of the antipode table.
Element apply_antipode(const Element& e, const HopfView& v);

enum class ConvOp { id, antipode, unit_counit };

// Convolution chain m o (f1 (x) ... (x) fk) o Delta^(k-1), k = 2 or 3.
Element convolve(const HopfView& v, const std::vector<ConvOp>& ops, const Element& e);

struct AxiomCheckOptions {
    bool bialgebra = true;      // Delta/eps homomorphism, coassociativity, counit laws
    bool antipode = true;       // anti-homomorphism + (wa1)/(wa2) or (antipode1)/(antipode2)
    int samples = 10;           // seeded degree-2 monomials for convolution checks
    std::uint64_t seed = 1;
};

// Per-axiom pass/fail with a witness on failure.
std::vector<CheckResult> verify_axioms(const Presentation& p, const AxiomCheckOptions& opts);

// Solve (wa1)/(wa2) on each generator over single-monomial candidates
// c * word, |word| <= 3, c = +-q^k. Throws if some generator admits no
// solution in the search space.
std::map<int, Element> solve_weak_antipode(const Presentation& p, bool opposite);

// Criterion: (S * id)(K) = eps(K) 1 would need a left inverse of K; show the
// linear system sum_w c_w nf(w * K) = 1 over normal words of degree
// <= max_degree has no solution.
CheckResult check_no_genuine_antipode(const Presentation& p, const std::string& cartan_name,
                                      int max_degree);

} // namespace wha
