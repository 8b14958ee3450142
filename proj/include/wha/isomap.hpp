#pragma once

#include "wha/hopf.hpp"

namespace wha {

// A generator assignment extended multiplicatively/linearly to an algebra
// map between presented algebras.
struct GenMap {
    std::string name;
    PresPtr src;
    PresPtr dst;
    std::map<int, Element> assignment; // src generator id -> dst element
    bool opposite_target = false;      // weak-Hopf checks read the target
                                       // coproduct through sigma
};

Element apply_map(const GenMap& m, const Element& e);

// nf(image(lhs) - image(rhs)) = 0 for every defining relation of the source.
std::vector<CheckResult> check_algebra_hom(const GenMap& m);

// Round trips inverse(map(x)) = x and map(inverse(y)) = y on all generators.
std::vector<CheckResult> check_inverse_pair(const GenMap& m, const GenMap& inverse);

// Conditions (psi x psi) Delta = Delta' psi, eps = eps' psi, psi T = T' psi
// on generators; for an opposite target coproduct T' is solved from the weak
// antipode axioms rather than copied.
std::vector<CheckResult> check_weak_hopf_iso(const GenMap& m);

// Classical generators map onto the J-slice: E_i -> J E_i, K_i -> J K_i,
// Kinv_i -> J Kb_i, 1 -> J; checks all classical relations and that J is the
// slice unit.
std::vector<CheckResult> check_slice_iso(const Presentation& classical,
                                         const Presentation& weak);

// Coassociativity defect of Delta' = (map x map) o Delta_src o map^-1 on the
// target generators; pass means a nonzero defect was found (with witness).
CheckResult witness_noncoassoc(const GenMap& m, const GenMap& inverse, bool expect_defect);

// The lifted Dynkin reversal rho_d : wsl(n,d) -> wsl(n, r(d)).
GenMap rho_lift(int n, long d);
// The lifted Cartan involution omega_d : wsl(n,d) -> wsl(n, w(d)).
GenMap omega_lift(int n, long d);
// The direct-sum-decomposition isomorphism wsl(3,10) -> wsl(3,9) and its
// printed inverse.
GenMap decomposition_psi();
GenMap decomposition_psi_inverse();

} // namespace wha
