#pragma once

#include "wha/hopf.hpp"
#include "wha/linalg.hpp"

namespace wha {

// Exact structure constants of a finite-dimensional presented algebra over
// the basis of irreducible words.
struct StructureConstants {
    const Presentation* pres = nullptr;
    std::vector<Word> basis;                   // deglex order, basis[0] = 1
    std::map<Word, int, WordLess> index;
    std::vector<std::vector<ScalarVec>> table; // table[i][j] = coords of b_i b_j

    int dim() const { return static_cast<int>(basis.size()); }
    ScalarVec coords(const Element& e) const;  // throws outside the span
    Element from_coords(const ScalarVec& v) const;
    ScalarVec mul(const ScalarVec& a, const ScalarVec& b) const;
};

// Fixed-point closure under multiplication by generators; throws
// DimensionError (naming the runaway word) past the cap.
StructureConstants close_basis(const Presentation& p, int cap = 64);

struct IdempotentCheck {
    bool ok = false;
    std::string detail;
};
IdempotentCheck check_central_idempotent(const Element& e, const StructureConstants& sc);

struct IdempotentSplit {
    Element idempotent;
    std::vector<Element> zero_part; // basis of (1-e)A
    std::vector<Element> one_part;  // basis of eA
};
IdempotentSplit peirce_split(const Element& e, const StructureConstants& sc);

struct LinearIsoCheck {
    bool ok = false;
    std::string witness;
};
// Multiplicativity and bijectivity of the linear extension of a basis
// assignment (pairs of domain element, image element).
LinearIsoCheck check_linear_iso(const std::vector<std::pair<Element, Element>>& assignment,
                                const StructureConstants& A, const StructureConstants& B);

// Dimension, split, slice-isomorphism and coalgebra-compatibility checks for
// H, H_1, H_2.
std::vector<CheckResult> verify_sweedler_suite();

// R-matrix of H_1: intertwining for g and x, printed and conventional fusion
// identities, regularity, and a non-invertibility witness. alpha may be the
// symbolic variable or a rational value.
std::vector<CheckResult> verify_rmatrix(const Scalar& alpha);

// G = 1 + g - g^2, X = (1 + alpha g) g x generate a Sweedler copy inside H_1.
std::vector<CheckResult> verify_embedded_sweedler();

} // namespace wha
