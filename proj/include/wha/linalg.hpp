#pragma once

#include <optional>
#include <vector>

#include "wha/scalar.hpp"

namespace wha {

using ScalarVec = std::vector<Scalar>;
using ScalarMat = std::vector<ScalarVec>;

// In-place reduced row echelon form; returns the rank.
int rref(ScalarMat& m);

// Any solution of A x = b, or nullopt when inconsistent.
std::optional<ScalarVec> linsolve(const ScalarMat& A, const ScalarVec& b);

// Basis of the right nullspace of A.
std::vector<ScalarVec> nullspace(const ScalarMat& A);

} // namespace wha
