#pragma once

#include "wha/presentation.hpp"

namespace wha {

// Weak extension w sl^d_q(n): the 2(n-1) binary digits of d assign type 1 or
// type 2 to E_1..E_{n-1}, F_1..F_{n-1} (most significant digit first).
PresPtr build_wsl(int n, long d);

// Classical U_q[sl_n] with invertible K_i and a genuine antipode.
PresPtr build_uqsl_classical(int n);

enum class SweedlerKind { H, H1, H2 };
PresPtr build_sweedler(SweedlerKind kind);

// Cached lookup by CLI name: "wsl:<n>:<d>", "uqsl:<n>", "sweedler:H|H1|H2".
PresPtr get_presentation(const std::string& name);

int cartan_entry(int i, int j); // a_ij for sl(n), indices 1-based

} // namespace wha
