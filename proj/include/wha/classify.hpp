#pragma once

#include <vector>

#include "wha/word.hpp"

namespace wha::classify {

// Binary digit vector (d_0,...,d_{2n-3}) of d, most significant digit first,
// so d = sum_k digits[k] * 2^(2n-3-k).
struct MixtureIndex {
    int n;
    long d;
    std::vector<int> digits;
};

MixtureIndex mixture(int n, long d);
long mixture_value(const std::vector<int>& digits);

// Digit 1 -> type 1, digit 0 -> type 2, over (E_1..E_{n-1}, F_1..F_{n-1}).
std::vector<GenType> decode(int n, long d);

// Swap the E-half and F-half of the digit string (Cartan involution shadow).
long w_map(int n, long d);
// Reverse each half in place (Dynkin automorphism shadow).
long r_map(int n, long d);

// Sorted closure of d under r and w; size 1, 2 or 4.
std::vector<long> orbit_of(int n, long d);

struct DegenerateCensus {
    long case1 = 0;      // w(d) = d
    long case2 = 0;      // r(d) = d
    long case3 = 0;      // r(d) = w(d)
    long triple = 0;     // all three at once
    long union_count = 0;
    long complement = 0; // full orbits of size 4
};

struct OrbitReport {
    int n = 0;
    std::vector<std::vector<long>> orbits; // sorted by minimum representative
    long count = 0;
    DegenerateCensus census;
};

// Practical cap n <= 12 (2^22 mixtures).
OrbitReport enumerate_orbits(int n);

// Closed count 2^(n-4) * (7 + (-1)^n + 2^n).
long z_closed(int n);

// Independent count via fixed points of the four group elements.
long burnside_count(int n);

} // namespace wha::classify
