#include "wha/classify.hpp"

#include <algorithm>
#include <set>

namespace wha::classify {

namespace {

void check_range(int n, long d)
{
    if (n < 2)
        throw Error("mixture index requires n >= 2");
    long total = 1L << (2 * (n - 1));
    if (d < 0 || d >= total)
        throw Error("mixture index " + std::to_string(d) + " out of range for n = " +
                    std::to_string(n));
}

} // namespace

MixtureIndex mixture(int n, long d)
{
    check_range(n, d);
    int len = 2 * (n - 1);
    std::vector<int> digits(static_cast<size_t>(len));
    for (int k = 0; k < len; ++k)
        digits[static_cast<size_t>(k)] = static_cast<int>((d >> (len - 1 - k)) & 1);
    return {n, d, digits};
}

long mixture_value(const std::vector<int>& digits)
{
    long d = 0;
    for (int b : digits)
        d = (d << 1) | b;
    return d;
}

std::vector<GenType> decode(int n, long d)
{
    auto m = mixture(n, d);
    std::vector<GenType> types;
    types.reserve(m.digits.size());
    for (int b : m.digits)
        types.push_back(b ? GenType::type1 : GenType::type2);
    return types;
}

long w_map(int n, long d)
{
    auto m = mixture(n, d);
    int h = n - 1;
    std::vector<int> out(m.digits.begin() + h, m.digits.end());
    out.insert(out.end(), m.digits.begin(), m.digits.begin() + h);
    return mixture_value(out);
}

long r_map(int n, long d)
{
    auto m = mixture(n, d);
    int h = n - 1;
    std::reverse(m.digits.begin(), m.digits.begin() + h);
    std::reverse(m.digits.begin() + h, m.digits.end());
    return mixture_value(m.digits);
}

std::vector<long> orbit_of(int n, long d)
{
    std::set<long> seen;
    std::vector<long> frontier{d};
    while (!frontier.empty()) {
        long x = frontier.back();
        frontier.pop_back();
        if (!seen.insert(x).second)
            continue;
        frontier.push_back(w_map(n, x));
        frontier.push_back(r_map(n, x));
    }
    return {seen.begin(), seen.end()};
}

OrbitReport enumerate_orbits(int n)
{
    if (n < 2 || n > 12)
        throw Error("orbit enumeration supported for 2 <= n <= 12");
    OrbitReport rep;
    rep.n = n;
    long total = 1L << (2 * (n - 1));
    std::vector<bool> visited(static_cast<size_t>(total), false);
    for (long d = 0; d < total; ++d) {
        if (visited[static_cast<size_t>(d)])
            continue;
        auto orb = orbit_of(n, d);
        for (long x : orb)
            visited[static_cast<size_t>(x)] = true;
        rep.orbits.push_back(std::move(orb));
    }
    rep.count = static_cast<long>(rep.orbits.size());

    auto& c = rep.census;
    for (long d = 0; d < total; ++d) {
        bool f1 = w_map(n, d) == d;
        bool f2 = r_map(n, d) == d;
        bool f3 = r_map(n, d) == w_map(n, d);
        if (f1)
            c.case1++;
        if (f2)
            c.case2++;
        if (f3)
            c.case3++;
        if (f1 && f2 && f3)
            c.triple++;
        if (f1 || f2 || f3)
            c.union_count++;
        else
            c.complement++;
    }
    return rep;
}

long z_closed(int n)
{
    if (n < 2)
        throw Error("z_closed requires n >= 2");
    long base = 7 + (n % 2 == 0 ? 1 : -1) + (1L << n);
    if (n >= 4)
        return base << (n - 4);
    long div = 1L << (4 - n);
    if (base % div != 0)
        throw Error("closed formula is not integral"); // cannot happen for n >= 2
    return base / div;
}

long burnside_count(int n)
{
    long total = 1L << (2 * (n - 1));
    long fix_w = 0, fix_r = 0, fix_rw = 0;
    for (long d = 0; d < total; ++d) {
        if (w_map(n, d) == d)
            fix_w++;
        if (r_map(n, d) == d)
            fix_r++;
        if (r_map(n, w_map(n, d)) == d)
            fix_rw++;
    }
    return (total + fix_w + fix_r + fix_rw) / 4;
}

} // namespace wha::classify
