#include "wha/polynomial.hpp"

#include <sstream>

namespace wha {

namespace {

const Rational kZero(0);

BigInt gcd_big(BigInt a, BigInt b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Integer-polynomial helpers for the subresultant PRS. Coefficient index i
// multiplies x^i; no trailing zeros.
using ZPoly = std::vector<BigInt>;

void ztrim(ZPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

BigInt zcontent(const ZPoly& p)
{
    BigInt g = 0;
    for (const auto& c : p)
        g = gcd_big(g, c);
    return g;
}

ZPoly zprimitive(ZPoly p)
{
    BigInt g = zcontent(p);
    if (g == 0)
        return p;
    if (p.back() < 0)
        g = -g;
    for (auto& c : p)
        c /= g;
    return p;
}

ZPoly zscale(ZPoly p, const BigInt& c)
{
    for (auto& x : p)
        x *= c;
    return p;
}

ZPoly zdiv_exact(ZPoly p, const BigInt& c)
{
    for (auto& x : p)
        x /= c;
    return p;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly zprem(ZPoly a, const ZPoly& b)
{
    const BigInt d = b.back();
    int e = zdeg(a) - zdeg(b) + 1;
    while (!a.empty() && zdeg(a) >= zdeg(b)) {
        const BigInt top = a.back();
        const int shift = zdeg(a) - zdeg(b);
        ZPoly next(a.size() - 1, BigInt(0));
        for (int i = 0; i < zdeg(a); ++i) {
            BigInt v = d * a[static_cast<size_t>(i)];
            int j = i - shift;
            if (j >= 0 && j < zdeg(b))
                v -= top * b[static_cast<size_t>(j)];
            next[static_cast<size_t>(i)] = v;
        }
        ztrim(next);
        a = std::move(next);
        --e;
    }
    BigInt mul = 1;
    for (int i = 0; i < e; ++i)
        mul *= d;
    return zscale(std::move(a), mul);
}

BigInt bipow(BigInt b, int e)
{
    BigInt r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

// Primitive gcd of primitive integer polynomials via the subresultant PRS.
ZPoly zgcd_subresultant(ZPoly a, ZPoly b)
{
    if (zdeg(a) < zdeg(b))
        std::swap(a, b);
    if (b.empty())
        return a;
    BigInt g = 1, h = 1;
    while (true) {
        int delta = zdeg(a) - zdeg(b);
        ZPoly r = zprem(a, b);
        if (r.empty())
            return zprimitive(b);
        if (zdeg(r) == 0)
            return {BigInt(1)};
        a = std::move(b);
        b = zdiv_exact(std::move(r), g * bipow(h, delta));
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            // h <- g^delta / h^(delta-1), exact by the subresultant theory
            h = bipow(g, delta) / bipow(h, delta - 1);
        }
    }
}

} // namespace

Poly::Poly(const Rational& c)
{
    if (c != 0)
        coeffs_.push_back(c);
}

Poly Poly::variable()
{
    Poly p;
    p.coeffs_ = {Rational(0), Rational(1)};
    return p;
}

Poly Poly::monomial(const Rational& c, int deg)
{
    Poly p;
    if (c == 0)
        return p;
    p.coeffs_.assign(static_cast<size_t>(deg) + 1, Rational(0));
    p.coeffs_.back() = c;
    return p;
}

bool Poly::is_one() const
{
    return coeffs_.size() == 1 && coeffs_[0] == 1;
}

const Rational& Poly::coeff(int i) const
{
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size())
        return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

Rational Poly::leading_coeff() const
{
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly r;
    if (a.is_zero() || b.is_zero())
        return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

Poly Poly::divmod(const Poly& a, const Poly& b, Poly& rem)
{
    if (b.is_zero())
        throw Error("polynomial division by zero");
    Poly q;
    rem = a;
    if (rem.degree() >= b.degree())
        q.coeffs_.assign(static_cast<size_t>(rem.degree() - b.degree()) + 1, Rational(0));
    const Rational blc = b.leading_coeff();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational f = rem.leading_coeff() / blc;
        q.coeffs_[static_cast<size_t>(shift)] = f;
        for (int i = 0; i <= b.degree(); ++i)
            rem.coeffs_[static_cast<size_t>(i + shift)] -= f * b.coeff(i);
        rem.trim();
    }
    q.trim();
    return q;
}

Poly Poly::divexact(const Poly& a, const Poly& b)
{
    Poly rem;
    Poly q = divmod(a, b, rem);
    if (!rem.is_zero())
        throw Error("inexact polynomial division");
    return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero() && b.is_zero())
        return Poly();
    if (a.is_zero() || b.is_zero()) {
        const Poly& nz = a.is_zero() ? b : a;
        Poly r = nz;
        r *= Rational(1) / nz.leading_coeff();
        return r;
    }
    // Clear denominators to integer polynomials, take primitive parts.
    auto lift = [](const Poly& p) {
        BigInt l = 1;
        for (int i = 0; i <= p.degree(); ++i) {
            BigInt d = denominator(p.coeff(i));
            l = l / gcd_big(l, d) * d;
        }
        ZPoly z(static_cast<size_t>(p.degree()) + 1);
        for (int i = 0; i <= p.degree(); ++i) {
            Rational c = p.coeff(i) * Rational(l);
            z[static_cast<size_t>(i)] = numerator(c);
        }
        ztrim(z);
        return zprimitive(std::move(z));
    };
    ZPoly g = zgcd_subresultant(lift(a), lift(b));
    Poly r;
    r.coeffs_.resize(g.size());
    for (size_t i = 0; i < g.size(); ++i)
        r.coeffs_[i] = Rational(g[i]);
    r.trim();
    if (!r.is_zero())
        r *= Rational(1) / r.leading_coeff();
    return r;
}

Rational Poly::eval(const Rational& at) const
{
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * at + coeffs_[i];
    return acc;
}

std::string Poly::str(char var) const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff(i);
        if (c == 0)
            continue;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg)
                out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (i == 0) {
            out << to_string(mag);
        } else {
            if (!unit)
                out << to_string(mag) << "*";
            out << var;
            if (i > 1)
                out << "^" << i;
        }
    }
    return out.str();
}

} // namespace wha
