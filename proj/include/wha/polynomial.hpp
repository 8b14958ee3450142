#pragma once

#include <string>
#include <vector>

#include "wha/rational.hpp"

namespace wha {

// Dense univariate polynomial over Rational. The indeterminate is anonymous;
// Scalar attaches the variable name.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(long c) : Poly(Rational(c)) {}

    static Poly variable();
    static Poly monomial(const Rational& c, int deg);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_constant() const { return coeffs_.size() <= 1; }

    const Rational& coeff(int i) const;
    Rational leading_coeff() const;
    Rational constant_term() const { return coeff(0); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& c);

    // Field division: a = q*b + r with deg r < deg b. b must be nonzero.
    static Poly divmod(const Poly& a, const Poly& b, Poly& rem);
    // Exact division; throws if the remainder is nonzero.
    static Poly divexact(const Poly& a, const Poly& b);

    // Monic gcd via the subresultant PRS on primitive integer parts.
    static Poly gcd(const Poly& a, const Poly& b);

    Rational eval(const Rational& at) const;

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    // "3*q^2 - 1" style rendering.
    std::string str(char var) const;

private:
    std::vector<Rational> coeffs_; // coeffs_[i] multiplies x^i; no trailing zeros
    void trim();
};

} // namespace wha
