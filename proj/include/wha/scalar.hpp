#pragma once

#include <string>

#include "wha/polynomial.hpp"

namespace wha {

// Exact rational function in one indeterminate over Q. Canonical form:
// gcd(num, den) = 1, den monic and nonzero, zero is (0, 1). A scalar whose
// numerator and denominator are constant carries no variable, so plain
// rationals mix freely with either q- or alpha-scalars.
class Scalar {
public:
    Scalar() : var_(0), num_(), den_(Rational(1)) {}
    Scalar(long c) : Scalar(Rational(c)) {}
    Scalar(const Rational& c) : var_(0), num_(c), den_(Rational(1)) { normalize(); }

    static Scalar variable(char v);
    static Scalar make(char var, Poly num, Poly den);

    char var() const { return var_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_rational() const { return var_ == 0; }
    // Defined only when is_rational().
    Rational as_rational() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar pow(long e) const;
    Scalar inverse() const;

    Rational eval(const Rational& at) const;

    bool operator==(const Scalar& o) const
    {
        return var_ == o.var_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    char var_;  // 0 = constant, otherwise 'q' or 'a'
    Poly num_;
    Poly den_;
    void normalize();
    static char unify(char a, char b);
};

// q^e for the given variable, e may be negative.
Scalar var_pow(char var, long e);

} // namespace wha
