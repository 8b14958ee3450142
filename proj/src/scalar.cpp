#include "wha/scalar.hpp"

namespace wha {

Scalar Scalar::variable(char v)
{
    Scalar s;
    s.var_ = v;
    s.num_ = Poly::variable();
    s.den_ = Poly(Rational(1));
    return s;
}

Scalar Scalar::make(char var, Poly num, Poly den)
{
    if (den.is_zero())
        throw Error("scalar with zero denominator");
    Scalar s;
    s.var_ = var;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.normalize();
    return s;
}

void Scalar::normalize()
{
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        var_ = 0;
        return;
    }
    if (!den_.is_constant() || !num_.is_constant()) {
        Poly g = Poly::gcd(num_, den_);
        if (!g.is_zero() && !g.is_one()) {
            num_ = Poly::divexact(num_, g);
            den_ = Poly::divexact(den_, g);
        }
    }
    Rational lc = den_.leading_coeff();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num_ *= inv;
        den_ *= inv;
    }
    if (num_.is_constant() && den_.is_constant())
        var_ = 0;
}

char Scalar::unify(char a, char b)
{
    if (a == 0)
        return b;
    if (b == 0 || a == b)
        return a;
    throw VariableMismatch(std::string("scalar variable mismatch: '") + a + "' vs '" + b + "'");
}

Rational Scalar::as_rational() const
{
    if (!is_rational())
        throw Error("scalar is not a plain rational");
    if (is_zero())
        return Rational(0);
    return num_.constant_term() / den_.constant_term();
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b)
{
    char v = Scalar::unify(a.var_, b.var_);
    return Scalar::make(v, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b)
{
    char v = Scalar::unify(a.var_, b.var_);
    return Scalar::make(v, a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    char v = Scalar::unify(a.var_, b.var_);
    return Scalar::make(v, a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b)
{
    if (b.is_zero())
        throw Error("scalar division by zero");
    char v = Scalar::unify(a.var_, b.var_);
    return Scalar::make(v, a.num_ * b.den_, a.den_ * b.num_);
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw Error("inverse of zero scalar");
    return make(var_, den_, num_);
}

Scalar Scalar::pow(long e) const
{
    if (e == 0)
        return Scalar(1);
    if (e < 0)
        return inverse().pow(-e);
    Scalar acc(1), base(*this);
    long k = e;
    while (k > 0) {
        if (k & 1)
            acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Rational Scalar::eval(const Rational& at) const
{
    Rational d = den_.eval(at);
    if (d == 0)
        throw PoleError("pole at " + to_string(at));
    return num_.eval(at) / d;
}

std::string Scalar::str() const
{
    char v = var_ == 0 ? 'q' : var_;
    if (den_.is_one())
        return num_.str(v);
    return "(" + num_.str(v) + ")/(" + den_.str(v) + ")";
}

Scalar var_pow(char var, long e)
{
    if (e >= 0)
        return Scalar::make(var, Poly::monomial(Rational(1), static_cast<int>(e)), Poly(Rational(1)));
    return Scalar::make(var, Poly(Rational(1)), Poly::monomial(Rational(1), static_cast<int>(-e)));
}

} // namespace wha
