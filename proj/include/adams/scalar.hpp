#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "adams/errors.hpp"

namespace adams {

using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int pow_int(const Int& base, unsigned long e)
{
    Int r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Exact element of Z_(p): a rational whose denominator is coprime to p.
// Stored in lowest terms with positive denominator. The prime is ambient
// (carried by the computation, not the scalar); denominator coprimality is
// asserted against it whenever a prime is in scope.
struct Scalar {
    Int num;
    Int den;  // > 0

    Scalar() : num(0), den(1) {}
    Scalar(long long n) : num(n), den(1) {}
    Scalar(Int n) : num(std::move(n)), den(1) {}
    Scalar(Int n, Int d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    void normalize()
    {
        ADAMS_REQUIRE(den != 0, "scalar with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) {
            den = 1;
            return;
        }
        Int g = gcd(num < 0 ? Int(-num) : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_zero() const { return num == 0; }
    bool is_one() const { return num == 1 && den == 1; }

    friend Scalar operator+(const Scalar& a, const Scalar& b)
    {
        return Scalar(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b)
    {
        return Scalar(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b)
    {
        return Scalar(a.num * b.num, a.den * b.den);
    }
    // Division is only legal by scalars that stay p-locally invertible; the
    // caller-facing guard lives in div_exact below.
    friend Scalar operator/(const Scalar& a, const Scalar& b)
    {
        ADAMS_REQUIRE(b.num != 0, "division by zero scalar");
        return Scalar(a.num * b.den, a.den * b.num);
    }
    Scalar operator-() const
    {
        Scalar r = *this;
        r.num = -r.num;
        return r;
    }
    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const
    {
        std::string s = num.str();
        if (den != 1) s += "/" + den.str();
        return s;
    }
};

inline long long valuation_int(Int n, const Int& p)
{
    ADAMS_REQUIRE(n != 0, "valuation of zero");
    long long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// v_p of a nonzero scalar. Denominators carry no p, so only the numerator counts.
inline long long valuation(const Scalar& s, const Int& p)
{
    ADAMS_REQUIRE(s.num != 0, "valuation of zero");
    ADAMS_REQUIRE(s.den % p != 0, "denominator not coprime to p");
    return valuation_int(s.num, p);
}

inline bool is_p_local(const Scalar& s, const Int& p) { return s.den % p != 0; }

inline bool is_unit(const Scalar& s, const Int& p)
{
    return s.num != 0 && s.num % p != 0 && s.den % p != 0;
}

// a / b inside Z_(p); the quotient must again be p-local.
inline Scalar div_exact(const Scalar& a, const Scalar& b, const Int& p)
{
    Scalar q = a / b;
    ADAMS_REQUIRE(is_p_local(q, p), "quotient leaves Z_(p)");
    return q;
}

inline Scalar parse_scalar(const std::string& text)
{
    auto bad = [&] { throw parse_error("bad scalar literal: '" + text + "'"); };
    if (text.empty()) bad();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Scalar(Int(text));
        std::string n = text.substr(0, slash), d = text.substr(slash + 1);
        if (n.empty() || d.empty()) bad();
        return Scalar(Int(n), Int(d));
    }
    catch (const std::runtime_error&) {
        bad();
    }
    return Scalar();  // unreachable
}

// Canonical residue in [0, p^e) of a p-local scalar modulo p^e.
inline Int residue_mod(const Scalar& s, const Int& p, long long e)
{
    Int m = pow_int(p, static_cast<unsigned long>(e));
    Int n = s.num % m;
    if (n < 0) n += m;
    // invert the denominator mod p^e by extended Euclid
    Int a = s.den % m, b = m, x0 = 1, x1 = 0;
    while (b != 0) {
        Int q = a / b;
        Int t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    ADAMS_REQUIRE(a == 1 || a == -1, "denominator not invertible mod p^e");
    if (a == -1) x0 = -x0;
    Int inv = x0 % m;
    if (inv < 0) inv += m;
    return (n * inv) % m;
}

}  // namespace adams
