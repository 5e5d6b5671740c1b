#pragma once

#include <vector>

#include "adams/scalar.hpp"

namespace adams {

inline bool is_prime_int(const Int& n)
{
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<Int> prime_factors(Int n)
{
    std::vector<Int> fs;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Ambient arithmetic data: an odd prime p and a generator g of the acting
// unit group, i.e. a primitive root mod p^2. Every Adams operation in the
// engine is a power of psi^g; the twist functor rescales by powers of
// g^(p-1).
struct Context {
    Int p;
    Int g;
    int period = 0;  // 2p - 2

    static Context make(const Int& p, const Int& g)
    {
        ADAMS_PRECONDITION(p % 2 == 1 && is_prime_int(p), "p must be an odd prime");
        Int p2 = p * p;
        Int order = p * (p - 1);
        auto powmod = [&](Int b, Int e) {
            Int r = 1;
            b %= p2;
            while (e > 0) {
                if (e % 2 == 1) r = (r * b) % p2;
                b = (b * b) % p2;
                e /= 2;
            }
            return r;
        };
        ADAMS_PRECONDITION(g % p != 0 && powmod(g, order) == 1,
                           "g must be a unit mod p^2");
        for (const Int& q : prime_factors(order))
            ADAMS_PRECONDITION(powmod(g, order / q) != 1, "g must be a primitive root mod p^2");
        Context c;
        c.p = p;
        c.g = g;
        c.period = 2 * static_cast<int>(p) - 2;
        return c;
    }

    static Context default_context() { return make(3, 2); }

    // g^{j(p-1)} as an exact p-local unit, for any sign of j
    Scalar twist_unit(long long j) const
    {
        long long e = j * (static_cast<long long>(static_cast<int>(p)) - 1);
        if (e >= 0) return Scalar(pow_int(g, static_cast<unsigned long>(e)));
        return Scalar(Int(1), pow_int(g, static_cast<unsigned long>(-e)));
    }

    bool operator==(const Context& o) const { return p == o.p && g == o.g; }
};

// euclidean divmod: a = q*n + r with 0 <= r < n
inline std::pair<long long, int> divmod_floor(long long a, int n)
{
    long long q = a >= 0 ? a / n : -((-a + n - 1) / n);
    return {q, static_cast<int>(a - q * n)};
}

}  // namespace adams
