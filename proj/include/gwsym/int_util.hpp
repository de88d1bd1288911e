#ifndef GWSYM_INT_UTIL_HPP
#define GWSYM_INT_UTIL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "gwsym/errors.hpp"

namespace gwsym {

using Int = long long;

inline Int checked_mul(Int a, Int b) {
    __int128 r = static_cast<__int128>(a) * b;
    if (r > INT64_MAX || r < INT64_MIN) throw InternalError("integer overflow in multiply");
    return static_cast<Int>(r);
}

// Squarefree part of n, sign preserved. n must be nonzero.
inline Int squarefree_part(Int n) {
    if (n == 0) throw InvalidArgument("squarefree_part of zero");
    Int sign = n < 0 ? -1 : 1;
    Int m = n < 0 ? -n : n;
    Int out = 1;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        int e = 0;
        while (m % d == 0) { m /= d; ++e; }
        if (e & 1) out = checked_mul(out, d);
    }
    return sign * checked_mul(out, m);
}

// Distinct prime factors of |n| (n nonzero).
inline std::vector<Int> prime_factors(Int n) {
    std::vector<Int> ps;
    Int m = n < 0 ? -n : n;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        ps.push_back(d);
        while (m % d == 0) m /= d;
    }
    if (m > 1) ps.push_back(m);
    return ps;
}

inline Int pow_mod(Int base, Int exp, Int mod) {
    Int b = base % mod;
    if (b < 0) b += mod;
    Int r = 1;
    while (exp > 0) {
        if (exp & 1) r = (__int128)r * b % mod;
        b = (__int128)b * b % mod;
        exp >>= 1;
    }
    return r;
}

// Legendre symbol (a/p) for odd prime p; a need not be reduced. 0 if p | a.
inline int legendre(Int a, Int p) {
    Int r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    Int e = pow_mod(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

inline Int least_nonresidue(Int p) {
    for (Int n = 2; n < p; ++n)
        if (legendre(n, p) == -1) return n;
    throw InvalidArgument("no quadratic nonresidue: p must be an odd prime > 1");
}

inline bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Generalized binomial C(top, n) for arbitrary integer top, n >= 0.
inline Int binomial(Int top, Int n) {
    if (n < 0) throw InvalidArgument("binomial with negative lower index");
    __int128 num = 1;
    __int128 den = 1;
    for (Int i = 0; i < n; ++i) {
        num *= (top - i);
        den *= (i + 1);
    }
    if (num % den != 0) throw InternalError("binomial not integral");
    __int128 r = num / den;
    if (r > INT64_MAX || r < INT64_MIN) throw InternalError("binomial overflow");
    return static_cast<Int>(r);
}

inline Int v_adic(Int n, Int p) {
    Int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

}  // namespace gwsym

#endif
