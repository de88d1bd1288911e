#ifndef GWSYM_RING_HPP
#define GWSYM_RING_HPP

#include <functional>
#include <optional>
#include <string>

#include "gwsym/int_util.hpp"

namespace gwsym {

// Coefficient-ring descriptor. When bn is set the ring carries a power
// structure with (1-t)^{-r} = sum bn(r, i) t^i.
template <class T>
struct Ring {
    std::string name;
    std::function<bool(const T&, const T&)> eq;
    std::function<T(const T&, const T&)> add;
    std::function<T(const T&, const T&)> mul;
    std::function<T(const T&)> neg;
    T zero;
    T one;
    std::function<T(Int)> from_int;
    std::function<std::string(const T&)> str;
    std::function<T(const T&, int)> bn;                       // optional
    std::function<std::optional<T>(const T&, Int)> div_int;   // optional exact division
    bool torsion_free = false;

    bool has_power_structure() const { return static_cast<bool>(bn); }
    T sub(const T& a, const T& b) const { return add(a, neg(b)); }
    bool is_zero(const T& a) const { return eq(a, zero); }
    bool is_one(const T& a) const { return eq(a, one); }
};

// Z with the binomial power structure b_n(r) = C(r+n-1, n).
inline Ring<Int> int_ring() {
    Ring<Int> r;
    r.name = "Z";
    r.eq = [](Int a, Int b) { return a == b; };
    r.add = [](Int a, Int b) { return a + b; };
    r.mul = [](Int a, Int b) { return checked_mul(a, b); };
    r.neg = [](Int a) { return -a; };
    r.zero = 0;
    r.one = 1;
    r.from_int = [](Int n) { return n; };
    r.str = [](Int a) { return std::to_string(a); };
    r.bn = [](Int v, int n) { return binomial(v + n - 1, n); };
    r.div_int = [](Int a, Int n) -> std::optional<Int> {
        if (n == 0 || a % n != 0) return std::nullopt;
        return a / n;
    };
    r.torsion_free = true;
    return r;
}

}  // namespace gwsym

#endif
