#ifndef GWSYM_SERIES_HPP
#define GWSYM_SERIES_HPP

#include <sstream>
#include <vector>

#include "gwsym/errors.hpp"
#include "gwsym/ring.hpp"

namespace gwsym {

// Truncated power series: coefficients c[0..N], everything beyond N dropped.
template <class T>
struct Series {
    std::vector<T> c;
    int order() const { return static_cast<int>(c.size()) - 1; }
};

template <class T>
Series<T> series_zero(const Ring<T>& R, int N) {
    return {std::vector<T>(N + 1, R.zero)};
}

template <class T>
Series<T> series_one(const Ring<T>& R, int N) {
    Series<T> s = series_zero(R, N);
    s.c[0] = R.one;
    return s;
}

template <class T>
Series<T> series_add(const Ring<T>& R, const Series<T>& f, const Series<T>& g) {
    int N = std::min(f.order(), g.order());
    Series<T> s = series_zero(R, N);
    for (int i = 0; i <= N; ++i) s.c[i] = R.add(f.c[i], g.c[i]);
    return s;
}

template <class T>
Series<T> series_mul(const Ring<T>& R, const Series<T>& f, const Series<T>& g) {
    int N = std::min(f.order(), g.order());
    Series<T> s = series_zero(R, N);
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j)
            s.c[i + j] = R.add(s.c[i + j], R.mul(f.c[i], g.c[j]));
    return s;
}

template <class T>
Series<T> series_invert(const Ring<T>& R, const Series<T>& f) {
    if (!R.is_one(f.c[0])) throw NotInvertible("series inverse needs constant term 1");
    int N = f.order();
    Series<T> s = series_zero(R, N);
    s.c[0] = R.one;
    for (int n = 1; n <= N; ++n) {
        T acc = R.zero;
        for (int i = 1; i <= n; ++i) acc = R.add(acc, R.mul(f.c[i], s.c[n - i]));
        s.c[n] = R.neg(acc);
    }
    return s;
}

template <class T>
bool series_equal(const Ring<T>& R, const Series<T>& f, const Series<T>& g) {
    int N = std::min(f.order(), g.order());
    for (int i = 0; i <= N; ++i)
        if (!R.eq(f.c[i], g.c[i])) return false;
    return true;
}

// f(t) -> f(t^k), truncated at order Nout.
template <class T>
Series<T> series_substitute(const Ring<T>& R, const Series<T>& f, int k, int Nout) {
    Series<T> s = series_zero(R, Nout);
    for (int i = 0; i <= f.order() && i * k <= Nout; ++i) s.c[i * k] = f.c[i];
    return s;
}

template <class T>
Series<T> series_int_pow(const Ring<T>& R, const Series<T>& f, Int e) {
    Series<T> base = e < 0 ? series_invert(R, f) : f;
    Int n = e < 0 ? -e : e;
    Series<T> acc = series_one(R, f.order());
    for (Int i = 0; i < n; ++i) acc = series_mul(R, acc, base);
    return acc;
}

// (1-t)^{-r} to order N via the ring's power structure.
template <class T>
Series<T> expand_power(const Ring<T>& R, const T& r, int N) {
    if (!R.has_power_structure()) throw Unsupported("ring has no power structure");
    Series<T> s = series_zero(R, N);
    for (int n = 0; n <= N; ++n) s.c[n] = R.bn(r, n);
    return s;
}

// Unique c_1..c_N with f = prod_{i>=1} (1-t^i)^{-c_i} mod t^{N+1}.
template <class T>
std::vector<T> euler_factorize(const Ring<T>& R, const Series<T>& f) {
    if (!R.is_one(f.c[0])) throw NotInvertible("Euler factorization needs constant term 1");
    if (!R.has_power_structure()) throw Unsupported("ring has no power structure");
    int N = f.order();
    Series<T> rem = f;
    std::vector<T> cs(N + 1, R.zero);
    for (int n = 1; n <= N; ++n) {
        cs[n] = rem.c[n];
        if (R.is_zero(cs[n])) continue;
        Series<T> factor = series_substitute(R, expand_power(R, cs[n], N / n), n, N);
        rem = series_mul(R, rem, series_invert(R, factor));
    }
    return cs;
}

template <class T>
Series<T> euler_reconstruct(const Ring<T>& R, const std::vector<T>& cs, int N) {
    Series<T> acc = series_one(R, N);
    for (int n = 1; n <= N && n < (int)cs.size(); ++n) {
        if (R.is_zero(cs[n])) continue;
        Series<T> factor = series_substitute(R, expand_power(R, cs[n], N / n), n, N);
        acc = series_mul(R, acc, factor);
    }
    return acc;
}

// f^r for f in 1 + tR[[t]]: factorize, multiply exponents, reassemble.
template <class T>
Series<T> power_pow(const Ring<T>& R, const Series<T>& f, const T& r) {
    int N = f.order();
    std::vector<T> cs = euler_factorize(R, f);
    Series<T> acc = series_one(R, N);
    for (int n = 1; n <= N; ++n) {
        if (R.is_zero(cs[n])) continue;
        Series<T> factor = series_substitute(R, expand_power(R, R.mul(cs[n], r), N / n), n, N);
        acc = series_mul(R, acc, factor);
    }
    return acc;
}

enum class LambdaDirection { LambdaToB, BToLambda };

// sum b_n t^n = (sum lambda_n (-t)^n)^{-1}, both ways.
template <class T>
std::vector<T> convert_lambda_power(const Ring<T>& R, const std::vector<T>& data,
                                    LambdaDirection dir) {
    int N = static_cast<int>(data.size()) - 1;
    Series<T> s{data};
    if (dir == LambdaDirection::LambdaToB) {
        for (int n = 1; n <= N; n += 2) s.c[n] = R.neg(s.c[n]);
        return series_invert(R, s).c;
    }
    Series<T> inv = series_invert(R, s);
    for (int n = 1; n <= N; n += 2) inv.c[n] = R.neg(inv.c[n]);
    return inv.c;
}

// Opposite pre-lambda structure: lambda_n(r) = coefficient of t^n in (1+t)^r.
template <class T>
Series<T> lambda_series(const Ring<T>& R, const T& r, int N) {
    Series<T> one_plus_t = series_one(R, N);
    if (N >= 1) one_plus_t.c[1] = R.one;
    return power_pow(R, one_plus_t, r);
}

template <class T>
std::string series_str(const Ring<T>& R, const Series<T>& f) {
    std::ostringstream os;
    bool any = false;
    for (int n = 0; n <= f.order(); ++n) {
        if (R.is_zero(f.c[n])) continue;
        if (any) os << " + ";
        os << "(" << R.str(f.c[n]) << ")";
        if (n == 1) os << "*t";
        else if (n > 1) os << "*t^" << n;
        any = true;
    }
    if (!any) os << "0";
    os << " + O(t^" << f.order() + 1 << ")";
    return os.str();
}

}  // namespace gwsym

#endif
