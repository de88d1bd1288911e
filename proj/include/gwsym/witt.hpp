#ifndef GWSYM_WITT_HPP
#define GWSYM_WITT_HPP

#include <mutex>

#include "gwsym/poly.hpp"
#include "gwsym/series.hpp"

namespace gwsym {

constexpr int kWittUniversalMaxOrder = 8;

// Newton's identities. Coefficients e_1..e_N of f in 1+tR[[t]] are elementary
// symmetric functions of the formal roots of f = prod(1 + x_i t); power sums
// come out with no division.
template <class T>
std::vector<T> power_sums_from_series(const Ring<T>& R, const Series<T>& f) {
    int N = f.order();
    std::vector<T> p(N + 1, R.zero);
    for (int k = 1; k <= N; ++k) {
        // p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
        T acc = R.zero;
        for (int i = 1; i < k; ++i) {
            T term = R.mul(f.c[i], p[k - i]);
            acc = (i % 2 == 1) ? R.add(acc, term) : R.sub(acc, term);
        }
        T last = R.mul(R.from_int(k), f.c[k]);
        acc = (k % 2 == 1) ? R.add(acc, last) : R.sub(acc, last);
        p[k] = acc;
    }
    return p;
}

// Inverse direction; divides by k, so only valid in torsion-free rings.
template <class T>
Series<T> series_from_power_sums(const Ring<T>& R, const std::vector<T>& p) {
    int N = static_cast<int>(p.size()) - 1;
    Series<T> f = series_one(R, N);
    for (int k = 1; k <= N; ++k) {
        // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i
        T acc = R.zero;
        for (int i = 1; i <= k; ++i) {
            T term = R.mul(f.c[k - i], p[i]);
            acc = (i % 2 == 1) ? R.add(acc, term) : R.sub(acc, term);
        }
        auto q = R.div_int(acc, k);
        if (!q) throw InternalError("Witt ghost reconstruction failed integrality");
        f.c[k] = *q;
    }
    return f;
}

// Universal coefficient polynomials of the big-Witt product at order N:
// P_n in Z[a_1..a_N, b_1..b_N], computed once via the ghost route over Q[a,b].
const std::vector<Poly>& witt_universal_polynomials(int N);

// Big-Witt product, characterized by prod(1+x_i t) . prod(1+y_j t) = prod(1+x_i y_j t).
template <class T>
Series<T> witt_product(const Ring<T>& R, const Series<T>& f, const Series<T>& g) {
    int N = std::min(f.order(), g.order());
    if (!R.is_one(f.c[0]) || !R.is_one(g.c[0]))
        throw NotInvertible("Witt product needs constant terms 1");
    if (R.torsion_free && R.div_int) {
        std::vector<T> pf = power_sums_from_series(R, f);
        std::vector<T> pg = power_sums_from_series(R, g);
        std::vector<T> prod(N + 1, R.zero);
        for (int k = 1; k <= N; ++k) prod[k] = R.mul(pf[k], pg[k]);
        return series_from_power_sums(R, prod);
    }
    if (N > kWittUniversalMaxOrder)
        throw Unsupported("Witt product over a torsion ring needs order <= " +
                          std::to_string(kWittUniversalMaxOrder));
    const std::vector<Poly>& P = witt_universal_polynomials(N);
    Series<T> out = series_one(R, N);
    for (int n = 1; n <= N; ++n) {
        T acc = R.zero;
        for (auto& [e, c] : P[n].terms) {
            if (!c.is_integer()) throw InternalError("universal Witt polynomial not integral");
            T term = R.from_int(c.num());
            for (int i = 0; i < N; ++i) {
                for (int rep = 0; rep < e[i]; ++rep) term = R.mul(term, f.c[i + 1]);
                for (int rep = 0; rep < e[N + i]; ++rep) term = R.mul(term, g.c[i + 1]);
            }
            acc = R.add(acc, term);
        }
        out.c[n] = acc;
    }
    return out;
}

}  // namespace gwsym

#endif
