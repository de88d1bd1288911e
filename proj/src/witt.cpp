#include "gwsym/witt.hpp"

#include <map>

namespace gwsym {

const std::vector<Poly>& witt_universal_polynomials(int N) {
    static std::mutex mu;
    static std::map<int, std::vector<Poly>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    // Work in Q[a_1..a_N, b_1..b_N]: vars 0..N-1 are a_i, vars N..2N-1 are b_j.
    Ring<Poly> R = poly_ring(2 * N);
    Series<Poly> f = series_one(R, N), g = series_one(R, N);
    for (int i = 1; i <= N; ++i) {
        f.c[i] = Poly::var(2 * N, i - 1);
        g.c[i] = Poly::var(2 * N, N + i - 1);
    }
    Series<Poly> prod = witt_product(R, f, g);
    for (int n = 1; n <= N; ++n)
        if (!prod.c[n].integral())
            throw InternalError("universal Witt polynomial has fractional coefficient");
    return cache.emplace(N, std::move(prod.c)).first->second;
}

}  // namespace gwsym
