#ifndef GWSYM_AXIOM_CHECK_HPP
#define GWSYM_AXIOM_CHECK_HPP

#include <random>

#include "gwsym/report.hpp"
#include "gwsym/series.hpp"

namespace gwsym {

// Property-test the power-structure axioms of R's b_n family plus the pre-lambda
// axioms of the opposite structure, on seeded random cases. Failures are data,
// collected with a witness.
template <class T>
PropertyReport axiom_check(const Ring<T>& R, const std::function<T(std::mt19937&)>& sample,
                           unsigned seed, int cases, int N = 6) {
    if (!R.has_power_structure()) throw Unsupported("ring has no power structure");
    PropertyReport rep;
    rep.title = "power-structure axioms on " + R.name;
    rep.seed = seed;
    rep.cases = cases;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<Int> small_int(-3, 3);
    std::uniform_int_distribution<int> subst(1, 3);

    auto random_series = [&](std::mt19937& g) {
        Series<T> s = series_one(R, N);
        for (int i = 1; i <= N; ++i) s.c[i] = sample(g);
        return s;
    };

    for (int c = 0; c < cases; ++c) {
        T r = sample(rng), s = sample(rng);
        Series<T> f = random_series(rng), g = random_series(rng);
        Int m = small_int(rng);
        int n = subst(rng);
        std::string w = "case " + std::to_string(c) + ": r = " + R.str(r) + ", s = " + R.str(s);

        rep.record("b_0(r) = 1", R.eq(R.bn(r, 0), R.one), w);
        rep.record("b_1(r) = r", R.eq(R.bn(r, 1), r), w);
        rep.record("b_n(0) = 0, b_n(1) = 1 for n >= 1",
                   R.is_zero(R.bn(R.zero, 1 + (c % N))) && R.is_one(R.bn(R.one, 1 + (c % N))), w);

        rep.record("f^0 = 1", series_equal(R, power_pow(R, f, R.zero), series_one(R, N)), w);
        rep.record("f^1 = f", series_equal(R, power_pow(R, f, R.one), f), w);
        rep.record("(fg)^r = f^r g^r",
                   series_equal(R, power_pow(R, series_mul(R, f, g), r),
                                series_mul(R, power_pow(R, f, r), power_pow(R, g, r))),
                   w);
        rep.record("f^{r+s} = f^r f^s",
                   series_equal(R, power_pow(R, f, R.add(r, s)),
                                series_mul(R, power_pow(R, f, r), power_pow(R, f, s))),
                   w);
        rep.record("f^{rs} = (f^r)^s",
                   series_equal(R, power_pow(R, f, R.mul(r, s)),
                                power_pow(R, power_pow(R, f, r), s)),
                   w);

        Series<T> one_plus_t = series_one(R, N);
        one_plus_t.c[1] = R.one;
        Series<T> pm = power_pow(R, one_plus_t, R.from_int(m));
        rep.record("(1+t)^m = 1 + mt + O(t^2)",
                   R.is_one(pm.c[0]) && R.eq(pm.c[1], R.from_int(m)), w);

        {
            Series<T> fm = power_pow(R, f, R.from_int(m));
            Series<T> lhs = power_pow(R, series_substitute(R, f, n, N), R.from_int(m));
            Series<T> rhs = series_substitute(R, fm, n, N);
            rep.record("g = f^m implies f(t^n)^m = g(t^n)", series_equal(R, lhs, rhs), w);
        }
        {
            // finite generation: f^r mod t^{k+1} only sees f mod t^{k+1}
            int k = N / 2;
            Series<T> f2 = f;
            for (int i = k + 1; i <= N; ++i) f2.c[i] = sample(rng);
            Series<T> a = power_pow(R, f, r), b = power_pow(R, f2, r);
            bool ok = true;
            for (int i = 0; i <= k; ++i) ok = ok && R.eq(a.c[i], b.c[i]);
            rep.record("finite generation (truncation independence)", ok, w);
        }

        // opposite pre-lambda structure
        Series<T> lr = lambda_series(R, r, N), ls = lambda_series(R, s, N);
        rep.record("lambda_0(r) = 1, lambda_1(r) = r",
                   R.is_one(lr.c[0]) && R.eq(lr.c[1], r), w);
        rep.record("lambda_n(0) = 0 for n >= 1", [&] {
            Series<T> l0 = lambda_series(R, R.zero, N);
            for (int i = 1; i <= N; ++i)
                if (!R.is_zero(l0.c[i])) return false;
            return true;
        }(), w);
        rep.record("lambda_n(1) = 0 for n >= 2", [&] {
            Series<T> l1 = lambda_series(R, R.one, N);
            if (!R.is_one(l1.c[0]) || !R.is_one(l1.c[1])) return false;
            for (int i = 2; i <= N; ++i)
                if (!R.is_zero(l1.c[i])) return false;
            return true;
        }(), w);
        rep.record("lambda_n(r+s) = sum lambda_i(r) lambda_{n-i}(s)",
                   series_equal(R, lambda_series(R, R.add(r, s), N), series_mul(R, lr, ls)), w);
    }
    return rep;
}

}  // namespace gwsym

#endif
