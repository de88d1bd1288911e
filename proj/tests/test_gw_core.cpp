#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gwsym/gram.hpp"
#include "gwsym/invariants.hpp"

using namespace gwsym;

namespace {

// Brute-force Hilbert symbol oracle: ax^2 + by^2 = z^2 has a nontrivial p-adic
// solution iff it has a primitive solution mod p^k for k past the Hensel bound.
int hilbert_oracle(Int a, Int b, Int p) {
    Int mod = 1;
    int k = (p == 2) ? 7 : 3;
    for (int i = 0; i < k; ++i) mod *= p;
    for (Int x = 0; x < mod; ++x)
        for (Int y = 0; y < mod; ++y)
            for (Int z = 0; z < mod; ++z) {
                if (x % p == 0 && y % p == 0 && z % p == 0) continue;
                Int lhs = ((a % mod) * x % mod * x % mod + (b % mod) * y % mod * y % mod) % mod;
                Int rhs = z * z % mod;
                if ((lhs - rhs) % mod == 0) return 1;
            }
    return -1;
}

std::vector<Int> pool_q() { return {1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 10, 15, 30, -30}; }

GwElement random_gw(const BaseField& f, std::mt19937& rng, int max_terms = 3, Int max_coeff = 2) {
    auto pool = pool_q();
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<Int> coeff(-max_coeff, max_coeff);
    GwElement q(f);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) q.add_term(f.square_class(Rational(pool[pick(rng)])), coeff(rng));
    return q;
}

}  // namespace

TEST_CASE("square class canonicalization") {
    BaseField Q = BaseField::rationals();
    CHECK(Q.square_class(Rational(8)) == 2);
    CHECK(Q.square_class(Rational(12)) == 3);
    CHECK(Q.square_class(Rational(-45)) == -5);
    CHECK(Q.square_class(Rational(1, 2)) == 2);
    CHECK(Q.square_class(Rational(-3, 4)) == -3);
    CHECK_THROWS_AS(Q.square_class(Rational(0)), InvalidArgument);

    BaseField R = BaseField::reals();
    CHECK(R.square_class(Rational(7)) == 1);
    CHECK(R.square_class(Rational(-2, 3)) == -1);

    BaseField F7 = BaseField::finite(7);
    // squares mod 7: 1, 2, 4; least nonresidue is 3
    CHECK(F7.square_class(Rational(2)) == 1);
    CHECK(F7.square_class(Rational(5)) == 3);
    CHECK(F7.square_class(Rational(-1)) == 3);
    CHECK_THROWS_AS(F7.square_class(Rational(14)), InvalidArgument);
    CHECK_THROWS_AS(BaseField::finite(2), InvalidArgument);
    CHECK_THROWS_AS(BaseField::finite(9), InvalidArgument);

    BaseField C = BaseField::quadratically_closed();
    CHECK(C.square_class(Rational(-17)) == 1);

    CHECK(BaseField::parse("Fp:11") == BaseField::finite(11));
    CHECK(BaseField::parse("Q") == Q);
    CHECK_THROWS_AS(BaseField::parse("Z"), InvalidArgument);
}

TEST_CASE("hilbert symbol against brute-force local solubility") {
    std::vector<Int> vals = {1, -1, 2, -2, 3, -3, 5, 6, -6, 10, 15};
    for (Int a : vals)
        for (Int b : vals) {
            for (Int p : {3LL, 5LL}) {
                INFO("a=", a, " b=", b, " p=", p);
                CHECK(hilbert_symbol(Rational(a), Rational(b), p) == hilbert_oracle(a, b, p));
            }
        }
    // the 2-adic brute force is the slow one; spot-check a spread of pairs
    std::vector<std::pair<Int, Int>> pairs = {{2, -1}, {-1, -1}, {2, 3},  {3, 3},   {-2, -5},
                                              {6, 10}, {2, 2},   {5, -6}, {-3, 15}, {1, -6}};
    for (auto [a, b] : pairs) {
        INFO("a=", a, " b=", b);
        CHECK(hilbert_symbol(Rational(a), Rational(b), 2) == hilbert_oracle(a, b, 2));
    }
}

TEST_CASE("hilbert symbol algebraic identities") {
    std::vector<Int> vals = {1, -1, 2, -2, 3, -3, 5, -5, 6, 10, 15, 30};
    std::vector<Int> places = {PLACE_INF, 2, 3, 5};
    for (Int a : vals)
        for (Int b : vals)
            for (Int v : places) {
                Rational ra(a), rb(b);
                INFO("a=", a, " b=", b, " v=", v);
                CHECK(hilbert_symbol(ra, rb, v) == hilbert_symbol(rb, ra, v));
                CHECK(hilbert_symbol(ra, -ra, v) == 1);
                if (a != 1) CHECK(hilbert_symbol(ra, Rational(1) - ra, v) == 1);
                for (Int c : {2LL, -3LL, 5LL})
                    CHECK(hilbert_symbol(ra, rb * Rational(c), v) ==
                          hilbert_symbol(ra, rb, v) * hilbert_symbol(ra, Rational(c), v));
            }
    // product formula over all places
    for (Int a : vals)
        for (Int b : vals) {
            int prod = hilbert_symbol(Rational(a), Rational(b), PLACE_INF) *
                       hilbert_symbol(Rational(a), Rational(b), 2);
            for (Int p : {3LL, 5LL})
                prod *= hilbert_symbol(Rational(a), Rational(b), p);
            INFO("a=", a, " b=", b);
            CHECK(prod == 1);
        }
}

TEST_CASE("hasse invariant matches pairwise definition") {
    std::mt19937 rng(7);
    auto pool = pool_q();
    std::uniform_int_distribution<int> len(1, 5);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<Int> mult(1, 4);
    for (int trial = 0; trial < 60; ++trial) {
        std::map<Int, Int> diag;
        std::vector<Int> expanded;
        int k = len(rng);
        for (int i = 0; i < k; ++i) {
            Int c = squarefree_part(pool[pick(rng)]);
            Int m = mult(rng);
            diag[c] += m;
            for (Int j = 0; j < m; ++j) expanded.push_back(c);
        }
        for (Int v : {PLACE_INF, 2LL, 3LL, 5LL}) {
            int direct = 1;
            for (size_t i = 0; i < expanded.size(); ++i)
                for (size_t j = i + 1; j < expanded.size(); ++j)
                    direct *= hilbert_symbol(Rational(expanded[i]), Rational(expanded[j]), v);
            CHECK(hasse_invariant(diag, v) == direct);
        }
    }
}

TEST_CASE("gw_equal basic identities") {
    BaseField Q = BaseField::rationals();
    GwElement H = GwElement::hyperbolic(Q);
    for (Int a : {2LL, -3LL, 5LL, 30LL}) {
        // <a> * H = H
        CHECK(gw_equal(GwElement::unit_form(Q, Rational(a)) * H, H));
        // <a> + <-a> = H
        GwElement s = GwElement::unit_form(Q, Rational(a)) + GwElement::unit_form(Q, Rational(-a));
        CHECK(gw_equal(s, H));
        // <a> + <b> = <a+b> + <(a+b)ab> whenever a + b != 0
        for (Int b : {1LL, 2LL, 7LL}) {
            GwElement lhs =
                GwElement::unit_form(Q, Rational(a)) + GwElement::unit_form(Q, Rational(b));
            GwElement rhs = GwElement::unit_form(Q, Rational(a + b)) +
                            GwElement::unit_form(Q, Rational((a + b) * a * b));
            CHECK(gw_equal(lhs, rhs));
        }
    }
    GwElement two_ones = GwElement::one(Q) + GwElement::one(Q);
    CHECK_FALSE(gw_equal(two_ones, H));
    GwElement q23 = GwElement::from_diagonal(Q, {Rational(2), Rational(3)});
    GwElement q16 = GwElement::from_diagonal(Q, {Rational(1), Rational(6)});
    CHECK_FALSE(gw_equal(q23, q16));

    BaseField R = BaseField::reals();
    CHECK_FALSE(gw_equal(GwElement::one(R) + GwElement::one(R), GwElement::hyperbolic(R)));
    BaseField C = BaseField::quadratically_closed();
    CHECK(gw_equal(GwElement::one(C) + GwElement::one(C), GwElement::hyperbolic(C)));
    BaseField F5 = BaseField::finite(5);
    CHECK(gw_equal(GwElement::one(F5) + GwElement::one(F5), GwElement::hyperbolic(F5)));
    BaseField F3 = BaseField::finite(3);
    CHECK_FALSE(gw_equal(GwElement::one(F3) + GwElement::one(F3), GwElement::hyperbolic(F3)));
}

TEST_CASE("gw_equal is a ring congruence") {
    std::mt19937 rng(11);
    for (const BaseField& f : {BaseField::rationals(), BaseField::reals(), BaseField::finite(7)}) {
        for (int trial = 0; trial < 40; ++trial) {
            GwElement a = random_gw(f, rng), b = random_gw(f, rng), c = random_gw(f, rng);
            CHECK(gw_equal(a + b, b + a));
            CHECK(gw_equal(a * b, b * a));
            CHECK(gw_equal(a * (b + c), a * b + a * c));
            CHECK(gw_equal((a + b) + c, a + (b + c)));
            CHECK(gw_equal(a - a, GwElement(f)));
            if (gw_equal(a, b)) {
                CHECK(gw_equal(a * c, b * c));
                CHECK(gw_equal(a + c, b + c));
            }
        }
    }
}

TEST_CASE("field mismatch is rejected") {
    GwElement a = GwElement::one(BaseField::rationals());
    GwElement b = GwElement::one(BaseField::reals());
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS(a * b, FieldMismatch);
}

TEST_CASE("gram diagonalization is congruence invariant") {
    BaseField Q = BaseField::rationals();
    std::mt19937 rng(23);
    std::uniform_int_distribution<Int> entry(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + trial % 3;
        // random diagonal start
        Matrix g(n, std::vector<Rational>(n, Rational(0)));
        for (int i = 0; i < n; ++i) {
            Int d = entry(rng);
            g[i][i] = Rational(d == 0 ? 1 : d);
        }
        GwElement base = diagonalize_gram(Q, g);
        // apply random elementary congruences
        for (int step = 0; step < 6; ++step) {
            int i = (int)(rng() % n), j = (int)(rng() % n);
            if (i == j) continue;
            Rational c(entry(rng));
            // rows: R_i += c R_j, then same on columns
            for (int k = 0; k < n; ++k) g[i][k] += c * g[j][k];
            for (int k = 0; k < n; ++k) g[k][i] += c * g[k][j];
        }
        CHECK(gw_equal(diagonalize_gram(Q, g), base));
    }
    Matrix singular = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK_THROWS_AS(diagonalize_gram(Q, singular), Degenerate);
    // off-diagonal only
    Matrix offdiag = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    CHECK(gw_equal(diagonalize_gram(Q, offdiag), GwElement::hyperbolic(Q)));
}

TEST_CASE("gram diagonalization over F_p and R") {
    Matrix g = {{Rational(0), Rational(1), Rational(0)},
                {Rational(1), Rational(0), Rational(0)},
                {Rational(0), Rational(0), Rational(3)}};
    BaseField F7 = BaseField::finite(7);
    GwElement expected = GwElement::hyperbolic(F7) + GwElement::unit_form(F7, Rational(3));
    CHECK(gw_equal(diagonalize_gram(F7, g), expected));
    BaseField R = BaseField::reals();
    GwElement expectedR = GwElement::hyperbolic(R) + GwElement::one(R);
    CHECK(gw_equal(diagonalize_gram(R, g), expectedR));
}

TEST_CASE("trace form closed formula matches gram oracle") {
    BaseField Q = BaseField::rationals();
    std::vector<std::vector<Rational>> cases = {
        {Rational(2)},
        {Rational(5)},
        {Rational(-1)},
        {Rational(2), Rational(3)},
        {Rational(2), Rational(5)},
        {Rational(-1), Rational(2)},
        {Rational(2), Rational(3), Rational(5)},
    };
    for (auto& gens : cases) {
        GwElement closed = trace_form(Q, gens);
        GwElement viaGram = diagonalize_gram(Q, trace_form_gram(gens));
        CHECK(gw_equal(closed, viaGram));
    }
    GwElement q = trace_form(Q, {Rational(2), Rational(3)});
    GwElement expected = GwElement::from_diagonal(
        Q, {Rational(1), Rational(2), Rational(3), Rational(6)});
    // subset classes <4 * prod c_i> for gens {2,3}: <1>, <2>, <3>, <6>
    CHECK(gw_equal(q, expected));
    CHECK_THROWS_AS(trace_form(Q, {Rational(2), Rational(8)}), NotIndependent);
    CHECK_THROWS_AS(trace_form(Q, {Rational(4)}), NotIndependent);
}

TEST_CASE("is_effective against small search") {
    BaseField Q = BaseField::rationals();
    std::mt19937 rng(5);
    auto pool = pool_q();
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    // every sum of unit forms is effective
    for (int trial = 0; trial < 40; ++trial) {
        GwElement q(Q);
        int r = 1 + trial % 4;
        for (int i = 0; i < r; ++i) q.add_term(Q.square_class(Rational(pool[pick(rng)])), 1);
        CHECK(is_effective(q));
        CHECK_FALSE(is_effective(q - (Int)(r + 1) * GwElement::one(Q)));
    }
    // rank-2 virtual classes: compare against exhaustive pool search
    std::vector<Int> small = {1, -1, 2, -2, 3, -3, 5, 6};
    for (int trial = 0; trial < 25; ++trial) {
        GwElement q = random_gw(Q, rng, 3, 2);
        Int rank = invariants(q).rank;
        if (rank != 2) continue;
        bool found = false;
        for (Int a : small)
            for (Int b : small)
                if (gw_equal(q, GwElement::from_diagonal(Q, {Rational(a), Rational(b)})))
                    found = true;
        CHECK(is_effective(q) == found);
    }
    CHECK_FALSE(is_effective(-GwElement::one(Q)));
    CHECK_FALSE(is_effective(2 * GwElement::one(Q) - GwElement::unit_form(Q, Rational(-1))));
    CHECK(is_effective(GwElement(Q)));
    CHECK(is_effective(GwElement::hyperbolic(Q) - GwElement::one(Q)));
}

TEST_CASE("invariants of hyperbolic multiples") {
    BaseField Q = BaseField::rationals();
    GwElement H = GwElement::hyperbolic(Q);
    for (int m = 1; m <= 4; ++m) {
        InvariantProfile p = invariants(m * H);
        CHECK(p.rank == 2 * m);
        REQUIRE(p.signature.has_value());
        CHECK(*p.signature == 0);
        CHECK(p.discriminant == Q.square_class(Rational(m % 2 == 1 ? -1 : 1)));
    }
}
