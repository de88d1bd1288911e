#include "gwsym/invariants.hpp"

namespace gwsym {

namespace {

int eps2(Int u) {  // (u-1)/2 mod 2 for odd u
    Int m = ((u % 4) + 4) % 4;
    return m == 3 ? 1 : 0;
}

int omega2(Int u) {  // (u^2-1)/8 mod 2 for odd u
    Int m = ((u % 8) + 8) % 8;
    return (m == 1 || m == 7) ? 0 : 1;
}

int sign_pow(int s, Int e) { return (e & 1) ? s : 1; }

int hilbert_int(Int A, Int B, Int place) {
    if (A == 0 || B == 0) throw InvalidArgument("hilbert symbol of zero");
    if (place == PLACE_INF) return (A < 0 && B < 0) ? -1 : 1;
    Int p = place;
    if (p < 2 || !is_prime(p)) throw InvalidArgument("hilbert symbol: place must be a prime or infinity");
    Int alpha = v_adic(A, p), beta = v_adic(B, p);
    Int u = A, w = B;
    for (Int i = 0; i < alpha; ++i) u /= p;
    for (Int i = 0; i < beta; ++i) w /= p;
    if (p == 2) {
        int e = (eps2(u) * eps2(w) + (int)(alpha & 1) * omega2(w) + (int)(beta & 1) * omega2(u)) & 1;
        return e ? -1 : 1;
    }
    int r = 1;
    if ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1) r = -r;
    r *= sign_pow(legendre(u, p), beta);
    r *= sign_pow(legendre(w, p), alpha);
    return r;
}

bool is_square_in_Qv(Int d, Int place) {  // d a squarefree integer
    if (place == PLACE_INF) return d > 0;
    if (place == 2) {
        if (d % 2 == 0) return false;
        return ((d % 8) + 8) % 8 == 1;
    }
    return d % place != 0 && legendre(d, place) == 1;
}

Int disc_of_terms(const BaseField& f, const std::map<Int, Int>& terms) {
    Int d = f.square_class(Rational(1));
    for (auto& [c, m] : terms)
        if (m & 1) d = f.mul_class(d, c);
    return d;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, Int place) {
    return hilbert_int(checked_mul(a.num(), a.den()), checked_mul(b.num(), b.den()), place);
}

int hasse_invariant(const std::map<Int, Int>& diag, Int place) {
    int h = 1;
    Int running_disc = 1;
    for (auto& [c, m] : diag) {
        if (m < 0) throw InvalidArgument("hasse_invariant needs an effective form");
        // pairs within the m copies of <c>
        h *= sign_pow(hilbert_int(c, c, place), (m * (m - 1) / 2));
        // pairs against everything accumulated so far
        h *= sign_pow(hilbert_int(running_disc, c, place), m);
        if (m & 1) {
            Int g = std::gcd(running_disc < 0 ? -running_disc : running_disc, c < 0 ? -c : c);
            running_disc = checked_mul(running_disc / g, c / g);
        }
    }
    return h;
}

std::set<Int> relevant_places(const GwElement& q) {
    std::set<Int> places = {PLACE_INF, 2};
    for (auto& [c, m] : q.terms())
        for (Int p : prime_factors(c))
            places.insert(p);
    return places;
}

InvariantProfile invariants(const GwElement& q) {
    const BaseField& f = q.field();
    InvariantProfile prof;
    for (auto& [c, m] : q.terms()) prof.rank += m;
    prof.discriminant = disc_of_terms(f, q.terms());
    if (f.has_signature()) {
        Int s = 0;
        for (auto& [c, m] : q.terms()) s += (c < 0 ? -m : m);
        prof.signature = s;
    }
    if (f.kind() == BaseField::Kind::Rationals) {
        auto [pos, neg] = q.split();
        for (Int v : relevant_places(q)) {
            prof.hasse_pos[v] = hasse_invariant(pos.terms(), v);
            prof.hasse_neg[v] = hasse_invariant(neg.terms(), v);
        }
    }
    return prof;
}

bool gw_equal(const GwElement& x, const GwElement& y) {
    x.check_field(y);
    const BaseField& f = x.field();
    GwElement d = x - y;
    if (d.is_syntactic_zero()) return true;
    auto [pos, neg] = d.split();

    Int rank_pos = 0, rank_neg = 0;
    for (auto& [c, m] : pos.terms()) rank_pos += m;
    for (auto& [c, m] : neg.terms()) rank_neg += m;
    if (rank_pos != rank_neg) return false;

    switch (f.kind()) {
        case BaseField::Kind::QuadraticallyClosed:
            return true;
        case BaseField::Kind::Reals: {
            Int sp = 0, sn = 0;
            for (auto& [c, m] : pos.terms()) sp += (c < 0 ? -m : m);
            for (auto& [c, m] : neg.terms()) sn += (c < 0 ? -m : m);
            return sp == sn;
        }
        case BaseField::Kind::FiniteField:
            return disc_of_terms(f, pos.terms()) == disc_of_terms(f, neg.terms());
        case BaseField::Kind::Rationals: {
            Int sp = 0, sn = 0;
            for (auto& [c, m] : pos.terms()) sp += (c < 0 ? -m : m);
            for (auto& [c, m] : neg.terms()) sn += (c < 0 ? -m : m);
            if (sp != sn) return false;
            if (disc_of_terms(f, pos.terms()) != disc_of_terms(f, neg.terms())) return false;
            std::set<Int> places = relevant_places(d);
            for (Int v : places)
                if (hasse_invariant(pos.terms(), v) != hasse_invariant(neg.terms(), v))
                    return false;
            return true;
        }
    }
    throw InternalError("unreachable");
}

bool is_effective(const GwElement& q) {
    const BaseField& f = q.field();
    InvariantProfile prof = invariants(q);
    Int r = prof.rank;
    if (r < 0) return false;
    if (r == 0) return gw_is_zero(q);

    switch (f.kind()) {
        case BaseField::Kind::QuadraticallyClosed:
            return true;
        case BaseField::Kind::FiniteField:
            return true;  // any rank >= 1 with any discriminant is realizable
        case BaseField::Kind::Reals: {
            Int s = *prof.signature;
            return (s <= r && -s <= r && ((r - s) % 2 == 0));
        }
        case BaseField::Kind::Rationals:
            break;
    }

    Int s = *prof.signature;
    if (s > r || -s > r || (r - s) % 2 != 0) return false;
    Int n_minus = (r - s) / 2;
    Int d = prof.discriminant;
    if ((d > 0) != (n_minus % 2 == 0)) return false;

    // Hasse invariant any effective representative F must have, from F + N ~ P.
    auto [pos, neg] = q.split();
    Int disc_neg = disc_of_terms(f, neg.terms());
    std::set<Int> places = relevant_places(q);
    for (Int v : places) {
        int eps = hasse_invariant(pos.terms(), v) * hasse_invariant(neg.terms(), v) *
                  hilbert_symbol(Rational(d), Rational(disc_neg), v);
        if (v == PLACE_INF) {
            int want = (n_minus * (n_minus - 1) / 2) % 2 ? -1 : 1;
            if (eps != want) return false;
            continue;
        }
        if (r == 1 && eps != 1) return false;
        if (r == 2 && is_square_in_Qv(f.mul_class(-1, d), v) && eps != 1) return false;
    }
    return true;
}

}  // namespace gwsym
