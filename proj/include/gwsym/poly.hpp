#ifndef GWSYM_POLY_HPP
#define GWSYM_POLY_HPP

#include <map>
#include <vector>

#include "gwsym/rational.hpp"
#include "gwsym/ring.hpp"

namespace gwsym {

// Sparse multivariate polynomial with rational coefficients, used to derive
// the universal big-Witt multiplication polynomials.
struct Poly {
    // exponent vector (fixed length nvars) -> coefficient
    std::map<std::vector<int>, Rational> terms;
    int nvars = 0;

    static Poly constant(int nvars, const Rational& c) {
        Poly p;
        p.nvars = nvars;
        if (!c.is_zero()) p.terms[std::vector<int>(nvars, 0)] = c;
        return p;
    }
    static Poly var(int nvars, int idx) {
        Poly p;
        p.nvars = nvars;
        std::vector<int> e(nvars, 0);
        e[idx] = 1;
        p.terms[e] = Rational(1);
        return p;
    }

    void add_term(const std::vector<int>& e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (auto& [e, c] : b.terms) r.add_term(e, c);
        return r;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [e, c] : r.terms) c = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        r.nvars = a.nvars;
        for (auto& [ea, ca] : a.terms)
            for (auto& [eb, cb] : b.terms) {
                std::vector<int> e = ea;
                for (int i = 0; i < r.nvars; ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }

    bool integral() const {
        for (auto& [e, c] : terms)
            if (!c.is_integer()) return false;
        return true;
    }
};

inline Ring<Poly> poly_ring(int nvars) {
    Ring<Poly> r;
    r.name = "Q[x_1..x_" + std::to_string(nvars) + "]";
    r.eq = [](const Poly& a, const Poly& b) { return a == b; };
    r.add = [](const Poly& a, const Poly& b) { return a + b; };
    r.mul = [](const Poly& a, const Poly& b) { return a * b; };
    r.neg = [](const Poly& a) { return -a; };
    r.zero = Poly::constant(nvars, Rational(0));
    r.one = Poly::constant(nvars, Rational(1));
    r.from_int = [nvars](Int n) { return Poly::constant(nvars, Rational(n)); };
    r.str = [](const Poly&) { return std::string("<poly>"); };
    r.div_int = [](const Poly& a, Int n) -> std::optional<Poly> {
        Poly r2 = a;
        for (auto& [e, c] : r2.terms) c = c / Rational(n);
        return r2;
    };
    r.torsion_free = true;
    return r;
}

}  // namespace gwsym

#endif
