#include "gwsym/gram.hpp"

namespace gwsym {

namespace {

// Field operations abstracted so the same elimination runs over Q-like fields
// (exact rationals) and F_p (integers mod p).
struct RatOps {
    using T = Rational;
    T zero() const { return Rational(0); }
    bool is_zero(const T& x) const { return x.is_zero(); }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T div(const T& a, const T& b) const { return a / b; }
    Rational to_rational(const T& x) const { return x; }
};

struct FpOps {
    using T = Int;
    Int p;
    T zero() const { return 0; }
    bool is_zero(const T& x) const { return x % p == 0; }
    T add(const T& a, const T& b) const { return ((a + b) % p + p) % p; }
    T sub(const T& a, const T& b) const { return ((a - b) % p + p) % p; }
    T mul(const T& a, const T& b) const { return (__int128)a * b % p; }
    T div(const T& a, const T& b) const { return mul(a, pow_mod(b, p - 2, p)); }
    Rational to_rational(const T& x) const { return Rational(x); }
};

template <class OPS>
GwElement diagonalize_impl(const BaseField& f, std::vector<std::vector<typename OPS::T>> g,
                           const OPS& ops) {
    const std::size_t n = g.size();
    std::vector<Rational> diag;
    for (std::size_t i = 0; i < n; ++i) {
        if (ops.is_zero(g[i][i])) {
            std::size_t jd = n;
            for (std::size_t j = i + 1; j < n; ++j)
                if (!ops.is_zero(g[j][j])) { jd = j; break; }
            if (jd < n) {
                std::swap(g[i], g[jd]);
                for (std::size_t r = 0; r < n; ++r) std::swap(g[r][i], g[r][jd]);
            } else {
                std::size_t jo = n;
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!ops.is_zero(g[i][j])) { jo = j; break; }
                if (jo == n) throw Degenerate("singular Gram matrix");
                // row/col i += row/col jo; diagonal becomes 2*g[i][jo] (char != 2)
                for (std::size_t c = 0; c < n; ++c) g[i][c] = ops.add(g[i][c], g[jo][c]);
                for (std::size_t r = 0; r < n; ++r) g[r][i] = ops.add(g[r][i], g[r][jo]);
            }
        }
        auto d = g[i][i];
        for (std::size_t j = i + 1; j < n; ++j) {
            if (ops.is_zero(g[j][i])) continue;
            auto factor = ops.div(g[j][i], d);
            for (std::size_t c = 0; c < n; ++c) g[j][c] = ops.sub(g[j][c], ops.mul(factor, g[i][c]));
            for (std::size_t r = 0; r < n; ++r) g[r][j] = ops.sub(g[r][j], ops.mul(factor, g[r][i]));
        }
        diag.push_back(ops.to_rational(d));
    }
    return GwElement::from_diagonal(f, diag);
}

}  // namespace

GwElement diagonalize_gram(const BaseField& f, const Matrix& gram) {
    const std::size_t n = gram.size();
    if (n == 0) return GwElement(f);
    for (std::size_t i = 0; i < n; ++i) {
        if (gram[i].size() != n) throw InvalidArgument("Gram matrix not square");
        for (std::size_t j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i]) throw InvalidArgument("Gram matrix not symmetric");
    }
    if (f.kind() == BaseField::Kind::FiniteField) {
        FpOps ops{f.p()};
        std::vector<std::vector<Int>> g(n, std::vector<Int>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Rational& e = gram[i][j];
                if (e.den() % f.p() == 0) throw InvalidArgument("denominator divisible by p");
                g[i][j] = ops.mul(((e.num() % f.p()) + f.p()) % f.p(),
                                  pow_mod(e.den(), f.p() - 2, f.p()));
            }
        return diagonalize_impl(f, g, ops);
    }
    return diagonalize_impl(f, gram, RatOps{});
}

GwElement trace_form(const BaseField& f, const std::vector<Rational>& gens) {
    const std::size_t s = gens.size();
    if (s > 20) throw InvalidArgument("too many generators");
    std::vector<Int> cls(s);
    for (std::size_t i = 0; i < s; ++i) cls[i] = f.square_class(gens[i]);
    const Int one = f.square_class(Rational(1));
    for (std::size_t mask = 1; mask < (1u << s); ++mask) {
        Int prod = one;
        for (std::size_t i = 0; i < s; ++i)
            if (mask & (1u << i)) prod = f.mul_class(prod, cls[i]);
        if (prod == one)
            throw NotIndependent("generators dependent modulo squares");
    }
    Int two_pow = 1;
    for (std::size_t i = 0; i < s; ++i) two_pow = checked_mul(two_pow, 2);
    GwElement q(f);
    const Int two_cls = f.square_class(Rational(two_pow));
    for (std::size_t mask = 0; mask < (1u << s); ++mask) {
        Int prod = two_cls;
        for (std::size_t i = 0; i < s; ++i)
            if (mask & (1u << i)) prod = f.mul_class(prod, cls[i]);
        q.add_term(prod, 1);
    }
    return q;
}

Matrix trace_form_gram(const std::vector<Rational>& gens) {
    const std::size_t s = gens.size();
    const std::size_t dim = 1u << s;
    Matrix g(dim, std::vector<Rational>(dim, Rational(0)));
    // basis b_S = prod_{i in S} sqrt(c_i); Tr(b_S b_T) = 0 unless S == T,
    // and Tr(b_S^2) = 2^s * prod_{i in S} c_i
    for (std::size_t S = 0; S < dim; ++S) {
        Rational v(1);
        for (std::size_t i = 0; i < s; ++i)
            if (S & (1u << i)) v *= gens[i];
        g[S][S] = Rational((Int)dim) * v;
    }
    return g;
}

}  // namespace gwsym
