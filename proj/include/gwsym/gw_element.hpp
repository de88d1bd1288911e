#ifndef GWSYM_GW_ELEMENT_HPP
#define GWSYM_GW_ELEMENT_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gwsym/field.hpp"

namespace gwsym {

// Virtual quadratic form: finite integer combination of square classes over a
// fixed base field. Terms with zero coefficient are never stored.
class GwElement {
public:
    explicit GwElement(BaseField f) : field_(f) {}

    static GwElement unit_form(const BaseField& f, const Rational& a) {
        GwElement q(f);
        q.terms_[f.square_class(a)] = 1;
        return q;
    }
    static GwElement one(const BaseField& f) { return unit_form(f, Rational(1)); }
    static GwElement hyperbolic(const BaseField& f) {
        GwElement q(f);
        q.add_term(f.square_class(Rational(1)), 1);
        q.add_term(f.square_class(Rational(-1)), 1);
        return q;
    }
    static GwElement from_diagonal(const BaseField& f, const std::vector<Rational>& diag) {
        GwElement q(f);
        for (const auto& d : diag) q.add_term(f.square_class(d), 1);
        return q;
    }

    const BaseField& field() const { return field_; }
    const std::map<Int, Int>& terms() const { return terms_; }
    bool is_syntactic_zero() const { return terms_.empty(); }

    void add_term(Int cls, Int coeff) {
        if (coeff == 0) return;
        auto it = terms_.find(cls);
        if (it == terms_.end()) {
            terms_.emplace(cls, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    GwElement operator-() const {
        GwElement r(field_);
        for (auto& [c, m] : terms_) r.terms_[c] = -m;
        return r;
    }
    friend GwElement operator+(const GwElement& a, const GwElement& b) {
        a.check_field(b);
        GwElement r = a;
        for (auto& [c, m] : b.terms_) r.add_term(c, m);
        return r;
    }
    friend GwElement operator-(const GwElement& a, const GwElement& b) { return a + (-b); }
    friend GwElement operator*(const GwElement& a, const GwElement& b) {
        a.check_field(b);
        GwElement r(a.field_);
        for (auto& [c1, m1] : a.terms_)
            for (auto& [c2, m2] : b.terms_)
                r.add_term(a.field_.mul_class(c1, c2), checked_mul(m1, m2));
        return r;
    }
    friend GwElement operator*(Int n, const GwElement& a) {
        GwElement r(a.field_);
        for (auto& [c, m] : a.terms_) r.add_term(c, checked_mul(n, m));
        return r;
    }
    GwElement& operator+=(const GwElement& o) { return *this = *this + o; }
    GwElement& operator-=(const GwElement& o) { return *this = *this - o; }
    GwElement& operator*=(const GwElement& o) { return *this = *this * o; }

    // Effective positive / negative parts of the stored representation.
    std::pair<GwElement, GwElement> split() const {
        GwElement pos(field_), neg(field_);
        for (auto& [c, m] : terms_) {
            if (m > 0) pos.terms_[c] = m;
            else neg.terms_[c] = -m;
        }
        return {pos, neg};
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [c, m] : terms_) {
            Int a = m < 0 ? -m : m;
            if (first) {
                if (m < 0) os << "-";
            } else {
                os << (m < 0 ? " - " : " + ");
            }
            if (a != 1) os << a << "*";
            os << "<" << c << ">";
            first = false;
        }
        return os.str();
    }

    void check_field(const GwElement& o) const {
        if (field_ != o.field_)
            throw FieldMismatch("GW elements over different base fields: " + field_.name() +
                                " vs " + o.field_.name());
    }

private:
    BaseField field_;
    std::map<Int, Int> terms_;
};

}  // namespace gwsym

#endif
