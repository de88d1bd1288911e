#ifndef GWSYM_FIELD_HPP
#define GWSYM_FIELD_HPP

#include <string>

#include "gwsym/rational.hpp"

namespace gwsym {

// Base field selector. Square classes are stored as canonical integer tokens:
//   Rationals          -> nonzero squarefree integer, sign significant
//   Reals              -> +1 or -1
//   FiniteField(p)     -> 1 or the least quadratic nonresidue mod p (p an odd prime)
//   QuadraticallyClosed -> 1
class BaseField {
public:
    enum class Kind { Rationals, Reals, FiniteField, QuadraticallyClosed };

    static BaseField rationals() { return BaseField(Kind::Rationals, 0); }
    static BaseField reals() { return BaseField(Kind::Reals, 0); }
    static BaseField finite(Int p) {
        if (p == 2 || !is_prime(p)) throw InvalidArgument("FiniteField needs an odd prime");
        return BaseField(Kind::FiniteField, p);
    }
    static BaseField quadratically_closed() { return BaseField(Kind::QuadraticallyClosed, 0); }

    Kind kind() const { return kind_; }
    Int p() const { return p_; }

    bool operator==(const BaseField& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const BaseField& o) const { return !(*this == o); }

    // Canonical square-class token of a nonzero field element.
    Int square_class(const Rational& a) const {
        if (a.is_zero()) throw InvalidArgument("zero has no square class");
        switch (kind_) {
            case Kind::Rationals:
                return squarefree_part(checked_mul(a.num(), a.den()));
            case Kind::Reals:
                return a.sign();
            case Kind::QuadraticallyClosed:
                return 1;
            case Kind::FiniteField: {
                Int v = checked_mul(a.num(), a.den()) % p_;
                if (v < 0) v += p_;
                if (v == 0) throw InvalidArgument("element is zero in F_p");
                return legendre(v, p_) == 1 ? 1 : least_nonresidue(p_);
            }
        }
        throw InternalError("unreachable");
    }

    Int mul_class(Int a, Int b) const {
        switch (kind_) {
            case Kind::Rationals: {
                Int g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
                return checked_mul(a / g, b / g);
            }
            case Kind::Reals:
                return a * b;
            case Kind::QuadraticallyClosed:
                return 1;
            case Kind::FiniteField:
                return a == b ? 1 : (a == 1 ? b : (b == 1 ? a : 1));
        }
        throw InternalError("unreachable");
    }

    // True when signatures make sense (fields with a real embedding in v1).
    bool has_signature() const { return kind_ == Kind::Rationals || kind_ == Kind::Reals; }

    std::string name() const {
        switch (kind_) {
            case Kind::Rationals: return "Q";
            case Kind::Reals: return "R";
            case Kind::QuadraticallyClosed: return "C";
            case Kind::FiniteField: return "F" + std::to_string(p_);
        }
        return "?";
    }

    static BaseField parse(const std::string& s) {
        if (s == "Q") return rationals();
        if (s == "R") return reals();
        if (s == "C") return quadratically_closed();
        if (s.size() > 3 && s.substr(0, 3) == "Fp:") return finite(std::stoll(s.substr(3)));
        if (s.size() > 1 && s[0] == 'F') return finite(std::stoll(s.substr(1)));
        throw InvalidArgument("unknown field: " + s + " (expected Q|R|C|Fp:<p>)");
    }

private:
    BaseField(Kind k, Int p) : kind_(k), p_(p) {}
    Kind kind_;
    Int p_;
};

}  // namespace gwsym

#endif
