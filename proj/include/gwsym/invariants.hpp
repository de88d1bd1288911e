#ifndef GWSYM_INVARIANTS_HPP
#define GWSYM_INVARIANTS_HPP

#include <map>
#include <optional>
#include <set>

#include "gwsym/gw_element.hpp"

namespace gwsym {

// Place of Q: PLACE_INF or a prime (2 allowed).
constexpr Int PLACE_INF = -1;

// Hilbert symbol (a,b)_v over Q. a, b nonzero rationals.
int hilbert_symbol(const Rational& a, const Rational& b, Int place);

// Hasse invariant prod_{i<j} (a_i, a_j)_v of the effective diagonal form given by
// (class, multiplicity) pairs.
int hasse_invariant(const std::map<Int, Int>& diag, Int place);

struct InvariantProfile {
    Int rank = 0;
    std::optional<Int> signature;
    Int discriminant = 1;  // canonical square-class token
    // Hasse data of the effective positive / negative parts at the relevant places.
    std::map<Int, int> hasse_pos;
    std::map<Int, int> hasse_neg;
};

// Places that decide GW(Q)-equality for the classes in play: infinity, 2, and
// odd primes dividing a stored representative.
std::set<Int> relevant_places(const GwElement& q);

InvariantProfile invariants(const GwElement& q);

// Decidable equality in GW(k) via complete invariants per field.
bool gw_equal(const GwElement& x, const GwElement& y);

inline bool gw_is_zero(const GwElement& q) { return gw_equal(q, GwElement(q.field())); }

// Whether q is the class of an actual (non-virtual) form.
bool is_effective(const GwElement& q);

}  // namespace gwsym

#endif
