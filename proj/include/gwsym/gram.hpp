#ifndef GWSYM_GRAM_HPP
#define GWSYM_GRAM_HPP

#include <vector>

#include "gwsym/gw_element.hpp"

namespace gwsym {

using Matrix = std::vector<std::vector<Rational>>;

// Congruence-diagonalize a nondegenerate symmetric Gram matrix and return the
// class sum of its diagonal entries.
GwElement diagonalize_gram(const BaseField& f, const Matrix& gram);

// Trace form of k(sqrt(c_1), ..., sqrt(c_s)) for multiplicatively independent
// generators: the orthogonal sum of <2^s * prod_{i in S} c_i> over subsets S.
GwElement trace_form(const BaseField& f, const std::vector<Rational>& gens);

// Gram matrix of the trace pairing on the monomial basis of k(sqrt(c_i)).
Matrix trace_form_gram(const std::vector<Rational>& gens);

}  // namespace gwsym

#endif
