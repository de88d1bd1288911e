#ifndef GWSYM_A_STRUCTURE_HPP
#define GWSYM_A_STRUCTURE_HPP

#include <random>

#include "gwsym/invariants.hpp"
#include "gwsym/report.hpp"
#include "gwsym/series.hpp"

namespace gwsym {

// The 2-torsion term <2> + <alpha> - <1> - <2 alpha>.
GwElement torsion_term(const BaseField& f, Int alpha_class);

// a_n(<alpha>) = <alpha^n> + n(n-1)/2 * torsion_term(alpha).
GwElement a_generator(const BaseField& f, Int alpha_class, Int n);
GwElement a_generator(const BaseField& f, const Rational& alpha, Int n);

// a_n on arbitrary virtual forms, via the canonical diagonal representation,
// convolution over generators, and series inversion for negative parts.
GwElement a_n(const GwElement& q, Int n);
Series<GwElement> a_series(const GwElement& q, int N);

// GW(k) as a coefficient ring carrying the a_* power structure.
Ring<GwElement> gw_ring(const BaseField& f);
// Same ring without the power structure hooks (plain coefficients).
Ring<GwElement> gw_plain_ring(const BaseField& f);

enum class SymVariant { Factorial, NonFactorial };

// McGarraghy symmetric powers. The factorial variant needs an effective form
// and a characteristic-zero field; the non-factorial one extends S^n<a> = <a^n>
// by the same convolution scheme as a_*.
GwElement mcgarraghy_sym(const GwElement& q, Int n, SymVariant variant);

// Random small virtual forms for property testing.
GwElement sample_gw(const BaseField& f, std::mt19937& rng, int max_terms = 3,
                    Int max_coeff = 2);
GwElement sample_effective_gw(const BaseField& f, std::mt19937& rng, int max_rank = 6);

// Does the named ring map respect the power structures on both sides?
// Names: "rank", "base-change-Q-R", "base-change-Q-C".
PropertyReport respects_check(const std::string& map_name, const BaseField& source,
                              unsigned seed, int samples, int N = 8);

// Brute-force probe of the exponent E with disc(a_n(q)) = disc(q)^E(n, rank q).
struct DiscProbeReport {
    struct ConventionFit {
        std::string convention;           // "plain" or "signed"
        bool fits_paper_exponent = true;  // E = C(n+r-1, n)
        bool fits_shifted_exponent = true;  // E = C(n+r-1, n-1)
        std::string paper_witness;
        std::string shifted_witness;
    };
    std::vector<ConventionFit> fits;
    int max_rank = 0, max_n = 0, samples = 0;

    bool resolved() const {
        for (auto& f : fits)
            if (f.fits_paper_exponent || f.fits_shifted_exponent) return true;
        return false;
    }
    std::string summary() const;
};

DiscProbeReport probe_disc_exponent(const BaseField& f, int max_rank = 4, int max_n = 6);

}  // namespace gwsym

#endif
