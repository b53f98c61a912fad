#include "taut/topo_oracle.hpp"

namespace taut {

FamilyCase make_family_case(const std::string& family, int k, const Rational& beta) {
    FamilyCase c;
    c.family = family;
    c.beta = beta;
    if (family == "rnc") {
        if (k < 1) throw error("make_family_case: rnc degree must be positive");
        c.k = k;
        c.dim_x = 1;
        c.chi_x = 2;
        c.chi_z = k;  // k distinct points for generic lambda
        if (beta.is_integer()) c.low_betti = {{0, 1}};  // U connected
    } else if (family == "segre") {
        c.dim_x = 2;
        c.chi_x = 4;
        c.chi_z = 2;  // smooth (1,1) curve
        if (beta.is_integer()) c.low_betti = {{0, 1}, {1, 0}};  // affine quadric surface
    } else {
        throw error("make_family_case: unknown family '" + family + "'");
    }
    if (beta.is_integer() && beta.sign() <= 0)
        throw error("make_family_case: integral beta must be positive");
    return c;
}

long expected_rank(const FamilyCase& c) {
    long chi_u = c.chi_x - c.chi_z;
    long sign = (c.dim_x % 2 == 0) ? 1 : -1;
    long rank;
    if (!c.beta.is_integer()) {
        rank = sign * chi_u;
    } else {
        long low = 0;
        for (const auto& [i, b] : c.low_betti) {
            if (i >= c.dim_x) throw error("expected_rank: low Betti dimension out of range");
            low += ((i % 2 == 0) ? 1 : -1) * b;
        }
        rank = sign * (chi_u - low);
    }
    if (rank < 0) throw error("expected_rank: inconsistent case data (negative rank)");
    return rank;
}

bool rank_crosscheck(const FamilyCase& c) {
    TautSpec spec = c.family == "rnc" ? make_rnc_spec(c.k, c.beta) : make_segre_spec(c.beta);
    auto rank = holonomic_rank(fl_ideal(tautological_generators(spec)));
    if (!rank) return false;  // infinite
    return static_cast<long>(*rank) == expected_rank(c);
}

}  // namespace taut
