#pragma once

#include <vector>

#include "taut/polynomial.hpp"

namespace taut {

/// Reduced Gröbner basis of a commutative polynomial ideal. Generators are
/// monic, fully inter-reduced, and sorted descending by leading monomial.
struct GroebnerBasis {
    std::vector<Polynomial> basis;
    TermOrder order = TermOrder::grevlex();
};

/// Buchberger with the normal (smallest-lcm-first) selection strategy.
GroebnerBasis comm_groebner(const std::vector<Polynomial>& gens,
                            const TermOrder& order = TermOrder::grevlex());

/// Remainder of full multivariate division: no term of the result is
/// divisible by a leading monomial of the basis, and p - result lies in
/// the ideal.
Polynomial poly_normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// Membership test via normal form.
bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p);

}  // namespace taut
