#pragma once

#include <optional>
#include <vector>

#include "taut/weyl.hpp"

namespace taut {

/// Reduced left Gröbner basis of a left ideal in the Weyl algebra (or in the
/// Weyl algebra with rational-function coefficients in the localized
/// variables). Generators are auto-reduced, monic over the coefficient
/// field, and sorted descending by leading monomial.
struct LeftGB {
    std::vector<WeylElement> basis;
    TermOrder order = TermOrder::grevlex();
    WeylContextPtr context;

    bool is_unit_ideal() const;
};

/// Buchberger for left ideals; normal selection strategy (smallest lcm
/// first). Rejects an empty generator list and zero generators.
LeftGB left_groebner(const std::vector<WeylElement>& gens,
                     const TermOrder& order = TermOrder::grevlex());

/// Full left division remainder: no term divisible by a leading monomial of
/// the basis; p - result lies in the left ideal; result == 0 iff p is a
/// member.
WeylElement weyl_normal_form(const WeylElement& p, const LeftGB& gb);

bool ideal_contains(const LeftGB& gb, const WeylElement& p);

/// True iff both generator lists generate the same left ideal.
bool ideal_equal(const std::vector<WeylElement>& a, const std::vector<WeylElement>& b,
                 const TermOrder& order = TermOrder::grevlex());

/// Moves every x-variable into the coefficient field (all variables
/// localized); input must have polynomial coefficients.
std::vector<WeylElement> localize_all(const std::vector<WeylElement>& gens);

/// Holonomic rank: dim over the rational-function field of the quotient by
/// the left ideal, computed as the number of standard monomials in d after
/// a Gröbner basis over Q(x). nullopt means infinite.
std::optional<unsigned long> holonomic_rank(const std::vector<WeylElement>& gens);

}  // namespace taut
