#pragma once

#include <map>
#include <string>

#include "taut/tautbuild.hpp"

namespace taut {

/// Topological data of one shipped family at one beta: the Euler
/// characteristics of X and of a generic hyperplane section Z, plus the
/// declared low-degree Betti numbers of the open complement (integral beta
/// only). These feed the expected-rank formula used to cross-validate the
/// Gröbner rank engine.
struct FamilyCase {
    std::string family;             // "rnc" or "segre"
    int k = 0;                      // rnc degree, 0 for segre
    Rational beta;
    int dim_x = 0;
    int chi_x = 0;
    int chi_z = 0;                  // generic hyperplane section
    std::map<int, long> low_betti;  // dims of H^i(U) for i < dim_x (beta integral)
};

/// Builds the case table for "rnc" (with degree k) or "segre"; validates
/// the family invariants. Integral beta must be positive.
FamilyCase make_family_case(const std::string& family, int k, const Rational& beta);

/// Expected holonomic rank from Euler-characteristic arithmetic:
///   beta not integral: (-1)^dim(X) * chi(U),
///   beta a positive integer: (-1)^dim(X) * (chi(U) - sum_{i<dim X} (-1)^i b_i),
/// where chi(U) = chi(X) - chi(Z).
long expected_rank(const FamilyCase& c);

/// Compares the Gröbner rank of the Fourier-Laplace image of the family's
/// tautological ideal against expected_rank. Infinite rank counts as
/// failure.
bool rank_crosscheck(const FamilyCase& c);

}  // namespace taut
