#pragma once

#include "taut/comm_groebner.hpp"
#include "taut/repspec.hpp"
#include "taut/rootsys.hpp"
#include "taut/weyl_groebner.hpp"

namespace taut {

/// Input data of a tautological system: a representation, the cone ideal of
/// the invariant subvariety, and the character beta (zero off the scaling
/// generator for semisimple groups). Construction validates the RepSpec,
/// homogeneity of the cone generators, and stability of the ideal under
/// every action field.
class TautSpec {
  public:
    TautSpec(RepSpec rep, WeylContextPtr ctx, std::vector<Polynomial> cone_ideal,
             std::map<std::string, Rational> beta);

    const RepSpec& rep() const { return rep_; }
    const WeylContextPtr& context() const { return ctx_; }
    const std::vector<Polynomial>& cone_ideal() const { return cone_; }
    Rational beta_of(std::size_t basis_index) const;
    Rational beta_e() const { return beta_of(rep_.scaling_index()); }

  private:
    RepSpec rep_;
    WeylContextPtr ctx_;
    std::vector<Polynomial> cone_;
    std::map<std::string, Rational> beta_;
};

/// Scaled binomial quadrics cutting out the degree-k rational normal curve
/// cone, deduplicated by normal form against the already-accepted ones.
std::vector<Polynomial> rnc_ideal(int k, const ContextPtr& ctx);

/// {x11*x22 - x21*x12}.
std::vector<Polynomial> segre_ideal(const ContextPtr& ctx);

/// Standard variable contexts for the shipped families.
WeylContextPtr rnc_context(int k);
WeylContextPtr segre_context();

TautSpec make_rnc_spec(int k, const Rational& beta_e);
TautSpec make_segre_spec(const Rational& beta_e);

/// Generators of the defining left ideal: the cone generators as d-free
/// operators, then Z(xi) - trace(dRho(xi)) + beta(xi) per basis element.
/// Every output is Euler-homogeneous.
std::vector<WeylElement> tautological_generators(const TautSpec& spec);

/// Generator-wise Fourier-Laplace image; FL being an automorphism, the
/// images generate the transformed ideal.
std::vector<WeylElement> fl_ideal(const std::vector<WeylElement>& gens);

/// Checks that Z(C) acts on every monomial of degree <= dmax as
/// Z(e)^2 |mu|^2 - 2 Z(e) <delta,mu> modulo the cone ideal.
bool casimir_action_check(const TautSpec& spec, const RootSystem& rs, const Weight& mu, int dmax);

/// Membership of Z(C) - (E+n)^2 |mu|^2 + 2 (E+n) <delta,mu> in the left
/// ideal generated by the cone ideal (n = dim V).
bool casimir_euler_membership(const TautSpec& spec, const RootSystem& rs, const Weight& mu);

}  // namespace taut
