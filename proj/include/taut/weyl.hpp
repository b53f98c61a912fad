#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "taut/rational_function.hpp"

namespace taut {

/// Variable context of a Weyl algebra: names x_1..x_n with matching partials
/// d_1..d_n. A variable may be declared "localized": its powers (including
/// negative ones) then live in the rational-function coefficients instead of
/// the x-exponent, while its partial still acts as a monomial generator.
class WeylContext {
  public:
    explicit WeylContext(std::vector<std::string> names, std::vector<bool> localized = {});

    std::size_t size() const { return vars_->size(); }
    const ContextPtr& vars() const { return vars_; }
    const std::string& name(std::size_t i) const { return vars_->name(i); }
    bool localized(std::size_t i) const { return localized_[i]; }
    bool has_localized() const { return any_localized_; }

    /// Display name of the i-th partial ("d11" for "x11" when suffixes are
    /// unique, otherwise "dx11").
    const std::string& d_name(std::size_t i) const { return d_names_[i]; }
    /// Index of the variable whose partial is called `token` (without the
    /// leading 'd'), or Context::npos.
    std::size_t partial_index(const std::string& token) const;

    friend bool operator==(const WeylContext& a, const WeylContext& b) {
        return *a.vars_ == *b.vars_ && a.localized_ == b.localized_;
    }

  private:
    ContextPtr vars_;
    std::vector<bool> localized_;
    std::vector<std::string> d_names_;
    bool any_localized_ = false;
};

using WeylContextPtr = std::shared_ptr<const WeylContext>;

WeylContextPtr make_weyl_context(std::vector<std::string> names, std::vector<bool> localized = {});
/// Same variables with the given subset localized.
WeylContextPtr localize(const WeylContextPtr& ctx, const std::vector<std::size_t>& vars);

bool same_context(const WeylContextPtr& a, const WeylContextPtr& b);

/// A normal-ordered differential operator: finite map from combined
/// (x-exponent, d-exponent) monomials to coefficients. Coefficients are
/// rational in the localized variables and constant otherwise. Keys are
/// monomials of length 2n: x-exponents first, then d-exponents.
class WeylElement {
  public:
    using TermMap = std::map<Monomial, RationalFunction>;

    WeylElement() = default;
    explicit WeylElement(WeylContextPtr ctx) : ctx_(std::move(ctx)) {}

    static WeylElement zero(WeylContextPtr ctx) { return WeylElement(std::move(ctx)); }
    static WeylElement constant(WeylContextPtr ctx, const Rational& c);
    static WeylElement x_var(WeylContextPtr ctx, std::size_t i, int power = 1);
    static WeylElement d_var(WeylContextPtr ctx, std::size_t i, int power = 1);
    /// Single term c * x^xexp * d^dexp (exponents of length n each).
    static WeylElement term(WeylContextPtr ctx, const Monomial& xexp, const Monomial& dexp,
                            RationalFunction c);
    /// A polynomial viewed as a d-free operator. Powers of localized
    /// variables move into the coefficient.
    static WeylElement from_polynomial(WeylContextPtr ctx, const Polynomial& p);
    /// The Euler operator x_1 d_1 + ... + x_n d_n.
    static WeylElement euler(WeylContextPtr ctx);

    const WeylContextPtr& context() const { return ctx_; }
    std::size_t nvars() const { return ctx_ ? ctx_->size() : 0; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool has_polynomial_coeffs() const;

    void add_term(const Monomial& key, const RationalFunction& c);

    WeylElement operator-() const;
    WeylElement& operator+=(const WeylElement& o);
    WeylElement& operator-=(const WeylElement& o);
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    WeylElement& operator*=(const WeylElement& o) { return *this = *this * o; }

    WeylElement scaled(const Rational& c) const;
    WeylElement scaled(const RationalFunction& c) const;

    friend bool operator==(const WeylElement& a, const WeylElement& b);
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

    std::optional<std::pair<Monomial, RationalFunction>> leading_term(const TermOrder& ord) const;

    /// Splits a combined key into (x-part, d-part).
    static Monomial x_part(const Monomial& key);
    static Monomial d_part(const Monomial& key);
    static Monomial join(const Monomial& x, const Monomial& d);

    std::string str(const TermOrder& ord = TermOrder::grevlex()) const;

  private:
    WeylContextPtr ctx_;
    TermMap terms_;
};

/// Exact normal-ordered product.
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);

/// The standard D-module transpose x^a d^b -> (-1)^|b| d^b x^a, normal-ordered.
/// An involutive anti-automorphism; requires polynomial coefficients.
WeylElement transpose(const WeylElement& p);

/// Fourier-Laplace as the algebra automorphism x -> -d, d -> x.
/// Requires polynomial coefficients.
WeylElement fourier_laplace(const WeylElement& p);

/// The operator acting on a polynomial; requires polynomial coefficients
/// and no localized variables.
Polynomial apply(const WeylElement& p, const Polynomial& f);

/// Euler homogeneity with deg x = 1, deg d = -1: returns the common degree
/// of all terms, or nullopt if terms disagree. The zero operator reports
/// degree 0.
std::optional<int> euler_degree(const WeylElement& p);

/// Commutator ab - ba.
WeylElement weyl_bracket(const WeylElement& a, const WeylElement& b);

}  // namespace taut
