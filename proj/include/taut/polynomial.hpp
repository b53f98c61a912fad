#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "taut/context.hpp"
#include "taut/monomial.hpp"
#include "taut/term_order.hpp"

namespace taut {

/// Exact multivariate polynomial over Q. Terms are a finite map from
/// monomials to nonzero coefficients; the context is shared and fixed.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }
    static Polynomial constant(ContextPtr ctx, const Rational& c);
    static Polynomial variable(ContextPtr ctx, std::size_t i, int power = 1);
    static Polynomial term(ContextPtr ctx, Monomial m, const Rational& c);

    const ContextPtr& context() const { return ctx_; }
    std::size_t nvars() const { return ctx_ ? ctx_->size() : 0; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    /// The coefficient of the unit monomial (0 when absent).
    Rational constant_value() const;
    /// Requires is_constant().
    Rational as_constant() const;

    Rational coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);

    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(std::size_t var) const;
    bool is_homogeneous() const;
    bool uses_var(std::size_t var) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Rational& c) const;
    Polynomial mul_term(const Monomial& m, const Rational& c) const;
    Polynomial pow(unsigned e) const;

    Polynomial derivative(std::size_t var) const;

    /// Largest term under the given order; nullopt for zero.
    std::optional<std::pair<Monomial, Rational>> leading_term(const TermOrder& ord) const;

    /// Rational content c > 0 such that this / c has coprime integer
    /// coefficients; 0 for the zero polynomial.
    Rational content() const;
    /// this / content(), with sign fixed so the leading coefficient under
    /// `ord` is positive.
    Polynomial primitive_part(const TermOrder& ord = TermOrder::grevlex()) const;

    /// gcd by content/primitive-part recursion on the last variable.
    /// Result is primitive with positive leading coefficient (grevlex).
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    /// Exact division; throws if the remainder is nonzero.
    static Polynomial div_exact(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Term-sorted text form, e.g. "4*z0*z2 - z1^2".
    std::string str(const TermOrder& ord = TermOrder::grevlex()) const;

  private:
    void check_ctx(const Polynomial& o, const char* where) const {
        require_same_context(ctx_, o.ctx_, where);
    }

    ContextPtr ctx_;
    TermMap terms_;
};

}  // namespace taut
