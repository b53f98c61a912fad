#pragma once

#include <string>

#include "taut/polynomial.hpp"

namespace taut {

/// Quotient of polynomials, always normalized: gcd(num, den) = 1 and the
/// denominator is monic with respect to grevlex.
class RationalFunction {
  public:
    RationalFunction() = default;
    explicit RationalFunction(Polynomial num);
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction zero(const ContextPtr& ctx) {
        return RationalFunction(Polynomial::zero(ctx));
    }
    static RationalFunction constant(const ContextPtr& ctx, const Rational& c) {
        return RationalFunction(Polynomial::constant(ctx, c));
    }
    static RationalFunction variable(const ContextPtr& ctx, std::size_t i) {
        return RationalFunction(Polynomial::variable(ctx, i));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const ContextPtr& context() const { return num_.context(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    Rational as_constant() const { return num_.as_constant() / den_.as_constant(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    RationalFunction inv() const;
    /// Integer power; negative exponents invert.
    RationalFunction pow(int e) const;

    /// Exact quotient-rule derivative.
    RationalFunction derivative(std::size_t var) const;

    /// Substitution: variable i is replaced by args[i]. All args must share
    /// one context; the result lives in that context.
    RationalFunction compose(const std::vector<RationalFunction>& args) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    std::string str(const TermOrder& ord = TermOrder::grevlex()) const;

  private:
    void normalize();
    void make_monic();
    /// Requires gcd(num, den) = 1 already; only scales the denominator monic.
    static RationalFunction coprime(Polynomial num, Polynomial den);

    Polynomial num_, den_;
};

}  // namespace taut
