#include "taut/rational_function.hpp"

namespace taut {

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.context(), Rational(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    require_same_context(num_.context(), den_.context(), "RationalFunction");
    if (den_.is_zero()) throw error("RationalFunction: zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.context(), Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = Polynomial::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = Polynomial::div_exact(num_, g);
            den_ = Polynomial::div_exact(den_, g);
        }
    }
    make_monic();
}

void RationalFunction::make_monic() {
    if (den_.is_constant()) {
        Rational c = den_.as_constant();
        if (!c.is_one()) {
            num_ = num_.scaled(c.inv());
            den_ = Polynomial::constant(num_.context(), Rational(1));
        }
        return;
    }
    Rational lc = den_.leading_term(TermOrder::grevlex())->second;
    if (!lc.is_one()) {
        Rational inv = lc.inv();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction RationalFunction::coprime(Polynomial num, Polynomial den) {
    RationalFunction r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    if (r.num_.is_zero())
        r.den_ = Polynomial::constant(r.num_.context(), Rational(1));
    else
        r.make_monic();
    return r;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ + b.num_);
    // n1/d1 + n2/d2 with g = gcd(d1, d2): only the g part can cancel
    Polynomial g = Polynomial::gcd(a.den_, b.den_);
    if (g.is_constant()) {
        Polynomial num = a.num_ * b.den_ + b.num_ * a.den_;
        if (num.is_zero()) return RationalFunction::zero(a.context());
        return RationalFunction::coprime(std::move(num), a.den_ * b.den_);
    }
    Polynomial d1 = Polynomial::div_exact(a.den_, g), d2 = Polynomial::div_exact(b.den_, g);
    Polynomial num = a.num_ * d2 + b.num_ * d1;
    if (num.is_zero()) return RationalFunction::zero(a.context());
    Polynomial h = Polynomial::gcd(num, g);
    if (h.is_constant()) return RationalFunction::coprime(std::move(num), d1 * d2 * g);
    return RationalFunction::coprime(Polynomial::div_exact(num, h),
                                     d1 * d2 * Polynomial::div_exact(g, h));
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction::zero(a.context());
    if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
    // cross-cancel so the product is coprime by construction
    Polynomial g1 = Polynomial::gcd(a.num_, b.den_), g2 = Polynomial::gcd(b.num_, a.den_);
    Polynomial n1 = g1.is_constant() ? a.num_ : Polynomial::div_exact(a.num_, g1);
    Polynomial d2 = g1.is_constant() ? b.den_ : Polynomial::div_exact(b.den_, g1);
    Polynomial n2 = g2.is_constant() ? b.num_ : Polynomial::div_exact(b.num_, g2);
    Polynomial d1 = g2.is_constant() ? a.den_ : Polynomial::div_exact(a.den_, g2);
    return RationalFunction::coprime(n1 * n2, d1 * d2);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw error("RationalFunction: division by the zero function");
    return a * b.inv();
}

RationalFunction RationalFunction::inv() const {
    if (is_zero()) throw error("RationalFunction: inverse of the zero function");
    return RationalFunction::coprime(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
    if (e == 0) return constant(context(), Rational(1));
    if (e < 0) return inv().pow(-e);
    return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
    if (is_polynomial()) return RationalFunction(num_.derivative(var));
    return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                            den_ * den_);
}

namespace {

RationalFunction compose_poly(const Polynomial& p, const std::vector<RationalFunction>& args) {
    if (args.empty()) throw error("compose: empty substitution");
    const ContextPtr& target = args.front().context();
    RationalFunction acc = RationalFunction::zero(target);
    for (const auto& [m, c] : p.terms()) {
        RationalFunction t = RationalFunction::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) t *= args[i].pow(m[i]);
        acc += t;
    }
    return acc;
}

}  // namespace

RationalFunction RationalFunction::compose(const std::vector<RationalFunction>& args) const {
    if (args.size() != num_.nvars()) throw error("compose: substitution arity mismatch");
    RationalFunction d = compose_poly(den_, args);
    if (d.is_zero()) throw error("compose: denominator vanishes under substitution");
    return compose_poly(num_, args) / d;
}

std::string RationalFunction::str(const TermOrder& ord) const {
    if (is_polynomial()) return num_.str(ord);
    std::string n = num_.str(ord), d = den_.str(ord);
    auto paren = [](const std::string& s) {
        return s.find_first_of("+- ") == std::string::npos ? s : "(" + s + ")";
    };
    return paren(n) + "/" + paren(d);
}

}  // namespace taut
