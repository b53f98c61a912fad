#include "taut/weyl.hpp"

#include <algorithm>
#include <sstream>

namespace taut {

WeylContext::WeylContext(std::vector<std::string> names, std::vector<bool> localized)
    : vars_(make_context(std::move(names))), localized_(std::move(localized)) {
    if (localized_.empty()) localized_.assign(vars_->size(), false);
    if (localized_.size() != vars_->size())
        throw error("WeylContext: localized mask length mismatch");
    for (bool b : localized_) any_localized_ = any_localized_ || b;

    // short partial names ("d11" for "x11") when every suffix is unique
    bool short_ok = true;
    std::vector<std::string> suffixes;
    for (const auto& n : vars_->names()) {
        if (n.size() < 2) {
            short_ok = false;
            break;
        }
        suffixes.push_back(n.substr(1));
    }
    if (short_ok)
        for (std::size_t i = 0; i < suffixes.size() && short_ok; ++i)
            for (std::size_t j = i + 1; j < suffixes.size(); ++j)
                if (suffixes[i] == suffixes[j]) {
                    short_ok = false;
                    break;
                }
    for (std::size_t i = 0; i < vars_->size(); ++i)
        d_names_.push_back("d" + (short_ok ? suffixes[i] : vars_->name(i)));
}

std::size_t WeylContext::partial_index(const std::string& token) const {
    for (std::size_t i = 0; i < size(); ++i)
        if (d_names_[i] == "d" + token) return i;
    // fall back to the full variable name
    std::size_t i = vars_->index_of(token);
    if (i != Context::npos) return i;
    // or a unique suffix match
    std::size_t hit = Context::npos;
    for (std::size_t j = 0; j < size(); ++j) {
        const std::string& n = vars_->name(j);
        if (n.size() >= 2 && n.substr(1) == token) {
            if (hit != Context::npos) return Context::npos;
            hit = j;
        }
    }
    return hit;
}

WeylContextPtr make_weyl_context(std::vector<std::string> names, std::vector<bool> localized) {
    return std::make_shared<const WeylContext>(std::move(names), std::move(localized));
}

WeylContextPtr localize(const WeylContextPtr& ctx, const std::vector<std::size_t>& vars) {
    std::vector<bool> mask(ctx->size(), false);
    for (std::size_t i = 0; i < ctx->size(); ++i) mask[i] = ctx->localized(i);
    for (std::size_t v : vars) {
        if (v >= ctx->size()) throw error("localize: variable index out of range");
        mask[v] = true;
    }
    return make_weyl_context(ctx->vars()->names(), std::move(mask));
}

bool same_context(const WeylContextPtr& a, const WeylContextPtr& b) {
    return a == b || (a && b && *a == *b);
}

static void require_same(const WeylContextPtr& a, const WeylContextPtr& b, const char* where) {
    if (!same_context(a, b)) throw error(std::string(where) + ": operator context mismatch");
}

Monomial WeylElement::x_part(const Monomial& key) {
    std::size_t n = key.size() / 2;
    std::vector<int> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = key[i];
    return Monomial(std::move(e));
}

Monomial WeylElement::d_part(const Monomial& key) {
    std::size_t n = key.size() / 2;
    std::vector<int> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = key[n + i];
    return Monomial(std::move(e));
}

Monomial WeylElement::join(const Monomial& x, const Monomial& d) {
    std::vector<int> e;
    e.reserve(x.size() * 2);
    for (std::size_t i = 0; i < x.size(); ++i) e.push_back(x[i]);
    for (std::size_t i = 0; i < d.size(); ++i) e.push_back(d[i]);
    return Monomial(std::move(e));
}

WeylElement WeylElement::constant(WeylContextPtr ctx, const Rational& c) {
    WeylElement p(std::move(ctx));
    if (!c.is_zero())
        p.terms_.emplace(Monomial(2 * p.nvars()),
                         RationalFunction::constant(p.ctx_->vars(), c));
    return p;
}

WeylElement WeylElement::x_var(WeylContextPtr ctx, std::size_t i, int power) {
    WeylElement p(std::move(ctx));
    if (i >= p.nvars()) throw error("WeylElement: variable index out of range");
    if (p.ctx_->localized(i)) {
        RationalFunction c = RationalFunction::variable(p.ctx_->vars(), i).pow(power);
        p.terms_.emplace(Monomial(2 * p.nvars()), std::move(c));
    } else {
        Monomial key(2 * p.nvars());
        key[i] = power;
        p.terms_.emplace(std::move(key), RationalFunction::constant(p.ctx_->vars(), Rational(1)));
    }
    return p;
}

WeylElement WeylElement::d_var(WeylContextPtr ctx, std::size_t i, int power) {
    WeylElement p(std::move(ctx));
    if (i >= p.nvars()) throw error("WeylElement: variable index out of range");
    Monomial key(2 * p.nvars());
    key[p.nvars() + i] = power;
    p.terms_.emplace(std::move(key), RationalFunction::constant(p.ctx_->vars(), Rational(1)));
    return p;
}

WeylElement WeylElement::term(WeylContextPtr ctx, const Monomial& xexp, const Monomial& dexp,
                              RationalFunction c) {
    WeylElement p(std::move(ctx));
    if (xexp.size() != p.nvars() || dexp.size() != p.nvars())
        throw error("WeylElement: exponent length mismatch");
    p.add_term(join(xexp, dexp), std::move(c));
    return p;
}

WeylElement WeylElement::from_polynomial(WeylContextPtr ctx, const Polynomial& p) {
    WeylElement r(std::move(ctx));
    require_same_context(r.ctx_->vars(), p.context(), "from_polynomial");
    const std::size_t n = r.nvars();
    for (const auto& [m, c] : p.terms()) {
        Monomial key(2 * n);
        RationalFunction coeff = RationalFunction::constant(r.ctx_->vars(), c);
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] == 0) continue;
            if (r.ctx_->localized(i))
                coeff *= RationalFunction::variable(r.ctx_->vars(), i).pow(m[i]);
            else
                key[i] = m[i];
        }
        r.add_term(key, coeff);
    }
    return r;
}

WeylElement WeylElement::euler(WeylContextPtr ctx) {
    WeylElement r(ctx);
    for (std::size_t i = 0; i < ctx->size(); ++i)
        r += weyl_mul(x_var(ctx, i), d_var(ctx, i));
    return r;
}

bool WeylElement::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& [key, c] = *terms_.begin();
    return key.is_unit() && c.is_constant();
}

bool WeylElement::has_polynomial_coeffs() const {
    for (const auto& [key, c] : terms_)
        if (!c.is_constant()) return false;
    return true;
}

void WeylElement::add_term(const Monomial& key, const RationalFunction& c) {
    if (key.size() != 2 * nvars()) throw error("WeylElement: key length mismatch");
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < nvars(); ++i)
        if (ctx_->localized(i) && key[i] != 0)
            throw error("WeylElement: x-exponent on a localized variable");
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylElement WeylElement::operator-() const {
    WeylElement r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
    require_same(ctx_, o.ctx_, "weyl_add");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
    require_same(ctx_, o.ctx_, "weyl_sub");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

WeylElement WeylElement::scaled(const Rational& c) const {
    return scaled(RationalFunction::constant(ctx_->vars(), c));
}

WeylElement WeylElement::scaled(const RationalFunction& c) const {
    WeylElement r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

bool operator==(const WeylElement& a, const WeylElement& b) {
    if (!same_context(a.ctx_, b.ctx_)) return false;
    return a.terms_ == b.terms_;
}

std::optional<std::pair<Monomial, RationalFunction>> WeylElement::leading_term(
    const TermOrder& ord) const {
    if (terms_.empty()) return std::nullopt;
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return std::make_pair(best->first, best->second);
}

namespace {

// Normal-orders d^da past cb * x^xb (exponents of length n), then appends
// the outer factors: result += ca * x^xa * (...) * d^db.
void accumulate_product(WeylElement& out, const WeylContextPtr& ctx, const Monomial& xa,
                        const Monomial& da, const RationalFunction& ca, const Monomial& xb,
                        const Monomial& db, const RationalFunction& cb) {
    const std::size_t n = ctx->size();
    struct Partial {
        RationalFunction coeff;
        Monomial x;  // remaining right x-exponent
        Monomial d;  // surviving left d-exponent
    };
    std::vector<Partial> parts{{cb, xb, da}};
    for (std::size_t i = 0; i < n; ++i) {
        if (da[i] == 0) continue;
        std::vector<Partial> next;
        for (const auto& p : parts) {
            if (ctx->localized(i)) {
                // d_i^m acting on a function of the localized variable:
                // sum_j binom(m,j) f^(j) d_i^(m-j)
                RationalFunction deriv = p.coeff;
                for (int j = 0; j <= da[i]; ++j) {
                    if (!deriv.is_zero()) {
                        Partial q = p;
                        q.coeff = deriv * RationalFunction::constant(
                                              ctx->vars(), Rational::binomial(da[i], j));
                        q.d[i] = da[i] - j;
                        next.push_back(std::move(q));
                    }
                    if (j < da[i]) deriv = deriv.derivative(i);
                }
            } else {
                // d_i^m x_i^a = sum_k binom(m,k) a!/(a-k)! x_i^(a-k) d_i^(m-k)
                int top = std::min(da[i], p.x[i]);
                for (int k = 0; k <= top; ++k) {
                    Partial q = p;
                    Rational f = Rational::binomial(da[i], k) *
                                 Rational::falling_factorial(p.x[i], k);
                    q.coeff = p.coeff * RationalFunction::constant(ctx->vars(), f);
                    q.x[i] = p.x[i] - k;
                    q.d[i] = da[i] - k;
                    next.push_back(std::move(q));
                }
            }
        }
        parts = std::move(next);
    }
    for (const auto& p : parts) {
        Monomial key(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            key[i] = xa[i] + p.x[i];
            key[n + i] = p.d[i] + db[i];
        }
        out.add_term(key, ca * p.coeff);
    }
}

}  // namespace

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    return weyl_mul(a, b);
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
    require_same(a.context(), b.context(), "weyl_mul");
    WeylElement out(a.context());
    for (const auto& [ka, ca] : a.terms()) {
        Monomial xa = WeylElement::x_part(ka), da = WeylElement::d_part(ka);
        for (const auto& [kb, cb] : b.terms()) {
            Monomial xb = WeylElement::x_part(kb), db = WeylElement::d_part(kb);
            accumulate_product(out, a.context(), xa, da, ca, xb, db, cb);
        }
    }
    return out;
}

WeylElement weyl_bracket(const WeylElement& a, const WeylElement& b) {
    return weyl_mul(a, b) - weyl_mul(b, a);
}

WeylElement transpose(const WeylElement& p) {
    if (p.context()->has_localized() || !p.has_polynomial_coeffs())
        throw error("transpose: unsupported for localized coefficients");
    WeylElement out(p.context());
    const std::size_t n = p.nvars();
    Monomial zero(n);
    for (const auto& [key, c] : p.terms()) {
        Monomial x = WeylElement::x_part(key), d = WeylElement::d_part(key);
        RationalFunction cc = (d.degree() % 2 == 0) ? c : -c;
        // (-1)^|d| d^d x^x, normal-ordered
        accumulate_product(out, p.context(), zero, d, cc, x, zero,
                           RationalFunction::constant(p.context()->vars(), Rational(1)));
    }
    return out;
}

WeylElement fourier_laplace(const WeylElement& p) {
    if (p.context()->has_localized() || !p.has_polynomial_coeffs())
        throw error("fourier_laplace: unsupported for localized coefficients");
    WeylElement out(p.context());
    const std::size_t n = p.nvars();
    Monomial zero(n);
    for (const auto& [key, c] : p.terms()) {
        Monomial x = WeylElement::x_part(key), d = WeylElement::d_part(key);
        // x^a d^b -> (-d)^a x^b
        RationalFunction cc = (x.degree() % 2 == 0) ? c : -c;
        accumulate_product(out, p.context(), zero, x, cc, d, zero,
                           RationalFunction::constant(p.context()->vars(), Rational(1)));
    }
    return out;
}

Polynomial apply(const WeylElement& p, const Polynomial& f) {
    if (p.context()->has_localized())
        throw error("apply: unsupported for localized coefficients");
    require_same_context(p.context()->vars(), f.context(), "apply");
    Polynomial out(f.context());
    for (const auto& [key, c] : p.terms()) {
        Monomial x = WeylElement::x_part(key), d = WeylElement::d_part(key);
        Polynomial g = f;
        for (std::size_t i = 0; i < d.size() && !g.is_zero(); ++i)
            for (int k = 0; k < d[i]; ++k) g = g.derivative(i);
        if (g.is_zero()) continue;
        out += g.mul_term(x, c.as_constant());
    }
    return out;
}

std::optional<int> euler_degree(const WeylElement& p) {
    if (p.is_zero()) return 0;
    std::optional<int> deg;
    for (const auto& [key, c] : p.terms()) {
        Monomial x = WeylElement::x_part(key), d = WeylElement::d_part(key);
        int cd = 0;
        if (!c.is_constant()) {
            if (!c.num().is_homogeneous() || !c.den().is_homogeneous()) return std::nullopt;
            cd = c.num().total_degree() - c.den().total_degree();
        }
        int t = x.degree() - d.degree() + cd;
        if (!deg)
            deg = t;
        else if (*deg != t)
            return std::nullopt;
    }
    return deg;
}

std::string WeylElement::str(const TermOrder& ord) const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return ord.less(b->first, a->first); });

    std::ostringstream os;
    bool first = true;
    for (auto* t : sorted) {
        const auto& [key, c] = *t;
        Monomial x = x_part(key), d = d_part(key);
        bool unit_mono = key.is_unit();

        std::string cs;
        bool negative = false;
        if (c.is_constant()) {
            Rational r = c.as_constant();
            negative = r.sign() < 0;
            Rational a = r.abs();
            if (!a.is_one() || unit_mono) cs = a.str();
        } else {
            cs = "(" + c.str(ord) + ")";
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        bool started = false;
        if (!cs.empty()) {
            os << cs;
            started = true;
        }
        for (std::size_t i = 0; i < nvars(); ++i) {
            if (x[i] == 0) continue;
            if (started) os << "*";
            os << ctx_->name(i);
            if (x[i] > 1) os << "^" << x[i];
            started = true;
        }
        for (std::size_t i = 0; i < nvars(); ++i) {
            if (d[i] == 0) continue;
            if (started) os << "*";
            os << ctx_->d_name(i);
            if (d[i] > 1) os << "^" << d[i];
            started = true;
        }
    }
    return os.str();
}

}  // namespace taut
