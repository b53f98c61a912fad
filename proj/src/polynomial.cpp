#include "taut/polynomial.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace taut {

static const bool kGcdDebug = std::getenv("TAUT_GCD_DEBUG") != nullptr;
static thread_local int gcd_depth = 0;

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& c) {
    Polynomial p(std::move(ctx));
    if (!c.is_zero()) p.terms_.emplace(Monomial(p.nvars()), c);
    return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t i, int power) {
    if (!ctx || i >= ctx->size()) throw error("Polynomial: variable index out of range");
    Polynomial p(std::move(ctx));
    Monomial m(p.nvars());
    m[i] = power;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Polynomial Polynomial::term(ContextPtr ctx, Monomial m, const Rational& c) {
    Polynomial p(std::move(ctx));
    if (m.size() != p.nvars()) throw error("Polynomial: monomial length mismatch");
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
}

Rational Polynomial::constant_value() const {
    auto it = terms_.find(Monomial(nvars()));
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::as_constant() const {
    if (!is_constant()) throw error("Polynomial: not a constant");
    return constant_value();
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != nvars()) throw error("Polynomial: monomial length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int Polynomial::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

bool Polynomial::uses_var(std::size_t var) const {
    for (const auto& [m, c] : terms_)
        if (m[var] > 0) return true;
    return false;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_ctx(o, "poly_add");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_ctx(o, "poly_sub");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ctx(b, "poly_mul");
    Polynomial r(a.ctx_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
    Polynomial r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [mm, k] : terms_) r.terms_.emplace(mm * m, k * c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(ctx_, Rational(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1u) r *= base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= nvars()) throw error("Polynomial: derivative variable out of range");
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial mm = m;
        mm[var] -= 1;
        r.add_term(mm, c * Rational(m[var]));
    }
    return r;
}

std::optional<std::pair<Monomial, Rational>> Polynomial::leading_term(const TermOrder& ord) const {
    if (terms_.empty()) return std::nullopt;
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return std::make_pair(best->first, best->second);
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    return Rational(mpq_class(num_gcd, den_lcm));
}

Polynomial Polynomial::primitive_part(const TermOrder& ord) const {
    if (terms_.empty()) return *this;
    Rational c = content();
    if (leading_term(ord)->second.sign() < 0) c = -c;
    return scaled(c.inv());
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_context(a.ctx_, b.ctx_)) return false;
    return a.terms_ == b.terms_;
}

namespace {

// View of a polynomial as univariate in `var` with polynomial coefficients.
std::map<int, Polynomial> coeffs_wrt(const Polynomial& p, std::size_t var) {
    std::map<int, Polynomial> out;
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = m;
        int d = mm[var];
        mm[var] = 0;
        auto [it, inserted] = out.emplace(d, Polynomial(p.context()));
        it->second.add_term(mm, c);
    }
    return out;
}

Polynomial from_coeffs(const ContextPtr& ctx, std::size_t var, const std::map<int, Polynomial>& cs) {
    Polynomial r(ctx);
    for (const auto& [d, p] : cs)
        for (const auto& [m, c] : p.terms()) {
            Monomial mm = m;
            mm[var] += d;
            r.add_term(mm, c);
        }
    return r;
}

// Content w.r.t. one variable: gcd of the coefficient polynomials.
Polynomial content_wrt(const Polynomial& p, std::size_t var) {
    Polynomial g(p.context());
    for (const auto& [d, c] : coeffs_wrt(p, var)) {
        g = Polynomial::gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

// --- heuristic gcd (integer evaluation + reconstruction) ----------------

// Largest |numerator| over all coefficients; inputs are integer-primitive.
mpz_class max_norm(const Polynomial& p) {
    mpz_class m(0);
    for (const auto& [mon, c] : p.terms()) {
        mpz_class a = abs(c.num());
        if (a > m) m = a;
    }
    return m;
}

Polynomial eval_at(const Polynomial& p, std::size_t var, const mpz_class& xi) {
    // Horner over the coefficient polynomials of `var`
    std::map<int, Polynomial> cs;
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = m;
        int d = mm[var];
        mm[var] = 0;
        auto [it, inserted] = cs.emplace(d, Polynomial(p.context()));
        it->second.add_term(mm, c);
    }
    Polynomial acc(p.context());
    int prev = -1;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        if (prev >= 0) {
            mpz_class step;
            mpz_pow_ui(step.get_mpz_t(), xi.get_mpz_t(), prev - it->first);
            acc = acc.scaled(Rational(step));
        }
        acc += it->second;
        prev = it->first;
    }
    if (prev > 0) {
        mpz_class step;
        mpz_pow_ui(step.get_mpz_t(), xi.get_mpz_t(), prev);
        acc = acc.scaled(Rational(step));
    }
    return acc;
}

// Balanced xi-adic digit, applied coefficient-wise.
Polynomial symmetric_mod(const Polynomial& p, const mpz_class& xi) {
    Polynomial out(p.context());
    mpz_class half = xi / 2;
    for (const auto& [m, c] : p.terms()) {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), c.num().get_mpz_t(), xi.get_mpz_t());
        if (r > half) r -= xi;
        if (r != 0) out.add_term(m, Rational(r));
    }
    return out;
}

bool try_div(const Polynomial& a, const Polynomial& b, Polynomial& q) {
    try {
        q = Polynomial::div_exact(a, b);
        return true;
    } catch (const error&) {
        return false;
    }
}

// Char-Geddes-Gonnet heuristic gcd on integer-primitive polynomials.
// Returns the true gcd on success (trial division verifies), nullopt when
// the evaluation points keep failing or sizes explode.
std::optional<Polynomial> gcd_heuristic(const Polynomial& a, const Polynomial& b, int depth) {
    std::size_t var = a.nvars();
    for (std::size_t i = a.nvars(); i-- > 0;)
        if (a.uses_var(i) || b.uses_var(i)) {
            var = i;
            break;
        }
    if (var == a.nvars()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.as_constant().num().get_mpz_t(),
                b.as_constant().num().get_mpz_t());
        return Polynomial::constant(a.context(), Rational(g));
    }

    mpz_class na = max_norm(a), nb = max_norm(b);
    mpz_class xi = 2 * (na < nb ? na : nb) + 2;
    int deg = std::max(a.degree_in(var), b.degree_in(var));
    for (int attempt = 0; attempt < 6; ++attempt) {
        // coefficient sizes grow like xi^(deg+1); bail before they explode
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<std::size_t>(deg + 1) > 1000000)
            return std::nullopt;
        Polynomial av = eval_at(a, var, xi), bv = eval_at(b, var, xi);
        if (!av.is_zero() && !bv.is_zero()) {
            auto gamma = gcd_heuristic(av.scaled(av.content().inv()),
                                       bv.scaled(bv.content().inv()), depth + 1);
            if (gamma) {
                // xi-adic reconstruction of the candidate along `var`
                Polynomial g(a.context()), rest = *gamma;
                for (int power = 0; !rest.is_zero(); ++power) {
                    Polynomial digit = symmetric_mod(rest, xi);
                    Monomial shift(a.nvars());
                    shift[var] = power;
                    g += digit.mul_term(shift, Rational(1));
                    rest -= digit;
                    rest = rest.scaled(Rational(mpq_class(mpz_class(1), xi)));
                }
                if (!g.is_zero()) {
                    g = g.scaled(g.content().inv());
                    Polynomial qa(a.context()), qb(a.context());
                    if (try_div(a, g, qa) && try_div(b, g, qb)) return g;
                }
            }
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

// Pseudo-remainder of f by g in `var` (g != 0, deg_var g <= deg_var f).
Polynomial pseudo_rem(Polynomial f, const Polynomial& g, std::size_t var) {
    const int dg = g.degree_in(var);
    auto gc = coeffs_wrt(g, var);
    const Polynomial& lcg = gc.rbegin()->second;
    while (!f.is_zero() && f.degree_in(var) >= dg) {
        int df = f.degree_in(var);
        auto fc = coeffs_wrt(f, var);
        Polynomial lcf = fc.rbegin()->second;
        Monomial shift(f.nvars());
        shift[var] = df - dg;
        f = f * lcg - g.mul_term(shift, Rational(1)) * lcf;
        if (f.degree_in(var) >= df && !f.is_zero())
            throw error("Polynomial: pseudo-division failed to reduce degree");
    }
    return f;
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    require_same_context(a.ctx_, b.ctx_, "poly_gcd");
    if (a.is_constant() || b.is_constant()) return constant(a.ctx_, Rational(1));

    if (kGcdDebug && gcd_depth == 0) {
        auto start = std::chrono::steady_clock::now();
        ++gcd_depth;
        Polynomial r = gcd(a, b);
        --gcd_depth;
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (dt > 0.05)
            std::fprintf(stderr, "[gcd] %.2fs  a(deg %d, %zu terms) b(deg %d, %zu terms)\n  a=%s\n  b=%s\n",
                         dt, a.total_degree(), a.term_count(), b.total_degree(), b.term_count(),
                         a.str().c_str(), b.str().c_str());
        return r;
    }
    ++gcd_depth;
    struct Guard {
        ~Guard() { --gcd_depth; }
    } guard;

    // single-term shortcut: gcd with a monomial is the common monomial part
    auto mono_gcd = [](const Polynomial& mono, const Polynomial& f) {
        Monomial g = mono.terms().begin()->first;
        for (const auto& [m, c] : f.terms())
            for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], m[i]);
        return term(f.context(), g, Rational(1));
    };
    if (a.term_count() == 1) return mono_gcd(a, b);
    if (b.term_count() == 1) return mono_gcd(b, a);

    Polynomial pa = a.primitive_part(), pb = b.primitive_part();
    if (pa == pb) return pa;
    if (auto h = gcd_heuristic(pa, pb, 0)) return h->primitive_part();

    // primitive PRS fallback on the last variable occurring in either operand
    std::size_t var = a.nvars();
    for (std::size_t i = a.nvars(); i-- > 0;)
        if (a.uses_var(i) || b.uses_var(i)) {
            var = i;
            break;
        }
    if (var == a.nvars()) return constant(a.ctx_, Rational(1));  // both constant

    Polynomial ca = content_wrt(pa, var), cb = content_wrt(pb, var);
    Polynomial f = div_exact(pa, ca), g = div_exact(pb, cb);
    Polynomial c = gcd(ca, cb);

    if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
    while (!g.is_zero()) {
        Polynomial r = pseudo_rem(f, g, var);
        f = std::move(g);
        if (r.is_zero()) {
            g = Polynomial(a.ctx_);
        } else {
            g = div_exact(r, content_wrt(r, var));
        }
    }
    return (c * div_exact(f, content_wrt(f, var))).primitive_part();
}

Polynomial Polynomial::div_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw error("Polynomial: division by zero polynomial");
    require_same_context(a.ctx_, b.ctx_, "poly_div");
    if (b.is_constant()) return a.scaled(b.as_constant().inv());
    const TermOrder ord = TermOrder::grevlex();
    auto ltb = b.leading_term(ord);
    Polynomial r = a, q(a.ctx_);
    while (!r.is_zero()) {
        auto ltr = r.leading_term(ord);
        if (!ltb->first.divides(ltr->first))
            throw error("Polynomial: division is not exact");
        Monomial m = ltb->first.quotient_of(ltr->first);
        Rational c = ltr->second / ltb->second;
        q.add_term(m, c);
        r -= b.mul_term(m, c);
    }
    return q;
}

std::string Polynomial::str(const TermOrder& ord) const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* x, auto* y) { return ord.less(y->first, x->first); });

    std::ostringstream os;
    bool first = true;
    for (auto* t : sorted) {
        const auto& [m, c] = *t;
        Rational ac = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit_mono = m.is_unit();
        if (!ac.is_one() || unit_mono) {
            os << ac.str();
            if (!unit_mono) os << "*";
        }
        bool started = false;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (started) os << "*";
            os << ctx_->name(i);
            if (m[i] > 1) os << "^" << m[i];
            started = true;
        }
    }
    return os.str();
}

}  // namespace taut
