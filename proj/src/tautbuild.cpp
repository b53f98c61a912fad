#include "taut/tautbuild.hpp"

namespace taut {

TautSpec::TautSpec(RepSpec rep, WeylContextPtr ctx, std::vector<Polynomial> cone_ideal,
                   std::map<std::string, Rational> beta)
    : rep_(std::move(rep)), ctx_(std::move(ctx)), cone_(std::move(cone_ideal)), beta_(std::move(beta)) {
    if (rep_.dim() != ctx_->size())
        throw error("TautSpec: representation dimension does not match the context");
    if (ctx_->has_localized()) throw error("TautSpec: localized context not supported");
    for (const auto& [label, value] : beta_) rep_.index_of(label);
    for (const auto& g : cone_) {
        require_same_context(g.context(), ctx_->vars(), "TautSpec");
        if (g.is_zero()) throw error("TautSpec: zero cone generator");
        if (!g.is_homogeneous()) throw error("TautSpec: inhomogeneous cone generator");
    }
    // the cone ideal must be stable under every action field
    if (!cone_.empty()) {
        GroebnerBasis gb = comm_groebner(cone_);
        for (std::size_t i = 0; i < rep_.basis_size(); ++i) {
            WeylElement z = action_field(rep_, ctx_, i);
            for (const auto& g : cone_)
                if (!poly_normal_form(apply(z, g), gb).is_zero())
                    throw error("TautSpec: cone ideal is not stable under the action of " +
                                rep_.labels()[i]);
        }
    }
}

Rational TautSpec::beta_of(std::size_t basis_index) const {
    auto it = beta_.find(rep_.labels().at(basis_index));
    return it == beta_.end() ? Rational(0) : it->second;
}

std::vector<Polynomial> rnc_ideal(int k, const ContextPtr& ctx) {
    if (k < 1) throw error("rnc_ideal: k must be positive");
    if (ctx->size() != static_cast<std::size_t>(k) + 1)
        throw error("rnc_ideal: context must have k+1 variables");
    std::vector<Polynomial> gens;
    auto accept = [&](Polynomial q) {
        if (q.is_zero()) return;
        if (!gens.empty() && poly_normal_form(q, comm_groebner(gens)).is_zero()) return;
        // divide out the content but keep the displayed orientation
        gens.push_back(q.scaled(q.content().inv()));
    };
    for (int s = 0; s <= 2 * k; ++s) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i <= std::min(s, k); ++i)
            if (s - i >= i && s - i <= k) pairs.emplace_back(i, s - i);
        for (std::size_t a = 0; a < pairs.size(); ++a)
            for (std::size_t b = a + 1; b < pairs.size(); ++b) {
                auto [i1, j1] = pairs[a];
                auto [i2, j2] = pairs[b];
                Monomial m1(ctx->size()), m2(ctx->size());
                m1[i1] += 1;
                m1[j1] += 1;
                m2[i2] += 1;
                m2[j2] += 1;
                Polynomial q(ctx);
                q.add_term(m1, Rational::binomial(k, i2) * Rational::binomial(k, j2));
                q.add_term(m2, -(Rational::binomial(k, i1) * Rational::binomial(k, j1)));
                accept(std::move(q));
            }
    }
    return gens;
}

std::vector<Polynomial> segre_ideal(const ContextPtr& ctx) {
    if (ctx->size() != 4) throw error("segre_ideal: context must have 4 variables");
    Monomial m1(4), m2(4);
    m1[0] = m1[3] = 1;  // x11*x22
    m2[1] = m2[2] = 1;  // x12*x21
    Polynomial f(ctx);
    f.add_term(m1, Rational(1));
    f.add_term(m2, Rational(-1));
    return {f};
}

WeylContextPtr rnc_context(int k) {
    std::vector<std::string> names;
    for (int i = 0; i <= k; ++i) names.push_back("z" + std::to_string(i));
    return make_weyl_context(std::move(names));
}

WeylContextPtr segre_context() {
    return make_weyl_context({"x11", "x12", "x21", "x22"});
}

TautSpec make_rnc_spec(int k, const Rational& beta_e) {
    WeylContextPtr ctx = rnc_context(k);
    return TautSpec(sym_power_rep(k), ctx, rnc_ideal(k, ctx->vars()), {{"e", beta_e}});
}

TautSpec make_segre_spec(const Rational& beta_e) {
    WeylContextPtr ctx = segre_context();
    return TautSpec(segre_rep(), ctx, segre_ideal(ctx->vars()), {{"e", beta_e}});
}

std::vector<WeylElement> tautological_generators(const TautSpec& spec) {
    std::vector<WeylElement> out;
    for (const auto& g : spec.cone_ideal())
        out.push_back(WeylElement::from_polynomial(spec.context(), g));
    for (std::size_t i = 0; i < spec.rep().basis_size(); ++i) {
        Rational shift = spec.rep().matrix(i).trace() - spec.beta_of(i);
        WeylElement z = action_field(spec.rep(), spec.context(), i);
        out.push_back(z - WeylElement::constant(spec.context(), shift));
    }
    for (const auto& g : out)
        if (!euler_degree(g)) throw error("tautological_generators: generator not homogeneous");
    return out;
}

std::vector<WeylElement> fl_ideal(const std::vector<WeylElement>& gens) {
    std::vector<WeylElement> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(fourier_laplace(g));
    return out;
}

namespace {

// all monomials of the given total degree
void monomials_of_degree(std::size_t nvars, int degree, Monomial& cur, std::size_t at,
                         std::vector<Monomial>& out) {
    if (at + 1 == nvars) {
        cur[at] = degree;
        out.push_back(cur);
        cur[at] = 0;
        return;
    }
    for (int d = 0; d <= degree; ++d) {
        cur[at] = d;
        monomials_of_degree(nvars, degree - d, cur, at + 1, out);
    }
    cur[at] = 0;
}

WeylElement casimir_euler_combination(const TautSpec& spec, const RootSystem& rs, const Weight& mu,
                                      bool transpose_side) {
    if (weyl_dimension(rs, mu) != spec.context()->size())
        throw error("casimir check: dim V does not match the weight");
    const WeylContextPtr& ctx = spec.context();
    Rational mu2 = killing_pairing(rs, mu, mu);
    Rational dmu = killing_pairing(rs, weyl_vector(rs), mu);
    WeylElement zc = casimir_operator(spec.rep(), ctx);
    WeylElement scale;  // Z(e) on the action side, E + dim V on the transpose side
    if (transpose_side) {
        scale = WeylElement::euler(ctx) +
                WeylElement::constant(ctx, Rational(static_cast<long>(ctx->size())));
    } else {
        scale = action_field(spec.rep(), ctx, spec.rep().scaling_index());
    }
    return zc - weyl_mul(scale, scale).scaled(mu2) + scale.scaled(Rational(2) * dmu);
}

}  // namespace

bool casimir_action_check(const TautSpec& spec, const RootSystem& rs, const Weight& mu, int dmax) {
    WeylElement op = casimir_euler_combination(spec, rs, mu, false);
    GroebnerBasis gb = comm_groebner(spec.cone_ideal());
    const std::size_t n = spec.context()->size();
    for (int d = 1; d <= dmax; ++d) {
        std::vector<Monomial> monos;
        Monomial cur(n);
        monomials_of_degree(n, d, cur, 0, monos);
        for (const auto& m : monos) {
            Polynomial f = Polynomial::term(spec.context()->vars(), m, Rational(1));
            if (!poly_normal_form(apply(op, f), gb).is_zero()) return false;
        }
    }
    return true;
}

bool casimir_euler_membership(const TautSpec& spec, const RootSystem& rs, const Weight& mu) {
    WeylElement op = casimir_euler_combination(spec, rs, mu, true);
    std::vector<WeylElement> cone;
    for (const auto& g : spec.cone_ideal())
        cone.push_back(WeylElement::from_polynomial(spec.context(), g));
    return weyl_normal_form(op, left_groebner(cone)).is_zero();
}

}  // namespace taut
