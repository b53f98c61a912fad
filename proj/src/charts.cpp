#include "taut/charts.hpp"

namespace taut {

RationalVectorField make_vector_field(const ContextPtr& ctx,
                                      std::vector<RationalFunction> coeffs) {
    if (coeffs.size() != ctx->size())
        throw error("RationalVectorField: coefficient count mismatch");
    for (const auto& c : coeffs) require_same_context(c.context(), ctx, "RationalVectorField");
    return RationalVectorField{ctx, std::move(coeffs)};
}

CoordinateMap::CoordinateMap(ContextPtr src, ContextPtr dst, std::vector<RationalFunction> fwd,
                             std::vector<RationalFunction> inv)
    : source(std::move(src)), target(std::move(dst)), forward(std::move(fwd)), inverse(std::move(inv)) {
    if (forward.size() != target->size() || inverse.size() != source->size())
        throw error("CoordinateMap: arity mismatch");
    for (const auto& f : forward) require_same_context(f.context(), source, "CoordinateMap");
    for (const auto& g : inverse) require_same_context(g.context(), target, "CoordinateMap");
    // forward(inverse) must give back the target coordinates, and vice versa
    for (std::size_t j = 0; j < target->size(); ++j)
        if (forward[j].compose(inverse) != RationalFunction::variable(target, j))
            throw error("CoordinateMap: forward o inverse is not the identity");
    for (std::size_t i = 0; i < source->size(); ++i)
        if (inverse[i].compose(forward) != RationalFunction::variable(source, i))
            throw error("CoordinateMap: inverse o forward is not the identity");
}

RationalVectorField pushforward(const RationalVectorField& vf, const CoordinateMap& map) {
    require_same_context(vf.context, map.source, "pushforward");
    std::vector<RationalFunction> out;
    for (std::size_t j = 0; j < map.target->size(); ++j) {
        RationalFunction acc = RationalFunction::zero(map.source);
        for (std::size_t i = 0; i < map.source->size(); ++i)
            if (!vf.coeffs[i].is_zero()) acc += vf.coeffs[i] * map.forward[j].derivative(i);
        out.push_back(acc.compose(map.inverse));
    }
    return RationalVectorField{map.target, std::move(out)};
}

RationalVectorField field_bracket(const RationalVectorField& v, const RationalVectorField& w) {
    require_same_context(v.context, w.context, "field_bracket");
    std::vector<RationalFunction> out;
    for (std::size_t j = 0; j < v.context->size(); ++j) {
        RationalFunction acc = RationalFunction::zero(v.context);
        for (std::size_t i = 0; i < v.context->size(); ++i) {
            if (!v.coeffs[i].is_zero()) acc += v.coeffs[i] * w.coeffs[j].derivative(i);
            if (!w.coeffs[i].is_zero()) acc -= w.coeffs[i] * v.coeffs[j].derivative(i);
        }
        out.push_back(acc);
    }
    return RationalVectorField{v.context, std::move(out)};
}

ContextPtr rnc_chart_context(RncChart chart) {
    return chart == RncChart::U0 ? make_context({"l", "s"}) : make_context({"m", "t"});
}

std::vector<RationalVectorField> rnc_chart_fields(int k, RncChart chart) {
    if (k < 1) throw error("rnc_chart_fields: k must be positive");
    ContextPtr ctx = rnc_chart_context(chart);
    auto var = [&](std::size_t i) { return RationalFunction::variable(ctx, i); };
    auto con = [&](long c) { return RationalFunction::constant(ctx, Rational(c)); };
    RationalFunction zero = RationalFunction::zero(ctx);
    std::vector<RationalVectorField> fields;
    if (chart == RncChart::U0) {
        // coordinates (l, s)
        fields.push_back(make_vector_field(ctx, {con(-k) * var(1) * var(0), var(1) * var(1)}));
        fields.push_back(make_vector_field(ctx, {zero, con(-1)}));
        fields.push_back(make_vector_field(ctx, {con(-k) * var(0), con(2) * var(1)}));
        fields.push_back(make_vector_field(ctx, {-var(0), zero}));
    } else {
        // coordinates (m, t)
        fields.push_back(make_vector_field(ctx, {zero, con(-1)}));
        fields.push_back(make_vector_field(ctx, {con(-k) * var(1) * var(0), var(1) * var(1)}));
        fields.push_back(make_vector_field(ctx, {con(k) * var(0), con(-2) * var(1)}));
        fields.push_back(make_vector_field(ctx, {-var(0), zero}));
    }
    return fields;
}

CoordinateMap rnc_gluing(int k) {
    ContextPtr u0 = rnc_chart_context(RncChart::U0), u1 = rnc_chart_context(RncChart::U1);
    RationalFunction l = RationalFunction::variable(u0, 0), s = RationalFunction::variable(u0, 1);
    RationalFunction m = RationalFunction::variable(u1, 0), t = RationalFunction::variable(u1, 1);
    return CoordinateMap(u0, u1, {l * s.pow(k), s.inv()}, {m * t.pow(k), t.inv()});
}

bool verify_chart_consistency(int k) {
    auto u0 = rnc_chart_fields(k, RncChart::U0);
    auto u1 = rnc_chart_fields(k, RncChart::U1);
    CoordinateMap glue = rnc_gluing(k);
    for (std::size_t i = 0; i < u0.size(); ++i)
        if (!(pushforward(u0[i], glue) == u1[i])) return false;
    return true;
}

bool gluing_cocycle_check(const RationalFunction& alpha, int k, const Rational& beta) {
    if (alpha.is_zero()) throw error("gluing_cocycle_check: alpha must be nonzero");
    Rational m = Rational(k) * (beta + Rational(1));
    if (!m.is_integer())
        throw error("gluing_cocycle_check: k(beta+1) must be an integer");
    RationalFunction h = alpha.pow(static_cast<int>(m.to_long()));
    RationalFunction ak = alpha.pow(k);
    RationalFunction factor = RationalFunction::constant(alpha.context(), beta + Rational(1));
    for (std::size_t v = 0; v < alpha.context()->size(); ++v) {
        RationalFunction lhs = h.derivative(v) / h;
        RationalFunction rhs = factor * ak.derivative(v) / ak;
        if (lhs != rhs) return false;
    }
    return true;
}

bool chart_module_is_zero(int k, const Rational& beta0) {
    if (k < 1) throw error("chart_module_is_zero: k must be positive");
    // chart (l, s) with l localized: coefficients rational in l
    WeylContextPtr ctx = make_weyl_context({"l", "s"}, {true, false});
    WeylElement l = WeylElement::x_var(ctx, 0), s = WeylElement::x_var(ctx, 1);
    WeylElement dl = WeylElement::d_var(ctx, 0), ds = WeylElement::d_var(ctx, 1);
    auto con = [&](const Rational& c) { return WeylElement::constant(ctx, c); };

    // transposed chart presentation: right-to-left products
    std::vector<WeylElement> gens = {
        weyl_mul(s, weyl_mul(dl, l)).scaled(Rational(k)) - weyl_mul(ds, weyl_mul(s, s)),
        ds,
        weyl_mul(dl, l).scaled(Rational(k)) - weyl_mul(ds, s).scaled(Rational(2)),
        weyl_mul(dl, l) - con(beta0),
    };
    return left_groebner(gens).is_unit_ideal();
}

}  // namespace taut
