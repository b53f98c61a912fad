#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taut/charts.hpp"
#include "taut/parser.hpp"

using namespace taut;

namespace {

RationalFunction RF(const std::string& s, const ContextPtr& ctx) {
    return RationalFunction(parse_polynomial(s, ctx));
}

}  // namespace

TEST_CASE("coordinate maps validate their inverses") {
    auto u = make_context({"t"});
    auto v = make_context({"u"});
    RationalFunction t = RationalFunction::variable(u, 0);
    RationalFunction w = RationalFunction::variable(v, 0);
    CHECK_NOTHROW(CoordinateMap(u, v, {t.inv()}, {w.inv()}));
    CHECK_THROWS_AS(CoordinateMap(u, v, {t.inv()}, {w}), error);
}

TEST_CASE("pushforward") {
    SUBCASE("identity map") {
        auto u = make_context({"x", "y"});
        auto v = make_context({"p", "q"});
        CoordinateMap id(u, v, {RationalFunction::variable(u, 0), RationalFunction::variable(u, 1)},
                         {RationalFunction::variable(v, 0), RationalFunction::variable(v, 1)});
        RationalVectorField f = make_vector_field(u, {RF("x*y", u), RF("y^2 - 1", u)});
        RationalVectorField g = pushforward(f, id);
        CHECK(g.coeffs[0] == RF("p*q", v));
        CHECK(g.coeffs[1] == RF("q^2 - 1", v));
    }
    SUBCASE("inversion t -> 1/t sends dt to -t^2 dt") {
        auto u = make_context({"t"});
        auto v = make_context({"u"});
        RationalFunction t = RationalFunction::variable(u, 0);
        RationalFunction w = RationalFunction::variable(v, 0);
        CoordinateMap inv(u, v, {t.inv()}, {w.inv()});
        RationalVectorField dt = make_vector_field(u, {RationalFunction::constant(u, Rational(1))});
        RationalVectorField img = pushforward(dt, inv);
        CHECK(img.coeffs[0] == -(w * w));
    }
    SUBCASE("scaling field under the k = 2 gluing") {
        CoordinateMap glue = rnc_gluing(2);
        auto u0 = glue.source;
        RationalVectorField f =
            make_vector_field(u0, {RF("-2*l", u0), RationalFunction::zero(u0)});
        RationalVectorField img = pushforward(f, glue);
        auto u1 = glue.target;
        CHECK(img.coeffs[0] == RF("-2*m", u1));
        CHECK(img.coeffs[1].is_zero());
    }
    SUBCASE("functoriality under composition") {
        auto u = make_context({"t"});
        auto v = make_context({"u"});
        auto w = make_context({"w"});
        RationalFunction t = RationalFunction::variable(u, 0);
        RationalFunction uu = RationalFunction::variable(v, 0);
        RationalFunction ww = RationalFunction::variable(w, 0);
        RationalFunction half_u = RationalFunction::constant(u, Rational(1, 2));
        RationalFunction half_v = RationalFunction::constant(v, Rational(1, 2));
        RationalFunction two_w = RationalFunction::constant(w, Rational(2));
        CoordinateMap m1(u, v, {t.inv()}, {uu.inv()});
        CoordinateMap m2(v, w, {half_v * uu}, {two_w * ww});
        // t -> 1/t -> 1/(2t); inverse t = 1/(2w)
        CoordinateMap composite(u, w, {half_u * t.inv()}, {(two_w * ww).inv()});
        RationalVectorField f =
            make_vector_field(u, {t * t + RationalFunction::constant(u, Rational(1))});
        CHECK(pushforward(pushforward(f, m1), m2) == pushforward(f, composite));
    }
}

TEST_CASE("chart fields match the displayed formulas") {
    auto u0 = rnc_chart_context(RncChart::U0);
    auto fields = rnc_chart_fields(3, RncChart::U0);
    REQUIRE(fields.size() == 4);
    CHECK(fields[0].coeffs[0] == RF("-3*s*l", u0));
    CHECK(fields[0].coeffs[1] == RF("s^2", u0));
    CHECK(fields[1].coeffs[0].is_zero());
    CHECK(fields[1].coeffs[1] == RF("-1", u0));
    CHECK(fields[2].coeffs[0] == RF("-3*l", u0));
    CHECK(fields[2].coeffs[1] == RF("2*s", u0));
    CHECK(fields[3].coeffs[0] == RF("-l", u0));
    CHECK(fields[3].coeffs[1].is_zero());

    auto u1 = rnc_chart_context(RncChart::U1);
    auto f1 = rnc_chart_fields(3, RncChart::U1);
    CHECK(f1[0].coeffs[1] == RF("-1", u1));
    CHECK(f1[1].coeffs[0] == RF("-3*t*m", u1));
    CHECK(f1[2].coeffs[0] == RF("3*m", u1));
    CHECK(f1[2].coeffs[1] == RF("-2*t", u1));
}

TEST_CASE("chart consistency under the gluing") {
    for (int k = 1; k <= 5; ++k) CHECK(verify_chart_consistency(k));
}

TEST_CASE("bracket relations hold in both charts") {
    for (auto chart : {RncChart::U0, RncChart::U1}) {
        auto f = rnc_chart_fields(3, chart);
        // [Z(E12), Z(E21)] = Z(H), [Z(H), Z(E12)] = 2 Z(E12),
        // [Z(H), Z(E21)] = -2 Z(E21), e central
        CHECK(field_bracket(f[0], f[1]) == f[2]);
        RationalVectorField two_e12 = make_vector_field(
            f[0].context, {f[0].coeffs[0] + f[0].coeffs[0], f[0].coeffs[1] + f[0].coeffs[1]});
        CHECK(field_bracket(f[2], f[0]) == two_e12);
        for (std::size_t i = 0; i < 3; ++i) {
            RationalVectorField b = field_bracket(f[3], f[i]);
            for (const auto& c : b.coeffs) CHECK(c.is_zero());
        }
    }
}

TEST_CASE("gluing cocycle equation") {
    auto ctx = make_context({"x"});
    SUBCASE("alpha = x, k = 2, beta = 1/2") {
        CHECK(gluing_cocycle_check(RF("x", ctx), 2, Rational(1, 2)));
    }
    SUBCASE("beta = -1 gives h = 1") {
        CHECK(gluing_cocycle_check(RF("x", ctx), 3, Rational(-1)));
    }
    SUBCASE("alpha = x^2 + 1, k = 3, beta = 2/3") {
        CHECK(gluing_cocycle_check(RF("x^2 + 1", ctx), 3, Rational(2, 3)));
    }
    SUBCASE("two chart variables") {
        auto c2 = make_context({"x", "y"});
        CHECK(gluing_cocycle_check(RF("x*y + 1", c2), 2, Rational(3, 2)));
    }
    SUBCASE("non-integral exponent is rejected") {
        CHECK_THROWS_AS(gluing_cocycle_check(RF("x", ctx), 3, Rational(1, 2)), error);
    }
    SUBCASE("negative exponent powers") {
        CHECK(gluing_cocycle_check(RF("x", ctx), 1, Rational(-3)));
    }
}

TEST_CASE("chart reduction dichotomy") {
    CHECK_FALSE(chart_module_is_zero(2, Rational(1)));       // beta0 = 2/k
    CHECK(chart_module_is_zero(2, Rational(1, 3)));
    CHECK_FALSE(chart_module_is_zero(3, Rational(2, 3)));
    CHECK(chart_module_is_zero(3, Rational(0)));
    for (int k = 1; k <= 5; ++k) {
        for (const Rational& b : {Rational(0), Rational(1), Rational(-1), Rational(1, 2),
                                  Rational(2, k), Rational(3, k)}) {
            bool vanishes = chart_module_is_zero(k, b);
            CHECK(vanishes == (b != Rational(2, k)));
        }
    }
}
