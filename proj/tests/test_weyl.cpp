#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taut/parser.hpp"
#include "taut/weyl_groebner.hpp"

using namespace taut;

namespace {

WeylElement W(const std::string& s, const WeylContextPtr& ctx) { return parse_operator(s, ctx); }

}  // namespace

TEST_CASE("normal-ordered products") {
    auto ctx = make_weyl_context({"x"});
    WeylElement x = WeylElement::x_var(ctx, 0), d = WeylElement::d_var(ctx, 0);

    CHECK(weyl_mul(d, x) == W("x*dx + 1", ctx));
    CHECK(weyl_mul(weyl_mul(d, d), x) == W("x*dx^2 + 2*dx", ctx));
    WeylElement xd = weyl_mul(x, d);
    CHECK(weyl_mul(xd, xd) == W("x^2*dx^2 + x*dx", ctx));

    auto ctx2 = make_weyl_context({"x", "y"});
    CHECK_THROWS_AS(weyl_mul(WeylElement::x_var(ctx, 0), WeylElement::x_var(ctx2, 0)), error);
}

TEST_CASE("transpose") {
    auto ctx = make_weyl_context({"x"});
    CHECK(transpose(W("x*dx", ctx)) == W("-x*dx - 1", ctx));

    SUBCASE("negative Euler operator in n variables") {
        for (std::size_t n : {1u, 3u, 5u}) {
            std::vector<std::string> names;
            for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
            auto c = make_weyl_context(names);
            WeylElement e = WeylElement::euler(c);
            CHECK(transpose(-e) == e + WeylElement::constant(c, Rational(static_cast<long>(n))));
        }
    }
    SUBCASE("involution") {
        auto c = make_weyl_context({"x", "y"});
        WeylElement p = W("3*x^2*dy + x*y*dx*dy - 7*dy^2 + 1/2", c);
        CHECK(transpose(transpose(p)) == p);
    }
    SUBCASE("anti-automorphism") {
        auto c = make_weyl_context({"x", "y"});
        WeylElement p = W("x*dx + y", c), q = W("dx*dy - x", c);
        CHECK(transpose(weyl_mul(p, q)) == weyl_mul(transpose(q), transpose(p)));
    }
}

TEST_CASE("fourier-laplace") {
    auto ctx = make_weyl_context({"t"});
    WeylElement t = WeylElement::x_var(ctx, 0), dt = WeylElement::d_var(ctx, 0);

    CHECK(fourier_laplace(t) == -dt);
    CHECK(fourier_laplace(dt) == t);
    CHECK(fourier_laplace(fourier_laplace(W("t*dt", ctx))) == W("t*dt", ctx));

    SUBCASE("one-variable convention: dt*t + beta maps to dt*t - beta - 1") {
        for (const Rational& beta : {Rational(0), Rational(1, 2), Rational(-3, 4)}) {
            WeylElement gen = weyl_mul(dt, t) + WeylElement::constant(ctx, beta);
            WeylElement img = fourier_laplace(gen);
            WeylElement expected = weyl_mul(dt, t) - WeylElement::constant(ctx, beta + Rational(1));
            CHECK(ideal_equal({img}, {expected}));
        }
    }
    SUBCASE("square is the antipodal substitution") {
        auto c = make_weyl_context({"x", "y"});
        WeylElement p = W("x^2*dy - 3*x*y + dx", c);
        // x -> -x, d -> -d scales each term by (-1)^(|x|+|d|)
        WeylElement antipodal = W("-x^2*dy - 3*x*y - dx", c);
        CHECK(fourier_laplace(fourier_laplace(p)) == antipodal);
    }
}

TEST_CASE("left Groebner bases") {
    auto ctx = make_weyl_context({"x"});
    WeylElement x = WeylElement::x_var(ctx, 0), d = WeylElement::d_var(ctx, 0);

    SUBCASE("single partial") {
        LeftGB gb = left_groebner({d});
        REQUIRE(gb.basis.size() == 1);
        CHECK(gb.basis[0] == d);
    }
    SUBCASE("x and d generate the unit ideal") {
        LeftGB gb = left_groebner({x, d});
        CHECK(gb.is_unit_ideal());
    }
    SUBCASE("euler minus constant is auto-reduced") {
        WeylElement g = W("x*dx - 1/3", ctx);
        LeftGB gb = left_groebner({g});
        REQUIRE(gb.basis.size() == 1);
        CHECK(gb.basis[0] == g);
    }
    SUBCASE("degenerate inputs are rejected") {
        CHECK_THROWS_AS(left_groebner({}), error);
        CHECK_THROWS_AS(left_groebner({WeylElement::zero(ctx)}), error);
    }
}

TEST_CASE("weyl normal form basics") {
    auto ctx = make_weyl_context({"x", "y"});
    std::vector<WeylElement> gens = {W("x*dx - 2", ctx), W("dy^2", ctx)};
    LeftGB gb = left_groebner(gens);
    for (const auto& g : gens) CHECK(weyl_normal_form(g, gb).is_zero());
    WeylElement p = W("x^2*dx^2 + dy^3", ctx);
    WeylElement nf = weyl_normal_form(p, gb);
    CHECK(weyl_normal_form(nf, gb) == nf);
    // x^2 dx^2 = (x dx)(x dx) - x dx = 2*2 - 2 = 2 modulo the ideal
    CHECK(nf == WeylElement::constant(ctx, Rational(2)));
}

TEST_CASE("holonomic rank") {
    SUBCASE("first-order ODE has rank one") {
        auto ctx = make_weyl_context({"t"});
        WeylElement gen = weyl_mul(WeylElement::d_var(ctx, 0), WeylElement::x_var(ctx, 0)) -
                          WeylElement::constant(ctx, Rational(1, 3));
        auto r = holonomic_rank({gen});
        REQUIRE(r.has_value());
        CHECK(*r == 1);
    }
    SUBCASE("a single partial in two variables has infinite rank") {
        auto ctx = make_weyl_context({"x", "y"});
        auto r = holonomic_rank({WeylElement::d_var(ctx, 0)});
        CHECK_FALSE(r.has_value());
    }
    SUBCASE("rank of the full partial system is one") {
        auto ctx = make_weyl_context({"x", "y"});
        auto r = holonomic_rank({WeylElement::d_var(ctx, 0), WeylElement::d_var(ctx, 1)});
        REQUIRE(r.has_value());
        CHECK(*r == 1);
    }
    SUBCASE("degenerate inputs") {
        auto ctx = make_weyl_context({"x"});
        CHECK_THROWS_AS(holonomic_rank({}), error);
        CHECK_THROWS_AS(holonomic_rank({WeylElement::zero(ctx)}), error);
    }
}

TEST_CASE("operator action on polynomials") {
    auto wctx = make_weyl_context({"x", "y"});
    auto ctx = wctx->vars();
    CHECK(apply(W("dx", wctx), parse_polynomial("x^2", ctx)) == parse_polynomial("2*x", ctx));
    WeylElement e = WeylElement::euler(wctx);
    Polynomial m = parse_polynomial("x^2*y", ctx);
    CHECK(apply(e, m) == m.scaled(Rational(3)));
    CHECK(apply(W("x*dy", wctx), parse_polynomial("y^3 + x", ctx)) ==
          parse_polynomial("3*x*y^2", ctx));
}

TEST_CASE("euler homogeneity") {
    auto ctx = make_weyl_context({"x", "y"});
    CHECK(euler_degree(W("x*dx", ctx)) == 0);
    CHECK(euler_degree(W("x^2 + dx", ctx)) == std::nullopt);
    CHECK(euler_degree(W("x^2*dy", ctx)) == 1);
    CHECK(euler_degree(WeylElement::zero(ctx)) == 0);
}

TEST_CASE("localized coefficients") {
    auto ctx = make_weyl_context({"l", "s"}, {true, false});
    WeylElement l = WeylElement::x_var(ctx, 0), dl = WeylElement::d_var(ctx, 0);
    WeylElement s = WeylElement::x_var(ctx, 1), ds = WeylElement::d_var(ctx, 1);

    SUBCASE("commutation with the localized variable") {
        WeylElement p = weyl_mul(dl, l);
        CHECK(p == weyl_mul(l, dl) + WeylElement::constant(ctx, Rational(1)));
    }
    SUBCASE("quotient rule on inverse powers") {
        RationalFunction inv_l = RationalFunction::variable(ctx->vars(), 0).inv();
        WeylElement f = WeylElement::term(ctx, Monomial(2), Monomial(2), inv_l);
        WeylElement prod = weyl_mul(dl, f);
        // dl * (1/l) = (1/l) dl - 1/l^2
        WeylElement expected =
            WeylElement::term(ctx, Monomial(2), Monomial{std::vector<int>{1, 0}}, inv_l) -
            WeylElement::term(ctx, Monomial(2), Monomial(2), inv_l * inv_l);
        CHECK(prod == expected);
    }
    SUBCASE("mixed product keeps s as a monomial variable") {
        WeylElement p = weyl_mul(ds, s);
        CHECK(p == weyl_mul(s, ds) + WeylElement::constant(ctx, Rational(1)));
        CHECK_THROWS_AS(transpose(p), error);
        CHECK_THROWS_AS(fourier_laplace(p), error);
    }
}

TEST_CASE("operator printing round-trip") {
    auto ctx = make_weyl_context({"x11", "x12", "x21", "x22"});
    WeylElement p = W("d11*d22 - d21*d12", ctx);
    CHECK(W(p.str(), ctx) == p);
    // canonical grevlex order puts d12*d21 first
    CHECK(p.str() == "-d12*d21 + d11*d22");
}
