#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taut/comm_groebner.hpp"
#include "taut/parser.hpp"
#include "taut/rational_function.hpp"

using namespace taut;

namespace {

Polynomial P(const std::string& s, const ContextPtr& ctx) { return parse_polynomial(s, ctx); }

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational(1, 3) + Rational(2, 5) == Rational(11, 15));
    CHECK(Rational(4, 8) == Rational(1, 2));
    CHECK(Rational(-3, 6).str() == "-1/2");
    CHECK(Rational::parse("7/21") == Rational(1, 3));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK_THROWS_AS(Rational(1, 0), error);
    CHECK_THROWS_AS(Rational(1, 2).inv() / Rational(0), error);
    CHECK(Rational::binomial(10, 4) == Rational(210));
    CHECK(Rational::falling_factorial(5, 3) == Rational(60));
}

TEST_CASE("polynomial arithmetic") {
    auto ctx = make_context({"x", "y"});
    CHECK(P("x + 1", ctx) * P("x - 1", ctx) == P("x^2 - 1", ctx));
    CHECK((P("x + y", ctx) * Polynomial::zero(ctx)).is_zero());

    auto segre = make_context({"x11", "x12", "x21", "x22"});
    Polynomial f = P("x11*x22 - x12*x21", segre);
    CHECK(f * Polynomial::constant(segre, Rational(1)) == f);

    CHECK(P("x^2 + 2*x*y + y^2", ctx).is_homogeneous());
    CHECK_FALSE(P("x^2 + y", ctx).is_homogeneous());
    CHECK(P("x^2*y", ctx).derivative(0) == P("2*x*y", ctx));

    auto other = make_context({"u"});
    CHECK_THROWS_AS(P("x", ctx) + Polynomial::variable(other, 0), error);
}

TEST_CASE("gcd and exact division") {
    auto ctx = make_context({"x", "y"});
    Polynomial a = P("x^2 - y^2", ctx), b = P("x^2 + 2*x*y + y^2", ctx);
    CHECK(Polynomial::gcd(a, b) == P("x + y", ctx));

    Polynomial h = P("x*y - 1", ctx);
    Polynomial g = Polynomial::gcd(a * h, b * h);
    CHECK(g == P("x + y", ctx) * h);

    CHECK(Polynomial::div_exact(a, P("x - y", ctx)) == P("x + y", ctx));
    CHECK_THROWS_AS(Polynomial::div_exact(P("x^2 + 1", ctx), P("x + 1", ctx)), error);

    CHECK(P("4*x + 8*y", ctx).content() == Rational(4));
    CHECK(P("-2*x^2", ctx).primitive_part() == P("x^2", ctx));
}

TEST_CASE("rational function arithmetic") {
    auto ctx = make_context({"x"});
    RationalFunction inv_x(Polynomial::constant(ctx, Rational(1)), Polynomial::variable(ctx, 0));

    SUBCASE("derivative of 1/x") {
        RationalFunction d = inv_x.derivative(0);
        CHECK(d == RationalFunction(P("-1", ctx), P("x^2", ctx)));
    }
    SUBCASE("logarithmic derivative of x^3") {
        RationalFunction a3 = RationalFunction(Polynomial::variable(ctx, 0)).pow(3);
        CHECK(a3.derivative(0) / a3 == RationalFunction(P("3", ctx), P("x", ctx)));
    }
    SUBCASE("gluing equation instance: alpha = x+1, k = 2, beta = 1/2") {
        RationalFunction alpha(P("x + 1", ctx));
        RationalFunction h = alpha.pow(3);
        RationalFunction lhs = h.derivative(0) / h;
        RationalFunction ak = alpha.pow(2);
        RationalFunction rhs =
            RationalFunction::constant(ctx, Rational(3, 2)) * (ak.derivative(0) / ak);
        CHECK(lhs == rhs);
        CHECK(lhs == RationalFunction(P("3", ctx), P("x + 1", ctx)));
    }
    SUBCASE("division by zero function") {
        CHECK_THROWS_AS(inv_x / RationalFunction::zero(ctx), error);
    }
    SUBCASE("normalization keeps numerator and denominator coprime") {
        RationalFunction q(P("x^2 - 1", ctx), P("x^2 + 2*x + 1", ctx));
        CHECK(q.num() == P("x - 1", ctx));
        CHECK(q.den() == P("x + 1", ctx));
    }
}

TEST_CASE("composition") {
    auto ctx = make_context({"t"});
    RationalFunction t = RationalFunction::variable(ctx, 0);
    RationalFunction f(P("t^2 + 1", ctx), P("t", ctx));
    CHECK(f.compose({t.inv()}) == RationalFunction(P("t^2 + 1", ctx), P("t", ctx)));
    RationalFunction g(P("t + 1", ctx));
    CHECK(g.compose({g}) == RationalFunction(P("t + 2", ctx)));
}

TEST_CASE("term orders") {
    auto cmp = [](const TermOrder& o, std::vector<int> a, std::vector<int> b) {
        return o.compare(Monomial(std::move(a)), Monomial(std::move(b)));
    };
    TermOrder grevlex = TermOrder::grevlex(), lex = TermOrder::lex(), grlex = TermOrder::grlex();
    // x > y under all three; x^2 vs x*y^2 differs between lex and graded
    CHECK(cmp(lex, {1, 0}, {0, 1}) > 0);
    CHECK(cmp(lex, {2, 0}, {1, 2}) > 0);
    CHECK(cmp(grlex, {2, 0}, {1, 2}) < 0);
    CHECK(cmp(grevlex, {2, 0}, {1, 2}) < 0);
    // grevlex ties: smaller last exponent wins
    CHECK(cmp(grevlex, {1, 1, 0}, {0, 2, 0}) > 0);
    CHECK(cmp(grevlex, {2, 0, 1}, {1, 2, 0}) < 0);
    TermOrder w = TermOrder::weighted({1, 0});
    CHECK(cmp(w, {1, 5}, {2, 0}) < 0);
    CHECK_THROWS_AS(TermOrder::weighted({-1, 2}), error);
}

TEST_CASE("commutative Groebner bases") {
    SUBCASE("single generator is its own reduced basis") {
        auto ctx = make_context({"x", "y"});
        GroebnerBasis gb = comm_groebner({P("x^2 - y", ctx)}, TermOrder::grlex());
        REQUIRE(gb.basis.size() == 1);
        CHECK(gb.basis[0] == P("x^2 - y", ctx));
    }
    SUBCASE("monomial ideal") {
        auto ctx = make_context({"x", "y"});
        GroebnerBasis gb = comm_groebner({P("x", ctx), P("y", ctx)});
        REQUIRE(gb.basis.size() == 2);
        CHECK(gb.basis[0] == P("x", ctx));
        CHECK(gb.basis[1] == P("y", ctx));
    }
    SUBCASE("degree-2 rational normal cone quadric") {
        auto ctx = make_context({"z0", "z1", "z2"});
        Polynomial q = P("4*z0*z2 - z1^2", ctx);
        GroebnerBasis gb = comm_groebner({q});
        REQUIRE(gb.basis.size() == 1);
        // reduced basis is monic (grevlex leading monomial is z1^2), the
        // generator up to a scalar
        CHECK(-gb.basis[0] == q);
    }
    SUBCASE("buchberger closes the ideal") {
        auto ctx = make_context({"x", "y"});
        GroebnerBasis gb = comm_groebner({P("x^2 - y", ctx), P("x*y - 1", ctx)});
        for (const auto& g : {P("x^2 - y", ctx), P("x*y - 1", ctx)})
            CHECK(poly_normal_form(g, gb).is_zero());
        // y^2 - x = y*(x^2 - y)*... lies in the ideal: x*(xy-1) - y(x^2-y) = y^2 - x
        CHECK(poly_normal_form(P("y^2 - x", ctx), gb).is_zero());
    }
}

TEST_CASE("polynomial normal forms") {
    auto ctx = make_context({"x11", "x12", "x21", "x22"});
    Polynomial f = P("x11*x22 - x12*x21", ctx);
    // grlex puts x11*x22 in the lead, giving the one-step division example
    GroebnerBasis gb = comm_groebner({f}, TermOrder::grlex());
    CHECK(poly_normal_form(P("x11*x22", ctx), gb) == P("x12*x21", ctx));
    CHECK(poly_normal_form(f, gb).is_zero());
    CHECK(poly_normal_form(P("1", ctx), gb) == P("1", ctx));

    GroebnerBasis grev = comm_groebner({f});
    CHECK(poly_normal_form(f, grev).is_zero());
    CHECK(poly_normal_form(P("x12*x21", ctx), grev) == P("x11*x22", ctx));
}

TEST_CASE("polynomial printing round-trip") {
    auto ctx = make_context({"x", "y"});
    Polynomial p = P("-x^2 + 3/2*x*y - 7", ctx);
    CHECK(P(p.str(), ctx) == p);
    CHECK(Polynomial::zero(ctx).str() == "0");
}
