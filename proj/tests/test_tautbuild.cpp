#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taut/json_io.hpp"
#include "taut/parser.hpp"
#include "taut/tautbuild.hpp"
#include "taut/topo_oracle.hpp"

using namespace taut;

namespace {

WeylElement W(const std::string& s, const WeylContextPtr& ctx) { return parse_operator(s, ctx); }

std::vector<WeylElement> segre_paper_list(const WeylContextPtr& ctx) {
    std::vector<WeylElement> ops;
    for (const char* s : {
             "x11*x22 - x21*x12",
             "x11*d11 + x12*d12 + x21*d21 + x22*d22 + 2",  // E + 2
             "x21*d11 + x22*d12",
             "x11*d21 + x12*d22",
             "x11*d12 + x21*d22",
             "x12*d11 + x22*d21",
             "x11*d11 + x12*d12 + 1",
             "x21*d21 + x22*d22 + 1",
             "x11*d11 + x21*d21 + 1",
             "x12*d12 + x22*d22 + 1",
         })
        ops.push_back(W(s, ctx));
    return ops;
}

}  // namespace

TEST_CASE("vector fields from matrices") {
    auto ctx = make_weyl_context({"z0", "z1", "z2"});
    CHECK(vector_field(ctx, RatMatrix::identity(3)) == -WeylElement::euler(ctx));
    CHECK(vector_field(ctx, RatMatrix(3, 3)).is_zero());

    RepSpec rep = sym_power_rep(2);
    CHECK(action_field(rep, ctx, rep.index_of("E12")) == W("-z1*d0 - 2*z2*d1", ctx));
    CHECK(action_field(rep, ctx, rep.index_of("E21")) == W("-2*z0*d1 - z1*d2", ctx));
    CHECK(action_field(rep, ctx, rep.index_of("H")) == W("-2*z0*d0 + 2*z2*d2", ctx));
    CHECK(action_field(rep, ctx, rep.index_of("e")) == -WeylElement::euler(ctx));
}

TEST_CASE("symmetric power representations") {
    for (int k = 1; k <= 5; ++k) {
        RepSpec rep = sym_power_rep(k);
        CHECK(rep.dim() == static_cast<std::size_t>(k) + 1);
        // display formulas for the induced fields
        auto ctx = rnc_context(k);
        WeylElement e12 = WeylElement::zero(ctx), e21 = WeylElement::zero(ctx),
                    h = WeylElement::zero(ctx);
        for (int i = 1; i <= k; ++i) {
            e12 -= weyl_mul(WeylElement::x_var(ctx, i), WeylElement::d_var(ctx, i - 1))
                       .scaled(Rational(i));
            e21 -= weyl_mul(WeylElement::x_var(ctx, i - 1), WeylElement::d_var(ctx, i))
                       .scaled(Rational(k - i + 1));
        }
        for (int i = 0; i <= k; ++i)
            h -= weyl_mul(WeylElement::x_var(ctx, i), WeylElement::d_var(ctx, i))
                     .scaled(Rational(k - 2 * i));
        CHECK(action_field(rep, ctx, 0) == e12);
        CHECK(action_field(rep, ctx, 1) == e21);
        CHECK(action_field(rep, ctx, 2) == h);
        CHECK(lie_hom_check(rep, ctx));
    }
    CHECK_THROWS_AS(sym_power_rep(0), error);
}

TEST_CASE("segre representation") {
    RepSpec rep = segre_rep();
    CHECK(rep.dim() == 4);
    auto ctx = segre_context();
    // the four off-diagonal fields listed for the product action
    CHECK(action_field(rep, ctx, rep.index_of("E12_1")) == W("-x21*d11 - x22*d12", ctx));
    CHECK(action_field(rep, ctx, rep.index_of("E21_1")) == W("-x11*d21 - x12*d22", ctx));
    CHECK(action_field(rep, ctx, rep.index_of("E12_2")) == W("-x12*d11 - x22*d21", ctx));
    CHECK(action_field(rep, ctx, rep.index_of("E21_2")) == W("-x11*d12 - x21*d22", ctx));
    CHECK(action_field(rep, ctx, rep.index_of("e")) == -WeylElement::euler(ctx));
    CHECK(lie_hom_check(rep, ctx));
    // e is central: [Z(e), Z(xi)] = 0
    WeylElement ze = action_field(rep, ctx, rep.index_of("e"));
    for (std::size_t i = 0; i < rep.basis_size(); ++i)
        CHECK(weyl_bracket(ze, action_field(rep, ctx, i)).is_zero());
}

TEST_CASE("killing matrix from the bracket table") {
    RatMatrix k = killing_matrix(sym_power_rep(3));
    REQUIRE(k.rows() == 3);
    // basis order E12, E21, H: K(E12,E21) = 4, K(H,H) = 8
    CHECK(k(0, 1) == Rational(4));
    CHECK(k(1, 0) == Rational(4));
    CHECK(k(2, 2) == Rational(8));
    CHECK(k(0, 0) == Rational(0));
    CHECK(k(0, 2) == Rational(0));

    RatMatrix ks = killing_matrix(segre_rep());
    REQUIRE(ks.rows() == 6);
    CHECK(ks(0, 1) == Rational(4));
    CHECK(ks(2, 2) == Rational(8));
    CHECK(ks(3, 4) == Rational(4));
    CHECK(ks(0, 4) == Rational(0));  // factors orthogonal
}

TEST_CASE("casimir operator") {
    SUBCASE("scalar action on coordinates of Sym^k") {
        for (int k = 1; k <= 4; ++k) {
            auto ctx = rnc_context(k);
            WeylElement zc = casimir_operator(sym_power_rep(k), ctx);
            Rational scalar = Rational(k * (k + 2), 8);
            for (int j = 0; j <= k; ++j) {
                Polynomial zj = Polynomial::variable(ctx->vars(), j);
                CHECK(apply(zc, zj) == zj.scaled(scalar));
            }
            CHECK(transpose(zc) == zc);
        }
    }
    SUBCASE("adjoint representation of sl2 acts with scalar one") {
        // matrices are ad(E12), ad(E21), ad(H) over the basis (E12, E21, H)
        RatMatrix ad_e(3, 3), ad_f(3, 3), ad_h(3, 3);
        ad_e(2, 1) = Rational(1);   // [E12, E21] = H
        ad_e(0, 2) = Rational(-2);  // [E12, H] = -2 E12
        ad_f(2, 0) = Rational(-1);
        ad_f(1, 2) = Rational(2);
        ad_h(0, 0) = Rational(2);
        ad_h(1, 1) = Rational(-2);
        std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> br;
        br[{0, 1}] = {Rational(0), Rational(0), Rational(1), Rational(0)};
        br[{0, 2}] = {Rational(-2), Rational(0), Rational(0), Rational(0)};
        br[{1, 2}] = {Rational(0), Rational(2), Rational(0), Rational(0)};
        RepSpec adj({"E12", "E21", "H", "e"}, {ad_e, ad_f, ad_h, RatMatrix::identity(3)},
                    std::move(br), 3);
        auto ctx = make_weyl_context({"u0", "u1", "u2"});
        WeylElement zc = casimir_operator(adj, ctx);
        for (std::size_t j = 0; j < 3; ++j) {
            Polynomial uj = Polynomial::variable(ctx->vars(), j);
            CHECK(apply(zc, uj) == uj);
        }
        CHECK(transpose(zc) == zc);
    }
    SUBCASE("segre casimir is transpose-symmetric") {
        auto ctx = segre_context();
        WeylElement zc = casimir_operator(segre_rep(), ctx);
        CHECK(transpose(zc) == zc);
    }
}

TEST_CASE("cone ideals") {
    SUBCASE("rnc sizes and k = 2 quadric") {
        CHECK(rnc_ideal(1, rnc_context(1)->vars()).empty());
        auto c2 = rnc_context(2)->vars();
        auto gens2 = rnc_ideal(2, c2);
        REQUIRE(gens2.size() == 1);
        CHECK(gens2[0] == parse_polynomial("4*z0*z2 - z1^2", c2));
        CHECK(rnc_ideal(3, rnc_context(3)->vars()).size() == 3);
        CHECK(rnc_ideal(4, rnc_context(4)->vars()).size() == 6);
        CHECK_THROWS_AS(rnc_ideal(0, c2), error);
    }
    SUBCASE("segre determinant") {
        auto ctx = segre_context()->vars();
        auto gens = segre_ideal(ctx);
        REQUIRE(gens.size() == 1);
        CHECK(gens[0] == parse_polynomial("x11*x22 - x21*x12", ctx));
        CHECK(poly_normal_form(gens[0], comm_groebner(gens)).is_zero());
    }
}

TEST_CASE("tautological generators") {
    SUBCASE("segre at beta(e) = 2") {
        TautSpec spec = make_segre_spec(Rational(2));
        auto gens = tautological_generators(spec);
        REQUIRE(gens.size() == 8);  // 1 cone + 7 basis elements
        auto ctx = spec.context();
        // the scaling generator contributes -(E + 2)
        CHECK(gens.back() == -W("x11*d11 + x12*d12 + x21*d21 + x22*d22 + 2", ctx));
        for (const auto& g : gens) CHECK(euler_degree(g).has_value());
        CHECK(euler_degree(gens.back()) == 0);
    }
    SUBCASE("rnc scaling generator") {
        for (int k = 2; k <= 4; ++k) {
            TautSpec spec = make_rnc_spec(k, Rational(2, k));
            auto gens = tautological_generators(spec);
            WeylElement expected = -WeylElement::euler(spec.context()) -
                                   WeylElement::constant(spec.context(),
                                                         Rational(k + 1) - Rational(2, k));
            CHECK(gens.back() == expected);
        }
    }
    SUBCASE("trivial one-dimensional representation") {
        auto ctx = make_weyl_context({"x"});
        RepSpec rep({"e"}, {RatMatrix::identity(1)}, {}, 0);
        TautSpec spec(rep, ctx, {}, {});
        auto gens = tautological_generators(spec);
        REQUIRE(gens.size() == 1);
        CHECK(gens[0] == W("-x*dx - 1", ctx));
    }
}

TEST_CASE("ideal equality") {
    auto ctx = make_weyl_context({"x"});
    CHECK(ideal_equal({W("x*dx - 1", ctx)}, {W("dx*x - 2", ctx)}));
    CHECK_FALSE(ideal_equal({W("x", ctx)}, {W("dx", ctx)}));

    SUBCASE("segre generators match the published operator list") {
        TautSpec spec = make_segre_spec(Rational(2));
        CHECK(ideal_equal(tautological_generators(spec), segre_paper_list(spec.context())));
    }
    SUBCASE("wrong beta gives a different ideal") {
        TautSpec spec = make_segre_spec(Rational(1));
        CHECK_FALSE(ideal_equal(tautological_generators(spec), segre_paper_list(spec.context())));
    }
}

TEST_CASE("segre membership computations") {
    TautSpec spec = make_segre_spec(Rational(2));
    auto ctx = spec.context();
    LeftGB gb = left_groebner(tautological_generators(spec));
    WeylElement p = W("d11*d22 - d21*d12", ctx);
    for (const char* x : {"x11", "x12", "x21", "x22"})
        CHECK(weyl_normal_form(weyl_mul(W(x, ctx), p), gb).is_zero());
    CHECK_FALSE(weyl_normal_form(p, gb).is_zero());
    for (const auto& g : tautological_generators(spec))
        CHECK(weyl_normal_form(g, gb).is_zero());
}

TEST_CASE("fourier-laplace images of the shipped ideals") {
    SUBCASE("rnc(2) cone quadric") {
        auto ctx = rnc_context(2);
        Polynomial q = parse_polynomial("4*z0*z2 - z1^2", ctx->vars());
        CHECK(fourier_laplace(WeylElement::from_polynomial(ctx, q)) ==
              W("4*d0*d2 - d1^2", ctx));
    }
    SUBCASE("euler generators map to euler generators") {
        auto ctx = rnc_context(3);
        WeylElement e = WeylElement::euler(ctx);
        Rational c(5, 3);
        WeylElement img = fourier_laplace(-e - WeylElement::constant(ctx, c));
        CHECK(img == e + WeylElement::constant(ctx, Rational(4) - c));
    }
    SUBCASE("one-variable euler ideal") {
        auto ctx = make_weyl_context({"x"});
        auto img = fl_ideal({W("x*dx - 1/2", ctx)});
        CHECK(ideal_equal(img, {W("x*dx + 3/2", ctx)}));  // x dx + beta + 1
    }
}

TEST_CASE("casimir identity on the coordinate ring") {
    RootSystem a1 = RootSystem::build("A1");
    RootSystem a1a1 = RootSystem::build("A1xA1");
    Weight mu2(std::vector<Rational>{Rational(2)});
    Weight mu3(std::vector<Rational>{Rational(3)});
    Weight mu11(std::vector<Rational>{Rational(1), Rational(1)});

    CHECK(casimir_action_check(make_rnc_spec(2, Rational(1)), a1, mu2, 3));
    CHECK(casimir_action_check(make_rnc_spec(3, Rational(2, 3)), a1, mu3, 2));
    CHECK(casimir_action_check(make_segre_spec(Rational(2)), a1a1, mu11, 2));
}

TEST_CASE("casimir-euler membership in the cone ideal") {
    RootSystem a1 = RootSystem::build("A1");
    RootSystem a1a1 = RootSystem::build("A1xA1");
    Weight mu2(std::vector<Rational>{Rational(2)});
    Weight mu3(std::vector<Rational>{Rational(3)});
    Weight mu11(std::vector<Rational>{Rational(1), Rational(1)});

    CHECK(casimir_euler_membership(make_rnc_spec(2, Rational(1)), a1, mu2));
    CHECK(casimir_euler_membership(make_rnc_spec(3, Rational(2, 3)), a1, mu3));
    CHECK(casimir_euler_membership(make_segre_spec(Rational(2)), a1a1, mu11));
}

TEST_CASE("tautspec json round-trip") {
    TautSpec spec = make_rnc_spec(2, Rational(1));
    std::string text = tautspec_to_json(spec);
    TautSpec back = tautspec_from_json(text);
    CHECK(back.context()->vars()->names() == spec.context()->vars()->names());
    CHECK(back.beta_e() == Rational(1));
    CHECK(ideal_equal(tautological_generators(back), tautological_generators(spec)));
}

TEST_CASE("operator json round-trip") {
    auto ctx = segre_context();
    WeylElement p = W("x11*d11 + 2*d12^2 - 3/2", ctx);
    WeylElement back = operator_from_json(operator_to_json(p));
    CHECK(back == p);
}
