#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cga/parser.hpp"

using namespace cga;

TEST_CASE("field spec mini-language") {
    SUBCASE("QQ.rho") {
        auto F = parse_field_spec("QQ.rho");
        CHECK(F->has_rho());
        CHECK(F->describe() == "QQ(rho)");
    }
    SUBCASE("GF(7).rho stays in the prime field") {
        auto F = parse_field_spec("GF(7).rho");
        CHECK(F->tower_height() == 0);
        CHECK(F->has_rho());
    }
    SUBCASE("GF(2).ext(T^2+T+1) is the four-element field") {
        auto F = parse_field_spec("GF(2).ext(T^2+T+1)");
        CHECK(F->size() == 4);
    }
    SUBCASE("QQ.rho.ext(c^3-2) names the generator c") {
        auto F = parse_field_spec("QQ.rho.ext(c^3-2)");
        CHECK(F->tower_height() == 2);
        auto c = F->generator("c");
        CHECK(c * c * c == F->from_integer(2));
    }
    SUBCASE("bad specs are rejected") {
        CHECK_THROWS_AS(parse_field_spec("RR"), parse_error);
        CHECK_THROWS_AS(parse_field_spec("GF(6)"), precondition_error);
        CHECK_THROWS_AS(parse_field_spec("QQ.foo"), parse_error);
        CHECK_THROWS_AS(parse_field_spec("QQ.ext(c^2+d)"), precondition_error);
    }
}

TEST_CASE("field element expressions") {
    auto F = parse_field_spec("QQ.rho");
    CHECK(parse_field_element("rho^2 + rho + 1", F).is_zero());
    CHECK(parse_field_element("1/2 + 1/3", F) == F->from_rational(mpq_class(5, 6)));
    CHECK(parse_field_element("-(2 - rho)*3", F) == (F->rho() - F->from_integer(2)).scaled(3));
    CHECK(parse_field_element("2^-1", F) == F->from_rational(mpq_class(1, 2)));
    CHECK_THROWS_AS(parse_field_element("nosuch", F), precondition_error);
    CHECK_THROWS_AS(parse_field_element("2 +", F), parse_error);
}

TEST_CASE("parsing the monic form") {
    auto F = parse_field_spec("QQ.rho");
    SUBCASE("the mixed cubic") {
        auto p = parse_phi("Z^3 - X*Y*Z - (X^3 + Y^3)", F);
        CHECK(p.d == 3);
        CHECK(p.n == 2);
        auto cls = classify_phi(p, F);
        REQUIRE(cls.family == PhiFamily::cubic_char_not3);
        const auto& c = *cls.cubic;
        CHECK(c.r.is_zero());
        CHECK(c.t.is_zero());
        CHECK(c.e.is_one());
        CHECK(c.alpha.is_one());
        CHECK(c.beta.is_zero());
        CHECK(c.gamma.is_zero());
        CHECK(c.delta.is_one());
    }
    SUBCASE("a single diagonal term") {
        auto p = parse_phi("Z^3 - 2*X^3", F);
        auto cls = classify_phi(p, F);
        REQUIRE(cls.family == PhiFamily::cubic_char_not3);
        CHECK(cls.cubic->alpha == F->from_integer(2));
        CHECK(cls.cubic->delta.is_zero());
    }
    SUBCASE("an X Z^2 term is outside the implemented family") {
        auto p = parse_phi("Z^3 - X*Z^2", F);
        auto cls = classify_phi(p, F);
        CHECK(cls.family == PhiFamily::general);
        CHECK(cls.family_note.find("f1") != std::string::npos);
    }
    SUBCASE("non-monic and inhomogeneous forms are rejected") {
        CHECK_THROWS_AS(parse_phi("2*Z^3 - X^3", F), precondition_error);
        CHECK_THROWS_AS(parse_phi("Z^3 - X^2", F), precondition_error);
        CHECK_THROWS_AS(parse_phi("X^3 + Y^3", F), precondition_error);
    }
    SUBCASE("parse -> print -> parse round-trips the coefficients") {
        for (const char* s : {"Z^3 - X*Y*Z - (X^3 + Y^3)",
                              "Z^3 - 3*Y*Z^2 - (X*Y + Y^2)*Z - (X^3 + X^2*Y + X*Y^2 + Y^3)",
                              "Z^3 - 2*X^3 - 5*Y^3"}) {
            auto p1 = parse_phi(s, F);
            auto p2 = parse_phi(phi_to_string(p1), F);
            CHECK(p1.phi == p2.phi);
        }
    }
    SUBCASE("characteristic 3 classification") {
        auto F3 = parse_field_spec("GF(3)");
        auto ez = classify_phi(parse_phi("Z^3 - (X^3 + X^2*Y + 2*X*Y^2 + Y^3)", F3), F3);
        REQUIRE(ez.family == PhiFamily::cubic_char3);
        CHECK(ez.char3->branch == Char3Branch::e_zero);
        auto raw = classify_phi(parse_phi("Z^3 - 2*X*Y*Z - X^3", F3), F3);
        REQUIRE(raw.family == PhiFamily::cubic_char3);
        CHECK(raw.char3->branch == Char3Branch::e_nonzero_normalized);
        CHECK(raw.char3->original_e == F3->from_integer(2));
        auto norm = classify_phi(parse_phi("Z^3 - (X^2 - Y^2)*Z - (X^3 + Y^3)", F3), F3);
        REQUIRE(norm.family == PhiFamily::cubic_char3);
        CHECK(norm.char3->branch == Char3Branch::e_nonzero_normalized);
        CHECK(norm.char3->original_e == F3->one());
    }
    SUBCASE("general multivariate form for verification") {
        auto p = parse_phi("Z^3 - (X1^3 + X2^3 + X3^3)", F);
        CHECK(p.n == 3);
        auto cls = classify_phi(p, F);
        CHECK(cls.family == PhiFamily::general);
        CHECK(cls.general.d == 3);
    }
}

TEST_CASE("noncommutative expressions") {
    auto F = parse_field_spec("QQ.rho");
    auto cls = classify_phi(parse_phi("Z^3 - X*Y*Z - (X^3 + Y^3)", F), F);
    auto ctx = make_presentation_context(cls);

    SUBCASE("central element commutes: nf(w x - x w) = 0") {
        auto p = parse_nc_expression("w x - x w", ctx, F);
        CHECK(ctx.rs->normal_form(p).is_zero());
        auto q = parse_nc_expression("w*x - x*w", ctx, F);
        CHECK(ctx.rs->normal_form(q).is_zero());
    }
    SUBCASE("star products") {
        auto p = parse_nc_expression("star(x^2 * y1)", ctx, F);
        CHECK(p.term_count() == 3);
        // e = 1, beta = r = 0 here, so the second defining relation reads
        // star(x^2 * y) = e*x and reduces to zero in the quotient
        auto rel = parse_nc_expression("star(x^2 * y) - (r*x^2 + e*x + beta)", ctx, F);
        CHECK(ctx.rs->normal_form(rel).is_zero());
        CHECK_THROWS(parse_nc_expression("star()", ctx, F));
    }
    SUBCASE("iterated commutators") {
        auto z = parse_nc_expression("comm(y1, y1, 1)", ctx, F);
        CHECK(z.is_zero());
        auto c = parse_nc_expression("comm(y1, x, 1)", ctx, F);
        // [y1, x] = x y1 - y1 x
        auto G = ctx.rs->gens();
        CHECK(c == NCPoly::word(G, {0, 1}) - NCPoly::word(G, {1, 0}));
    }
    SUBCASE("solved relation reduces to zero through named elements") {
        auto inv = char0_invariants(*cls.cubic);
        auto p = parse_nc_expression("y1^3 + y2^3 - rho^2 w", ctx, F);
        auto nf = ctx.rs->normal_form(p);
        CHECK(nf == NCPoly::constant(ctx.rs->gens(), -inv.D));
    }
}
