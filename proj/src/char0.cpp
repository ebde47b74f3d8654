#include "cga/char0.hpp"

#include <functional>

#include "cga/decompose.hpp"
#include "cga/upoly.hpp"

namespace cga {

namespace {
constexpr std::uint8_t X = 0, Y1 = 1, Y2 = 2;

FieldElement third(const FieldPtr& F) { return F->from_integer(3).inverse(); }
} // namespace

CubicPresentation make_cubic_presentation(const FieldPtr& F, const FieldElement& r,
                                          const FieldElement& t, const FieldElement& e,
                                          const FieldElement& alpha, const FieldElement& beta,
                                          const FieldElement& gamma, const FieldElement& delta) {
    if (F->characteristic() == 3)
        throw precondition_error("this family requires characteristic different from 3");
    if (!F->has_rho())
        throw precondition_error("the coefficient field must contain a primitive cube root of unity");
    if (alpha.is_zero()) throw precondition_error("alpha must be nonzero");
    for (const FieldElement* c : {&r, &t, &e, &alpha, &beta, &gamma, &delta})
        if (!c->field()->same(*F)) throw precondition_error("coefficient field mismatch");
    return CubicPresentation{F, r, t, e, alpha, beta, gamma, delta};
}

Char0Invariants char0_invariants(const CubicPresentation& p) {
    const FieldPtr& F = p.F;
    FieldElement inv3 = third(F);
    FieldElement inv_alpha = p.alpha.inverse();
    // D1 = gamma + e r / 3 - beta^2 / (3 alpha)
    FieldElement D1 = p.gamma + p.e * p.r * inv3 - p.beta * p.beta * inv3 * inv_alpha;
    // D2 = e beta - 3 alpha t - alpha r^2
    FieldElement D2 = p.e * p.beta - F->from_integer(3) * p.alpha * p.t - p.alpha * p.r * p.r;
    // D = e^3/27a + beta^3/27a^2 - 2r^3/27 + (beta/3a) D1 - r t/3 - delta
    FieldElement inv27 = F->from_integer(27).inverse();
    FieldElement D = p.e * p.e * p.e * inv27 * inv_alpha +
                     p.beta * p.beta * p.beta * inv27 * inv_alpha * inv_alpha -
                     F->from_integer(2) * p.r * p.r * p.r * inv27 +
                     p.beta * inv3 * inv_alpha * D1 - p.r * p.t * inv3 - p.delta;
    return {D1, D2, D};
}

GenSetPtr cubic_generators(const FieldPtr& F) {
    return GeneratorSet::make(F, {{"x", 1, 0}, {"y1", 2, 2}, {"y2", 3, 1}});
}

NCPoly y0_expression(const CubicPresentation& p) {
    auto G = cubic_generators(p.F);
    FieldElement s = (p.F->from_integer(3) * p.alpha).inverse();
    NCPoly out(G);
    out.add_term({X, X}, s * p.e);
    out.add_term({X}, s * p.beta);
    out.add_term({}, s * p.alpha * p.r);
    return out;
}

NCPoly w_expression(const CubicPresentation& p) {
    auto G = cubic_generators(p.F);
    auto inv = char0_invariants(p);
    const FieldPtr& F = p.F;
    FieldElement rho = F->rho();
    FieldElement inv_alpha = p.alpha.inverse();
    NCPoly out(G);
    // x^-1 y2 y1 = alpha^-1 x^2 y2 y1
    out.add_term({X, X, Y2, Y1}, inv_alpha);
    // rho^2 (D1 / 3 alpha) x
    out.add_term({X}, rho * rho * inv.D1 * third(F) * inv_alpha);
    // (D2 / 9 alpha) x^-1 = (D2 / 9 alpha^2) x^2
    out.add_term({X, X}, inv.D2 * F->from_integer(9).inverse() * inv_alpha * inv_alpha);
    return out;
}

RewriteSystemPtr char0_rewrite_system(const CubicPresentation& p) {
    const FieldPtr& F = p.F;
    auto G = cubic_generators(F);
    auto inv = char0_invariants(p);
    FieldElement rho = F->rho();
    FieldElement one_minus_rho = F->one() - rho;
    FieldElement inv_alpha = p.alpha.inverse();

    std::vector<RewriteRule> rules;
    // x^3 -> alpha
    rules.push_back({Word{X, X, X}, NCPoly::constant(G, p.alpha)});
    // y1 x -> rho x y1 ; y2 x -> rho^2 x y2
    rules.push_back({Word{Y1, X}, NCPoly::word(G, {X, Y1}).scaled(rho)});
    rules.push_back({Word{Y2, X}, NCPoly::word(G, {X, Y2}).scaled(rho * rho)});
    // y1 y2 -> rho y2 y1 + (1-rho) D1/(3 alpha) x^2 - (1-rho) D2/(9 alpha)
    {
        NCPoly rhs = NCPoly::word(G, {Y2, Y1}).scaled(rho);
        rhs.add_term({X, X}, one_minus_rho * inv.D1 * third(F) * inv_alpha);
        rhs.add_term({}, -(one_minus_rho * inv.D2 * F->from_integer(9).inverse() * inv_alpha));
        rules.push_back({Word{Y1, Y2}, rhs});
    }
    // y2^3 -> rho^2 e w - D - y1^3   (w expanded, x^-1 = alpha^-1 x^2)
    {
        NCPoly rhs = w_expression(p).scaled(rho * rho * p.e);
        rhs.add_term({}, -inv.D);
        rhs.add_term({Y1, Y1, Y1}, -F->one());
        rules.push_back({Word{Y2, Y2, Y2}, rhs});
    }
    return RewriteSystem::make(G, std::move(rules));
}

CurveModel char0_curve(const CubicPresentation& p) {
    const FieldPtr& F = p.F;
    auto inv = char0_invariants(p);
    FieldElement rho = F->rho();
    FieldElement inv_alpha = p.alpha.inverse();
    std::vector<std::string> vars{"R", "S"};
    MultiPoly E(F, vars);
    // S^2 + (D - rho^2 e R) S + alpha R^3
    //   - D1^3/(27 alpha) - D2^3/(729 alpha^3) - rho^2 (D1 D2 / 9 alpha) R = 0
    E.add_term({0, 2}, F->one());
    E.add_term({0, 1}, inv.D);
    E.add_term({1, 1}, -(rho * rho * p.e));
    E.add_term({3, 0}, p.alpha);
    E.add_term({0, 0}, -(inv.D1.pow(3) * F->from_integer(27).inverse() * inv_alpha));
    E.add_term({0, 0}, -(inv.D2.pow(3) * F->from_integer(729).inverse() * inv_alpha.pow(3)));
    E.add_term({1, 0}, -(rho * rho * inv.D1 * inv.D2 * F->from_integer(9).inverse() * inv_alpha));
    return CurveModel{E, "center relation in the coordinates (R, S)"};
}

bool point_on_curve(const CurvePoint& pt, const CurveModel& curve) {
    if (pt.coords.size() != curve.poly.nvars())
        throw precondition_error("point dimension does not match the curve");
    return curve.poly.eval(pt.coords).is_zero();
}

SmoothnessReport curve_smoothness(const CurveModel& curve) {
    SmoothnessReport rep;
    const MultiPoly& E = curve.poly;
    const FieldPtr& F = E.field();
    MultiPoly Er = E.derivative(0), Es = E.derivative(1);
    if (F->is_finite()) {
        mpz_class q = F->size();
        if (q > 4096) {
            rep.detail = "field too large for exhaustive singular-point search";
            return rep;
        }
        for (mpz_class i = 0; i < q; ++i)
            for (mpz_class j = 0; j < q; ++j) {
                std::vector<FieldElement> pt{F->element_at(i), F->element_at(j)};
                if (E.eval(pt).is_zero() && Er.eval(pt).is_zero() && Es.eval(pt).is_zero()) {
                    rep.singular_found = true;
                    rep.singular_points.push_back(pt);
                }
            }
        rep.detail = rep.singular_found ? "singular points found by exhaustive search"
                                        : "no singular point over the coefficient field";
        return rep;
    }
    // characteristic 0: eliminate S from {E, dE/dS} and {E, dE/dR} by
    // resultants in S; a common factor of the eliminants witnesses a singular
    // point over the closure.  Informational only.
    auto as_upoly_in_S = [&](const MultiPoly& P) {
        std::vector<UPoly> out;
        for (const auto& [e, c] : P.terms()) {
            unsigned dr = e[0], ds = e[1];
            if (out.size() <= ds) out.resize(ds + 1, UPoly(F));
            std::vector<FieldElement> mono(dr + 1, F->zero());
            mono[dr] = c;
            out[ds] = out[ds] + UPoly(F, mono);
        }
        return out;
    };
    std::function<UPoly(std::vector<std::vector<UPoly>>&)> ddet =
        [&](std::vector<std::vector<UPoly>>& A) -> UPoly {
        std::size_t k = A.size();
        if (k == 1) return A[0][0];
        UPoly acc(F);
        for (std::size_t c = 0; c < k; ++c) {
            if (A[0][c].is_zero()) continue;
            std::vector<std::vector<UPoly>> minor;
            for (std::size_t i = 1; i < k; ++i) {
                std::vector<UPoly> row;
                for (std::size_t j = 0; j < k; ++j)
                    if (j != c) row.push_back(A[i][j]);
                minor.push_back(std::move(row));
            }
            UPoly term = A[0][c] * ddet(minor);
            acc = (c % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    auto sylv_res = [&](const std::vector<UPoly>& a, const std::vector<UPoly>& b) {
        int n = (int)a.size() - 1, m = (int)b.size() - 1;
        if (n < 0 || m < 0) return UPoly(F);
        if (n == 0) return a[0].pow((unsigned)m);
        if (m == 0) return b[0].pow((unsigned)n);
        std::size_t sz = (std::size_t)(n + m);
        std::vector<std::vector<UPoly>> M(sz, std::vector<UPoly>(sz, UPoly(F)));
        for (int row = 0; row < m; ++row)
            for (int k = 0; k <= n; ++k) M[(size_t)row][(size_t)(row + k)] = a[(size_t)(n - k)];
        for (int row = 0; row < n; ++row)
            for (int k = 0; k <= m; ++k) M[(size_t)(m + row)][(size_t)(row + k)] = b[(size_t)(m - k)];
        return ddet(M);
    };
    auto sE = as_upoly_in_S(E);
    auto sEs = as_upoly_in_S(Es);
    auto sEr = as_upoly_in_S(Er);
    UPoly r1 = sylv_res(sE, sEs);
    UPoly r2 = sylv_res(sE, sEr);
    UPoly g = (r1.is_zero() || r2.is_zero()) ? (r1.is_zero() ? r2 : r1) : gcd(r1, r2);
    if (g.is_zero() || g.degree() > 0) {
        rep.singular_found = true;
        rep.detail = "resultant criterion: common eliminant factor " + g.str("R") +
                     " -- singular points exist over the closure";
    } else {
        rep.detail = "resultant criterion: eliminants are coprime, affine curve is smooth";
    }
    return rep;
}

namespace {

NCPoly commutator_nf(const RewriteSystemPtr& rs, const NCPoly& a, const NCPoly& b) {
    return rs->normal_form(a * b - b * a);
}

void check_zero(CheckReport& rep, const std::string& name, const NCPoly& nf) {
    rep.items.push_back({name, nf.is_zero(), nf.is_zero() ? "" : nf.str()});
}

} // namespace

CheckReport char0_centrality_report(const CubicPresentation& p) {
    auto rs = char0_rewrite_system(p);
    auto G = rs->gens();
    NCPoly w = w_expression(p);
    NCPoly y1c = NCPoly::word(G, {Y1, Y1, Y1});
    NCPoly y2c = NCPoly::word(G, {Y2, Y2, Y2});
    CheckReport rep;
    const char* cnames[3] = {"w", "y1^3", "y2^3"};
    const NCPoly* cs[3] = {&w, &y1c, &y2c};
    const char* gnames[3] = {"x", "y1", "y2"};
    for (int ci = 0; ci < 3; ++ci)
        for (std::size_t gi = 0; gi < 3; ++gi) {
            NCPoly g = NCPoly::generator(G, gi);
            check_zero(rep, std::string("[") + cnames[ci] + ", " + gnames[gi] + "]",
                       commutator_nf(rs, *cs[ci], g));
        }
    return rep;
}

CheckReport char0_identity_report(const CubicPresentation& p) {
    const FieldPtr& F = p.F;
    auto rs = char0_rewrite_system(p);
    auto G = rs->gens();
    auto inv = char0_invariants(p);
    FieldElement rho = F->rho();
    CheckReport rep;

    // solved cubic relation: D + y1^3 + y2^3 - rho^2 e w = 0
    NCPoly solved = NCPoly::constant(G, inv.D) + NCPoly::word(G, {Y1, Y1, Y1}) +
                    NCPoly::word(G, {Y2, Y2, Y2}) - w_expression(p).scaled(rho * rho * p.e);
    check_zero(rep, "D + y1^3 + y2^3 - rho^2*e*w", rs->normal_form(solved));

    NCPoly x = NCPoly::generator(G, X);
    NCPoly y = y0_expression(p) + NCPoly::generator(G, Y1) + NCPoly::generator(G, Y2);

    check_zero(rep, "x^3 - alpha",
               rs->normal_form(x.pow(3) - NCPoly::constant(G, p.alpha)));
    NCPoly lhs2 = star_product<NCPoly>({{x, 2}, {y, 1}});
    NCPoly rhs2 = x.pow(2).scaled(p.r) + x.scaled(p.e) + NCPoly::constant(G, p.beta);
    check_zero(rep, "x^2*y - (r*x^2 + e*x + beta)", rs->normal_form(lhs2 - rhs2));
    NCPoly lhs3 = star_product<NCPoly>({{x, 1}, {y, 2}});
    NCPoly rhs3 = (x * y).scaled(p.r) + (y * x).scaled(p.r) + x.scaled(p.t) + y.scaled(p.e) +
                  NCPoly::constant(G, p.gamma);
    check_zero(rep, "x*y^2 - (r*x*y + r*y*x + t*x + e*y + gamma)", rs->normal_form(lhs3 - rhs3));
    NCPoly rhs4 = y.pow(2).scaled(p.r) + y.scaled(p.t) + NCPoly::constant(G, p.delta);
    check_zero(rep, "y^3 - (r*y^2 + t*y + delta)", rs->normal_form(y.pow(3) - rhs4));
    return rep;
}

Char0Image char0_simple_image(const CubicPresentation& p, const CurvePoint& pt,
                              bool assert_alpha_not_cube) {
    const FieldPtr& F = p.F;
    auto inv = char0_invariants(p);
    if (inv.D.is_zero())
        throw precondition_error("the classification requires D != 0");
    auto cube = has_cube_root(p.alpha);
    if (cube.status == CubeRootResult::Status::found)
        throw precondition_error("alpha has the cube root " + cube.root->str() +
                                 ", so the subalgebra generated by x is not a field");
    if (cube.status == CubeRootResult::Status::unknown && !assert_alpha_not_cube)
        throw precondition_error("cannot decide whether alpha is a cube over this field; "
                                 "pass --assert-alpha-not-cube to proceed");
    if (pt.coords.size() != 2) throw precondition_error("expected a point (R0, S0)");
    if (!pt.L->extends(*F))
        throw precondition_error("the point's field does not extend the coefficient field");
    CurveModel E = char0_curve(p);
    if (!point_on_curve(pt, CurveModel{E.poly.embedded(pt.L), E.label}))
        throw precondition_error("the point does not lie on the curve");

    FieldElement R0 = pt.coords[0], S0 = pt.coords[1];
    FieldElement rho = F->rho().embedded(pt.L);
    FieldElement alpha = p.alpha.embedded(pt.L);
    FieldElement y2cube = rho * rho * p.e.embedded(pt.L) * R0 - S0 - inv.D.embedded(pt.L);
    if (S0.is_zero() && y2cube.is_zero())
        throw verification_error("both y1^3 and y2^3 vanish at the point although D != 0");
    if (!S0.is_zero())
        return {SymbolAlgebraF::root_of_unity(3, alpha, S0, rho), true};
    return {SymbolAlgebraF::root_of_unity(
                3, rho * rho * p.e.embedded(pt.L) * R0 - inv.D.embedded(pt.L), alpha, rho),
            false};
}

MatrixRep char0_build_representation(const CubicPresentation& p, const CurvePoint& pt,
                                     const FieldPtr& L) {
    const FieldPtr& F = p.F;
    if (!L->extends(*F))
        throw precondition_error("the representation field does not extend the coefficient field");
    if (pt.coords.size() != 2) throw precondition_error("expected a point (R0, S0)");
    CurveModel E = char0_curve(p);
    CurvePoint ptL{L, {pt.coords[0].embedded(L), pt.coords[1].embedded(L)}};
    if (!point_on_curve(ptL, CurveModel{E.poly.embedded(L), E.label}))
        throw precondition_error("the point does not lie on the curve");
    FieldElement R0 = ptL.coords[0], S0 = ptL.coords[1];
    if (S0.is_zero())
        throw precondition_error("S0 = 0: the construction through an invertible y1 does not "
                                 "apply; use the symbol parameters with the roles of y1 and y2 "
                                 "swapped");
    auto cube = has_cube_root(p.alpha.embedded(L));
    if (cube.status != CubeRootResult::Status::found)
        throw precondition_error("no cube root of alpha available in " + L->describe() +
                                 "; extend the field");
    FieldElement c = *cube.root;
    FieldElement rho = F->rho().embedded(L);
    FieldElement alpha = p.alpha.embedded(L);
    auto inv = char0_invariants(p);
    FieldElement zero = L->zero(), one = L->one();

    Matrix<FieldElement> U(3, 3, zero);
    U.at(0, 0) = c;
    U.at(1, 1) = rho * rho * c;
    U.at(2, 2) = rho * c;
    Matrix<FieldElement> V(3, 3, zero);
    V.at(1, 0) = one; // e1 -> e2
    V.at(2, 1) = one; // e2 -> e3
    V.at(0, 2) = S0;  // e3 -> S0 e1
    auto I = Matrix<FieldElement>::identity(3, zero, one);

    // fixed orientation, verified rather than assumed
    if (U * U * U != I.scaled(alpha) || V * V * V != I.scaled(S0) ||
        V * U != (U * V).scaled(rho))
        throw verification_error("matrix orientation assertion failed");

    Matrix<FieldElement> U_inv = (U * U).scaled(alpha.inverse());
    Matrix<FieldElement> V_inv = (V * V).scaled(S0.inverse());
    FieldElement i3a = (L->from_integer(3) * alpha).inverse();

    Matrix<FieldElement> Y0 =
        ((U * U).scaled(p.e.embedded(L)) + U.scaled(p.beta.embedded(L)) +
         I.scaled(alpha * p.r.embedded(L)))
            .scaled(i3a);
    Matrix<FieldElement> mid =
        I.scaled(R0) - U.scaled(rho * rho * inv.D1.embedded(L) * i3a) -
        U_inv.scaled(inv.D2.embedded(L) * (L->from_integer(9) * alpha).inverse());
    Matrix<FieldElement> Y2 = U * mid * V_inv;
    Matrix<FieldElement> Xm = U;
    Matrix<FieldElement> Ym = Y0 + V + Y2;

    auto star2 = star_product<Matrix<FieldElement>>({{Xm, 2}, {Ym, 1}});
    auto star1 = star_product<Matrix<FieldElement>>({{Xm, 1}, {Ym, 2}});
    bool ok =
        Xm * Xm * Xm == I.scaled(alpha) &&
        star2 == (Xm * Xm).scaled(p.r.embedded(L)) + Xm.scaled(p.e.embedded(L)) +
                     I.scaled(p.beta.embedded(L)) &&
        star1 == (Xm * Ym).scaled(p.r.embedded(L)) + (Ym * Xm).scaled(p.r.embedded(L)) +
                     Xm.scaled(p.t.embedded(L)) + Ym.scaled(p.e.embedded(L)) +
                     I.scaled(p.gamma.embedded(L)) &&
        Ym * Ym * Ym == (Ym * Ym).scaled(p.r.embedded(L)) + Ym.scaled(p.t.embedded(L)) +
                            I.scaled(p.delta.embedded(L));
    if (!ok)
        throw verification_error("constructed matrices violate a presentation relation");
    return MatrixRep{L, 3, {Xm, Ym}};
}

} // namespace cga
