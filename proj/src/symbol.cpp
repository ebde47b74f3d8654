#include "cga/symbol.hpp"

#include "cga/char0.hpp"

namespace cga {

SymbolAlgebraFF::Element PhiOracle::eval(const NCPoly& p) const {
    auto acc = algebra->zero();
    for (const auto& [w, c] : p.terms()) {
        auto term = algebra->from_scalar(function_field->from_constant(c));
        for (auto g : w) {
            switch (g) {
                case 0: term = term * img_x; break;
                case 1: term = term * img_y1; break;
                case 2: term = term * img_y2; break;
                default: throw precondition_error("polynomial uses an unmapped generator");
            }
        }
        acc = acc + term;
    }
    return acc;
}

PhiOracle phi_map(const CubicPresentation& pres) {
    const FieldPtr& F = pres.F;
    if (pres.alpha.is_zero()) throw precondition_error("alpha must be nonzero");
    auto inv = char0_invariants(pres);
    CurveModel E = char0_curve(pres);

    // read the curve as the monic quadratic S^2 + B(R) S + C(R)
    UPoly B(F), C(F);
    for (const auto& [e, c] : E.poly.terms()) {
        unsigned dr = e[0], ds = e[1];
        std::vector<FieldElement> mono(dr + 1, F->zero());
        mono[dr] = c;
        if (ds == 2) {
            if (dr != 0 || !c.is_one())
                throw precondition_error("curve relation is not monic of degree 2 in S");
        } else if (ds == 1) {
            B = B + UPoly(F, mono);
        } else if (ds == 0) {
            C = C + UPoly(F, mono);
        } else {
            throw precondition_error("curve relation has S-degree above 2");
        }
    }

    auto FE = FunctionField::quadratic(F, "R", "S", B, C);
    FieldElement rho = F->rho();
    auto A = SymbolAlgebraFF::root_of_unity(3, FE->from_constant(pres.alpha), FE->s(),
                                            FE->from_constant(rho));

    PhiOracle phi;
    phi.function_field = FE;
    phi.algebra = A;
    phi.img_x = A->u();
    phi.img_y1 = A->v();
    // y2 -> u (R - rho^2 (D1/3a) u - (D2/9a) u^-1) v^-1
    FuncElem c1 = FE->from_constant(rho * rho * inv.D1 *
                                    (F->from_integer(3) * pres.alpha).inverse());
    FuncElem c2 = FE->from_constant(inv.D2 * (F->from_integer(9) * pres.alpha).inverse());
    auto mid = A->from_scalar(FE->variable()) - A->u().scaled(c1) - A->u_inverse().scaled(c2);
    phi.img_y2 = A->u() * mid * A->v_inverse();

    // the homomorphism property, asserted at construction
    auto alpha1 = A->from_scalar(FE->from_constant(pres.alpha));
    if (phi.img_x.pow(3) != alpha1)
        throw verification_error("oracle: x^3 = alpha fails");
    if (phi.img_y1.pow(3) != A->from_scalar(FE->s()))
        throw verification_error("oracle: y1^3 = S fails");
    FuncElem rhoc = FE->from_constant(rho);
    if (phi.img_y1 * phi.img_x != (phi.img_x * phi.img_y1).scaled(rhoc))
        throw verification_error("oracle: y1 x = rho x y1 fails");
    if (phi.img_y2 * phi.img_x != (phi.img_x * phi.img_y2).scaled(rhoc * rhoc))
        throw verification_error("oracle: y2 x = rho^2 x y2 fails");
    // y1 y2 = rho y2 y1 + (1-rho) D1/(3a) x^2 - (1-rho) D2/(9a)
    {
        FuncElem onem = FE->from_constant(F->one() - rho);
        auto lhs = phi.img_y1 * phi.img_y2;
        auto rhs = (phi.img_y2 * phi.img_y1).scaled(rhoc) +
                   (phi.img_x * phi.img_x).scaled(onem * c1 / rhoc / rhoc) -
                   A->one().scaled(onem * c2);
        // c1 = rho^2 D1/(3a); the relation needs D1/(3a), so divide the twist out
        if (lhs != rhs)
            throw verification_error("oracle: the y1 y2 straightening relation fails");
    }
    // w -> R
    auto w_img = phi.eval(w_expression(pres));
    if (w_img != A->from_scalar(FE->variable()))
        throw verification_error("oracle: w does not map to R");
    // D + y1^3 + y2^3 - rho^2 e w = 0
    {
        auto lhs = A->from_scalar(FE->from_constant(inv.D)) + phi.img_y1.pow(3) +
                   phi.img_y2.pow(3) -
                   w_img.scaled(rhoc * rhoc * FE->from_constant(pres.e));
        if (!lhs.is_zero())
            throw verification_error("oracle: the solved cubic relation fails");
    }
    return phi;
}

std::size_t phi_monomial_rank(const CubicPresentation& pres) {
    PhiOracle phi = phi_map(pres);
    const FieldPtr& F = pres.F;
    NCPoly w = w_expression(pres);
    auto G = w.gens();

    std::vector<SymbolAlgebraFF::Element> images;
    for (unsigned i = 0; i <= 2; ++i)
        for (unsigned j = 0; j <= 2; ++j)
            for (unsigned k = 0; k <= 2; ++k) {
                NCPoly mono = NCPoly::word(G, Word((std::size_t)i, 0));
                mono = mono * NCPoly::word(G, Word((std::size_t)j, 1));
                for (unsigned kk = 0; kk < k; ++kk) mono = mono * w;
                images.push_back(phi.eval(mono));
            }

    // common denominator across all coordinates, so one polynomial scaling
    // preserves linear independence over F
    UPoly lcm = UPoly::constant(F->one());
    auto fold = [&](const RationalFunction& r) {
        UPoly g = gcd(lcm, r.den());
        lcm = lcm * divmod(r.den(), g).first;
    };
    for (const auto& img : images)
        for (const auto& coord : img.coords()) {
            fold(coord.a());
            fold(coord.b());
        }
    FuncElem scale = phi.function_field->from_poly(lcm);

    // collect polynomial coefficient vectors over F
    int maxdeg = 0;
    std::vector<std::vector<UPoly>> rows; // per image: 18 polynomials (a and b per coordinate)
    for (const auto& img : images) {
        std::vector<UPoly> polys;
        auto scaled = img.scaled(scale);
        for (const auto& coord : scaled.coords()) {
            if (!coord.a().den().is_one() || !coord.b().den().is_one())
                throw verification_error("common denominator did not clear a coordinate");
            polys.push_back(coord.a().num());
            polys.push_back(coord.b().num());
            maxdeg = std::max({maxdeg, coord.a().num().degree(), coord.b().num().degree()});
        }
        rows.push_back(std::move(polys));
    }
    std::size_t width = rows[0].size() * (std::size_t)(maxdeg + 1);
    Matrix<FieldElement> M(rows.size(), width, F->zero());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t p = 0; p < rows[r].size(); ++p)
            for (int d = 0; d <= rows[r][p].degree(); ++d)
                M.at(r, p * (std::size_t)(maxdeg + 1) + (std::size_t)d) = rows[r][p].coeff((std::size_t)d);
    return rank(M);
}

} // namespace cga
