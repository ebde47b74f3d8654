#include "cga/char3.hpp"

#include "cga/decompose.hpp"

namespace cga {

namespace {
constexpr std::uint8_t X = 0, Y1 = 1, Y2 = 2;

void require_char3(const FieldPtr& F) {
    if (F->characteristic() != 3)
        throw precondition_error("this family requires characteristic 3");
}

void require_branch(const Char3Presentation& p, Char3Branch b, const char* what) {
    if (p.branch != b) throw precondition_error(std::string("wrong branch for ") + what);
}

const std::vector<std::string> zxy{"Z", "X", "Y"};

MultiPoly cubic_form(const FieldPtr& F, const FieldElement& alpha, const FieldElement& beta,
                     const FieldElement& gamma, const FieldElement& delta) {
    MultiPoly f(F, zxy);
    f.add_term({0, 3, 0}, alpha);
    f.add_term({0, 2, 1}, beta);
    f.add_term({0, 1, 2}, gamma);
    f.add_term({0, 0, 3}, delta);
    return f;
}
} // namespace

Char3Presentation make_char3_e_zero(const FieldPtr& F, const FieldElement& alpha,
                                    const FieldElement& beta, const FieldElement& gamma,
                                    const FieldElement& delta) {
    require_char3(F);
    if (alpha.is_zero()) throw precondition_error("alpha must be nonzero");
    return Char3Presentation{F, Char3Branch::e_zero, alpha, beta, gamma, delta,
                             std::nullopt, std::nullopt};
}

Char3Presentation make_char3_normalized(const FieldPtr& F, const FieldElement& alpha,
                                        const FieldElement& beta, const FieldElement& gamma,
                                        const FieldElement& delta) {
    require_char3(F);
    if (alpha.is_zero()) throw precondition_error("alpha must be nonzero");
    auto I = Matrix<FieldElement>::identity(2, F->zero(), F->one());
    return Char3Presentation{F, Char3Branch::e_nonzero_normalized, alpha, beta, gamma, delta,
                             I, F->one()};
}

MultiPoly char3_raw_phi_polynomial(const FieldPtr& F, const FieldElement& e,
                                   const FieldElement& alpha, const FieldElement& beta,
                                   const FieldElement& gamma, const FieldElement& delta) {
    MultiPoly phi(F, zxy);
    phi.add_term({3, 0, 0}, F->one());
    phi.add_term({1, 1, 1}, -e);
    return phi - cubic_form(F, alpha, beta, gamma, delta);
}

MultiPoly char3_phi_polynomial(const Char3Presentation& p) {
    const FieldPtr& F = p.F;
    MultiPoly phi(F, zxy);
    phi.add_term({3, 0, 0}, F->one());
    if (p.branch == Char3Branch::e_nonzero_normalized) {
        phi.add_term({1, 2, 0}, -F->one());
        phi.add_term({1, 0, 2}, F->one());
    }
    return phi - cubic_form(F, p.alpha, p.beta, p.gamma, p.delta);
}

Char3Presentation normalize_char3(const FieldPtr& F, const FieldElement& e,
                                  const FieldElement& alpha, const FieldElement& beta,
                                  const FieldElement& gamma, const FieldElement& delta) {
    require_char3(F);
    if (e.is_zero()) throw precondition_error("normalization applies to the e != 0 branch only");
    MultiPoly raw = char3_raw_phi_polynomial(F, e, alpha, beta, gamma, delta);

    // X2 = eX + Y, Y2 = eX - Y; inverse X = -e^-1 (X2 + Y2), Y = -X2 + Y2
    FieldElement einv = e.inverse();
    MultiPoly Zv = MultiPoly::variable(F, zxy, 0);
    MultiPoly Xv = MultiPoly::variable(F, zxy, 1);
    MultiPoly Yv = MultiPoly::variable(F, zxy, 2);
    MultiPoly Xsub = (Xv + Yv).scaled(-einv);
    MultiPoly Ysub = -Xv + Yv;
    MultiPoly norm = raw.subst({Zv, Xsub, Ysub});

    auto cf = [&](unsigned z, unsigned x, unsigned y) { return norm.coeff({z, x, y}); };
    if (!cf(3, 0, 0).is_one() || !(-cf(1, 2, 0)).is_one() || !cf(1, 0, 2).is_one() ||
        !cf(2, 0, 0).is_zero() || !cf(2, 1, 0).is_zero() || !cf(2, 0, 1).is_zero() ||
        !cf(1, 1, 1).is_zero())
        throw verification_error("normalization did not produce the expected shape");
    FieldElement a2 = -cf(0, 3, 0), b2 = -cf(0, 2, 1), g2 = -cf(0, 1, 2), d2 = -cf(0, 0, 3);
    if (a2.is_zero())
        throw precondition_error("normalized alpha vanishes; the family hypothesis alpha != 0 fails");

    Matrix<FieldElement> M(2, 2, F->zero());
    M.at(0, 0) = e;
    M.at(0, 1) = F->one();
    M.at(1, 0) = e;
    M.at(1, 1) = -F->one();

    Char3Presentation out{F, Char3Branch::e_nonzero_normalized, a2, b2, g2, d2, M, e};

    // round trip: substituting X2 = eX + Y, Y2 = eX - Y into the normalized
    // polynomial must recover the raw input exactly
    MultiPoly Xfwd = Xv.scaled(e) + Yv;
    MultiPoly Yfwd = Xv.scaled(e) - Yv;
    MultiPoly back = char3_phi_polynomial(out).subst({Zv, Xfwd, Yfwd});
    if (back != raw)
        throw verification_error("normalization round trip failed");
    return out;
}

FieldElement char3_delta(const Char3Presentation& p) {
    require_branch(p, Char3Branch::e_zero, "the binary-cubic invariant");
    return -(p.gamma.pow(3) * p.alpha) + p.gamma.pow(2) * p.beta.pow(2) -
           p.beta.pow(3) * p.delta + p.beta.pow(6);
}

bool char3_azumaya_obstruction(const Char3Presentation& p) {
    if (p.branch == Char3Branch::e_zero) return p.beta.is_zero() && p.gamma.is_zero();
    return char3_offset(p).is_zero();
}

FieldElement char3_offset(const Char3Presentation& p) {
    require_branch(p, Char3Branch::e_nonzero_normalized, "the s-offset");
    return p.delta + p.beta.pow(3) + p.beta;
}

NCPoly char3_w_expression(const Char3Presentation& p) {
    auto G = cubic_generators(p.F);
    NCPoly w(G);
    if (p.branch == Char3Branch::e_zero) {
        // w = beta y2 + gamma x + y1^2
        w.add_term({Y2}, p.beta);
        w.add_term({X}, p.gamma);
        w.add_term({Y1, Y1}, p.F->one());
    } else {
        // w = y2 y1 - x^2 + (1 - gamma) x
        w.add_term({Y2, Y1}, p.F->one());
        w.add_term({X, X}, -p.F->one());
        w.add_term({X}, p.F->one() - p.gamma);
    }
    return w;
}

RewriteSystemPtr char3_rewrite_system(const Char3Presentation& p) {
    const FieldPtr& F = p.F;
    auto G = cubic_generators(F);
    std::vector<RewriteRule> rules;
    FieldElement one = F->one();
    if (p.branch == Char3Branch::e_zero) {
        rules.push_back({Word{X, X, X}, NCPoly::constant(G, p.alpha)});
        {
            NCPoly rhs = NCPoly::word(G, {X, Y1});
            rhs.add_term({}, -p.beta);
            rules.push_back({Word{Y1, X}, rhs});
        }
        {
            NCPoly rhs = NCPoly::word(G, {X, Y2});
            rhs.add_term({Y1}, -one);
            rules.push_back({Word{Y2, X}, rhs});
        }
        {
            NCPoly rhs = NCPoly::word(G, {Y2, Y1});
            rhs.add_term({}, p.gamma);
            rules.push_back({Word{Y1, Y2}, rhs});
        }
        {
            NCPoly rhs = NCPoly::word(G, {Y1, Y1, Y1});
            rhs.add_term({}, p.delta);
            rules.push_back({Word{Y2, Y2, Y2}, rhs});
        }
    } else {
        {
            NCPoly rhs = NCPoly::generator(G, X);
            rhs.add_term({}, p.alpha);
            rules.push_back({Word{X, X, X}, rhs});
        }
        {
            NCPoly rhs = NCPoly::word(G, {X, Y1});
            rhs.add_term({Y1}, one);
            rules.push_back({Word{Y1, X}, rhs});
        }
        {
            NCPoly rhs = NCPoly::word(G, {X, Y2});
            rhs.add_term({Y2}, F->from_integer(2));
            rules.push_back({Word{Y2, X}, rhs});
        }
        {
            NCPoly rhs = NCPoly::word(G, {Y2, Y1});
            rhs.add_term({X}, -one);
            rhs.add_term({}, p.gamma);
            rules.push_back({Word{Y1, Y2}, rhs});
        }
        {
            NCPoly rhs = NCPoly::word(G, {Y1, Y1, Y1}).scaled(-one);
            rhs.add_term({}, char3_offset(p));
            rules.push_back({Word{Y2, Y2, Y2}, rhs});
        }
    }
    return RewriteSystem::make(G, std::move(rules));
}

CurveModel char3_curve(const Char3Presentation& p) {
    const FieldPtr& F = p.F;
    std::vector<std::string> rs{"r", "s"};
    MultiPoly E(F, rs);
    if (p.branch == Char3Branch::e_zero) {
        E.add_term({0, 2}, F->one());
        E.add_term({3, 0}, -F->one());
        E.add_term({0, 0}, -char3_delta(p));
        return CurveModel{E, "curve s^2 = r^3 + Delta"};
    }
    FieldElement off = char3_offset(p);
    E.add_term({0, 2}, F->one());
    E.add_term({3, 0}, -F->one());
    E.add_term({2, 0}, -F->one());
    E.add_term({1, 0}, p.gamma.pow(2) + p.gamma);
    E.add_term({0, 0}, p.alpha.pow(2) + p.alpha * p.gamma.pow(3) - p.alpha * p.gamma - off.pow(2));
    return CurveModel{E, "curve of the normalized e != 0 family"};
}

SmoothnessReport char3_singular_report(const Char3Presentation& p) {
    CurveModel E = char3_curve(p);
    SmoothnessReport out;
    const FieldPtr& F = p.F;
    if (!F->is_finite() || F->size() > 32) {
        out.detail = "exhaustive search limited to small finite coefficient fields";
        return out;
    }
    for (unsigned deg = 1; deg <= 3; ++deg) {
        FieldPtr L = F;
        if (deg > 1) {
            bool made = false;
            mpz_class q = F->size();
            mpz_class combos = 1;
            for (unsigned i = 0; i < deg; ++i) combos *= q;
            for (mpz_class c = 0; c < combos && !made; ++c) {
                std::vector<FieldElement> mp;
                mpz_class idx = c;
                for (unsigned i = 0; i < deg; ++i) {
                    mp.push_back(F->element_at(idx % q));
                    idx /= q;
                }
                mp.push_back(F->one());
                try {
                    L = F->extended("w", mp);
                    made = true;
                } catch (const precondition_error&) {
                }
            }
            if (!made) continue;
        }
        MultiPoly EL = E.poly.embedded(L);
        MultiPoly Er = EL.derivative(0), Es = EL.derivative(1);
        mpz_class n = L->size();
        for (mpz_class i = 0; i < n; ++i)
            for (mpz_class j = 0; j < n; ++j) {
                std::vector<FieldElement> pt{L->element_at(i), L->element_at(j)};
                if (EL.eval(pt).is_zero() && Er.eval(pt).is_zero() && Es.eval(pt).is_zero()) {
                    out.singular_found = true;
                    if (deg == 1) out.singular_points.push_back(pt);
                    else
                        out.detail += (out.detail.empty() ? "" : "; ") +
                                      std::string("singular point (") + pt[0].str() + ", " +
                                      pt[1].str() + ") over " + L->describe();
                }
            }
    }
    if (out.detail.empty())
        out.detail = out.singular_found ? "singular points found by exhaustive search"
                                        : "no singular point over extensions of degree <= 3";
    return out;
}

namespace {
void check_zero(CheckReport& rep, const std::string& name, const NCPoly& nf) {
    rep.items.push_back({name, nf.is_zero(), nf.is_zero() ? "" : nf.str()});
}
} // namespace

CheckReport char3_centrality_report(const Char3Presentation& p) {
    auto rs = char3_rewrite_system(p);
    auto G = rs->gens();
    CheckReport rep;
    NCPoly w = char3_w_expression(p);
    NCPoly y1c = NCPoly::word(G, {Y1, Y1, Y1});
    NCPoly y2c = NCPoly::word(G, {Y2, Y2, Y2});
    const char* cnames[3] = {"w", "y1^3", "y2^3"};
    const NCPoly* cs[3] = {&w, &y1c, &y2c};
    const char* gnames[3] = {"x", "y1", "y2"};
    for (int ci = 0; ci < 3; ++ci)
        for (std::size_t gi = 0; gi < 3; ++gi) {
            NCPoly g = NCPoly::generator(G, gi);
            check_zero(rep, std::string("[") + cnames[ci] + ", " + gnames[gi] + "]",
                       rs->normal_form(*cs[ci] * g - g * *cs[ci]));
        }
    if (p.branch == Char3Branch::e_zero && !p.beta.is_zero()) {
        // z = beta^-1 x y1 satisfies x z - z x = x and z^3 - z = alpha beta^-3 y1^3
        NCPoly z = NCPoly::word(G, {X, Y1}).scaled(p.beta.inverse());
        NCPoly x = NCPoly::generator(G, X);
        check_zero(rep, "x*z - z*x - x", rs->normal_form(x * z - z * x - x));
        NCPoly rhs = NCPoly::word(G, {Y1, Y1, Y1}).scaled(p.alpha * p.beta.inverse().pow(3));
        check_zero(rep, "z^3 - z - alpha*beta^-3*y1^3", rs->normal_form(z.pow(3) - z - rhs));
    }
    return rep;
}

CheckReport char3_identity_report(const Char3Presentation& p) {
    auto rs = char3_rewrite_system(p);
    auto G = rs->gens();
    CheckReport rep;
    NCPoly x = NCPoly::generator(G, X);
    NCPoly w = char3_w_expression(p);

    if (p.branch == Char3Branch::e_zero) {
        NCPoly y = NCPoly::generator(G, Y2) - NCPoly::generator(G, Y1);
        check_zero(rep, "x^3 - alpha", rs->normal_form(x.pow(3) - NCPoly::constant(G, p.alpha)));
        check_zero(rep, "y^3 - delta", rs->normal_form(y.pow(3) - NCPoly::constant(G, p.delta)));
        check_zero(rep, "x^2*y - beta",
                   rs->normal_form(star_product<NCPoly>({{x, 2}, {y, 1}}) -
                                   NCPoly::constant(G, p.beta)));
        check_zero(rep, "x*y^2 - gamma",
                   rs->normal_form(star_product<NCPoly>({{x, 1}, {y, 2}}) -
                                   NCPoly::constant(G, p.gamma)));
        if (!p.beta.is_zero()) {
            // w^3 + Delta = (y1^3 - beta^3)^2
            NCPoly y1c = NCPoly::word(G, {Y1, Y1, Y1});
            NCPoly rhs = (y1c - NCPoly::constant(G, p.beta.pow(3))).pow(2);
            check_zero(rep, "w^3 + Delta - (y1^3 - beta^3)^2",
                       rs->normal_form(w.pow(3) + NCPoly::constant(G, char3_delta(p)) - rhs));
        }
    } else {
        NCPoly y = NCPoly::generator(G, Y1) + NCPoly::generator(G, Y2);
        y.add_term({}, -p.beta); // y0 = -beta
        check_zero(rep, "x^3 - x - alpha",
                   rs->normal_form(x.pow(3) - x - NCPoly::constant(G, p.alpha)));
        check_zero(rep, "y^3 + y - delta",
                   rs->normal_form(y.pow(3) + y - NCPoly::constant(G, p.delta)));
        check_zero(rep, "x^2*y - y - beta",
                   rs->normal_form(star_product<NCPoly>({{x, 2}, {y, 1}}) - y -
                                   NCPoly::constant(G, p.beta)));
        check_zero(rep, "x*y^2 + x - gamma",
                   rs->normal_form(star_product<NCPoly>({{x, 1}, {y, 2}}) + x -
                                   NCPoly::constant(G, p.gamma)));
        // w^3 = offset y1^3 - y1^6 + w^2 + (g^2+g) w - a^2 - a g^3 + a g
        NCPoly y1c = NCPoly::word(G, {Y1, Y1, Y1});
        NCPoly rhs = y1c.scaled(char3_offset(p)) - y1c.pow(2) + w.pow(2) +
                     w.scaled(p.gamma.pow(2) + p.gamma);
        rhs.add_term({}, -(p.alpha.pow(2)) - p.alpha * p.gamma.pow(3) + p.alpha * p.gamma);
        check_zero(rep, "w^3 - (offset*y1^3 - y1^6 + w^2 + (g^2+g)*w - (a^2 + a*g^3 - a*g))",
                   rs->normal_form(w.pow(3) - rhs));
    }
    return rep;
}

Char3Image char3_simple_image(const Char3Presentation& p, const CurvePoint& pt) {
    const FieldPtr& F = p.F;
    if (!pt.L->extends(*F))
        throw precondition_error("the point's field does not extend the coefficient field");
    FieldPtr L = pt.L;
    FieldElement alphaL = p.alpha.embedded(L);

    if (p.branch == Char3Branch::e_zero) {
        if (!p.beta.is_zero()) {
            if (pt.coords.size() != 2) throw precondition_error("expected a point (r0, s0)");
            CurveModel E = char3_curve(p);
            if (!point_on_curve(pt, CurveModel{E.poly.embedded(L), E.label}))
                throw precondition_error("the point does not lie on the curve");
            FieldElement s0 = pt.coords[1];
            FieldElement a = alphaL * p.beta.embedded(L).inverse().pow(3) *
                             (s0 + p.beta.pow(3).embedded(L));
            return {SymbolAlgebraF::artin_schreier(3, a, alphaL), true, false, ""};
        }
        if (p.gamma.is_zero()) {
            if (pt.coords.size() != 1)
                throw precondition_error("this case takes a single scalar coordinate s0");
            FieldElement s0 = pt.coords[0];
            if (s0.is_zero())
                throw precondition_error("s0 must be nonzero (the localization inverts y1)");
            FieldElement a = alphaL * (s0.pow(3) + p.delta.embedded(L)) * s0.inverse().pow(3);
            return {SymbolAlgebraF::artin_schreier(3, a, alphaL), false, true,
                    "the unlocalized algebra is not Azumaya (sending y1 to 0 gives a "
                    "commutative image)"};
        }
        throw precondition_error(
            "case beta = 0, gamma != 0 is the mirror presentation (swap x and y); "
            "swap the input variables and rerun");
    }

    if (pt.coords.size() != 2) throw precondition_error("expected a point (r0, s0)");
    CurveModel E = char3_curve(p);
    if (!point_on_curve(pt, CurveModel{E.poly.embedded(L), E.label}))
        throw precondition_error("the point does not lie on the curve");
    FieldElement off = char3_offset(p).embedded(L);
    FieldElement s0 = pt.coords[1];
    if (!char3_offset(p).is_zero()) {
        if (s0 != off)
            return {SymbolAlgebraF::artin_schreier(3, alphaL, s0 - off), true, false, ""};
        return {SymbolAlgebraF::artin_schreier(3, -alphaL, off), true, false,
                "s0 sits at the offset; the image is generated through y2 over the r0-field"};
    }
    if (s0.is_zero())
        throw precondition_error("s0 must be nonzero when the offset vanishes "
                                 "(only the localization at y1 is classified)");
    std::string note = "offset = 0: classification applies to the localization at y1";
    if ((p.gamma.pow(3) - p.gamma - p.alpha).is_zero())
        note += "; gamma^3 - gamma - alpha = 0, so the base field itself is a simple image "
                "and the algebra is not Azumaya";
    return {SymbolAlgebraF::artin_schreier(3, alphaL, s0), false, true, note};
}

} // namespace cga
