#ifndef CGA_CHAR0_HPP
#define CGA_CHAR0_HPP

#include "cga/presentation.hpp"
#include "cga/rewrite.hpp"
#include "cga/symbol.hpp"

namespace cga {

// Structure theory of C_Phi for the cubic two-variable family in
// characteristic != 3 (primitive cube root of unity required).

struct Char0Invariants {
    FieldElement D1, D2, D;
};

Char0Invariants char0_invariants(const CubicPresentation& pres);

// Alphabet x, y1, y2 with the graded order that keeps every generated rule
// decreasing: weights x=1, y1=2, y2=3; precedence y1 > y2 > x.
GenSetPtr cubic_generators(const FieldPtr& F);

// y0 = (3 alpha)^-1 (e x^2 + beta x + alpha r)
NCPoly y0_expression(const CubicPresentation& pres);
// w = x^-1 y2 y1 + rho^2 (D1/3alpha) x + (D2/9alpha) x^-1, with x^-1
// eliminated through x^-1 = alpha^-1 x^2
NCPoly w_expression(const CubicPresentation& pres);

RewriteSystemPtr char0_rewrite_system(const CubicPresentation& pres);

CurveModel char0_curve(const CubicPresentation& pres);

struct SmoothnessReport {
    bool singular_found = false;
    std::vector<std::vector<FieldElement>> singular_points; // exhaustive finite-field search
    std::string detail;
};
SmoothnessReport curve_smoothness(const CurveModel& curve);

struct CheckReport {
    struct Item {
        std::string name;
        bool ok;
        std::string witness; // nonzero normal form when a check fails
    };
    std::vector<Item> items;
    bool all_ok() const {
        for (const auto& i : items)
            if (!i.ok) return false;
        return true;
    }
};

// w, y1^3 and y2^3 commute with each generator in the quotient.
CheckReport char0_centrality_report(const CubicPresentation& pres);
// The solved cubic relation and the four original presentation relations
// (through y = y0 + y1 + y2) reduce to zero.
CheckReport char0_identity_report(const CubicPresentation& pres);

struct Char0Image {
    SymbolAlgebraF::Ptr algebra;
    bool s0_nonzero_branch;
};

// Simple homomorphic image at a curve point: (alpha, S0) when S0 != 0, else
// (rho^2 e R0 - D, alpha), over the point's field.  Refuses when D = 0 or
// alpha has a cube root; an undecidable cube-root status requires the
// caller's explicit assertion.
Char0Image char0_simple_image(const CubicPresentation& pres, const CurvePoint& pt,
                              bool assert_alpha_not_cube = false);

// Explicit 3x3 matrices over L for the image at a point with S0 != 0; L must
// contain a cube root of alpha.  All four presentation relations are checked
// exactly before returning.
MatrixRep char0_build_representation(const CubicPresentation& pres, const CurvePoint& pt,
                                     const FieldPtr& L);

} // namespace cga

#endif
