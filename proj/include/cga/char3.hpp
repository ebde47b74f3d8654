#ifndef CGA_CHAR3_HPP
#define CGA_CHAR3_HPP

#include "cga/char0.hpp"
#include "cga/presentation.hpp"
#include "cga/rewrite.hpp"
#include "cga/symbol.hpp"

namespace cga {

// Characteristic-3 structure theory for Phi(Z,X,Y) = Z^3 - e XYZ - f(X,Y).
// The e = 0 branch is the ordinary Clifford algebra of the binary cubic f;
// the e != 0 branch is stored in the normalized shape with relations
// x^3 - x = alpha, y^3 + y = delta, x^2*y - y = beta, x*y^2 + x = gamma.

Char3Presentation make_char3_e_zero(const FieldPtr& F, const FieldElement& alpha,
                                    const FieldElement& beta, const FieldElement& gamma,
                                    const FieldElement& delta);

// Input already in the normalized e != 0 shape (identity transform).
Char3Presentation make_char3_normalized(const FieldPtr& F, const FieldElement& alpha,
                                        const FieldElement& beta, const FieldElement& gamma,
                                        const FieldElement& delta);

// Exact change of variables taking Z^3 - e XYZ - f(X,Y), e != 0, to the
// normalized shape; records the 2x2 transform and verifies the round trip.
Char3Presentation normalize_char3(const FieldPtr& F, const FieldElement& e,
                                  const FieldElement& alpha, const FieldElement& beta,
                                  const FieldElement& gamma, const FieldElement& delta);

// Phi as a commutative polynomial in (Z, X, Y) for either branch shape.
MultiPoly char3_phi_polynomial(const Char3Presentation& pres);
// Raw-input Phi for the e != 0 family (used by the normalization oracle).
MultiPoly char3_raw_phi_polynomial(const FieldPtr& F, const FieldElement& e,
                                   const FieldElement& alpha, const FieldElement& beta,
                                   const FieldElement& gamma, const FieldElement& delta);

// e = 0 only: the discriminant-like invariant of the binary cubic.
FieldElement char3_delta(const Char3Presentation& pres);
// Azumaya obstruction: e = 0 branch flags beta = gamma = 0; the normalized
// branch flags delta + beta^3 + beta = 0.
bool char3_azumaya_obstruction(const Char3Presentation& pres);
// The shift delta + beta^3 + beta of the normalized branch.
FieldElement char3_offset(const Char3Presentation& pres);

NCPoly char3_w_expression(const Char3Presentation& pres);
RewriteSystemPtr char3_rewrite_system(const Char3Presentation& pres);

CurveModel char3_curve(const Char3Presentation& pres);
// Exhaustive singular-point search over small extensions (degree <= 3).
SmoothnessReport char3_singular_report(const Char3Presentation& pres);

CheckReport char3_centrality_report(const Char3Presentation& pres);
CheckReport char3_identity_report(const Char3Presentation& pres);

struct Char3Image {
    SymbolAlgebraF::Ptr algebra;
    bool azumaya;   // the source algebra itself is Azumaya in this case
    bool localized; // the image classifies a localization, not C_Phi itself
    std::string note;
};

// Simple-image formulas per case.  Points are (r0, s0); the e = 0 branch with
// beta = gamma = 0 takes a single nonzero scalar coordinate instead.
Char3Image char3_simple_image(const Char3Presentation& pres, const CurvePoint& pt);

} // namespace cga

#endif
