#ifndef CGA_PRESENTATION_HPP
#define CGA_PRESENTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "cga/matrix.hpp"
#include "cga/multipoly.hpp"

namespace cga {

// Coefficients of the monic cubic
//   Phi(Z,X,Y) = Z^3 - r Y Z^2 - (e X Y + t Y^2) Z
//                - (alpha X^3 + beta X^2 Y + gamma X Y^2 + delta Y^3)
// over a field of characteristic != 3 containing a primitive cube root of
// unity.
struct CubicPresentation {
    FieldPtr F;
    FieldElement r, t, e, alpha, beta, gamma, delta;
};

CubicPresentation make_cubic_presentation(const FieldPtr& F, const FieldElement& r,
                                          const FieldElement& t, const FieldElement& e,
                                          const FieldElement& alpha, const FieldElement& beta,
                                          const FieldElement& gamma, const FieldElement& delta);

// Characteristic-3 input Phi(Z,X,Y) = Z^3 - e XYZ - f(X,Y); stored either as
// the e = 0 branch or in the normalized e != 0 shape
//   Z^3 - (X^2 - Y^2) Z - (alpha X^3 + beta X^2 Y + gamma X Y^2 + delta Y^3)
// with the change-of-variables matrix retained.
enum class Char3Branch { e_zero, e_nonzero_normalized };

struct Char3Presentation {
    FieldPtr F;
    Char3Branch branch;
    FieldElement alpha, beta, gamma, delta;
    // (X,Y) -> (X',Y') linear substitution that produced the normalized form
    std::optional<Matrix<FieldElement>> transform;
    std::optional<FieldElement> original_e;
};

// General monic form Phi(Z,X_1,..,X_n) = Z^d - sum f_k Z^{d-k}, deg f_k = k.
struct GeneralPresentation {
    FieldPtr F;
    unsigned d = 0, n = 0;
    std::vector<std::string> vars; // X variables only
    std::vector<MultiPoly> f;      // f[k-1] = f_k (possibly zero)
};

GeneralPresentation make_general_presentation(const FieldPtr& F, unsigned d,
                                              std::vector<std::string> vars,
                                              std::vector<MultiPoly> f);

// Plane affine curve in two commuting coordinates plus a human label saying
// which construction produced it.
struct CurveModel {
    MultiPoly poly;
    std::string label;
};

struct CurvePoint {
    FieldPtr L; // extension of the presentation's field
    std::vector<FieldElement> coords;
};

// Exact check that the point satisfies the curve polynomial.
bool point_on_curve(const CurvePoint& pt, const CurveModel& curve);

// An n-tuple of m x m matrices over a field extension, claimed to represent a
// generalized Clifford algebra.
struct MatrixRep {
    FieldPtr K;
    std::size_t dim = 0;
    std::vector<Matrix<FieldElement>> mats;
};

} // namespace cga

#endif
