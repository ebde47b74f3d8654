#ifndef CGA_REPCHECK_HPP
#define CGA_REPCHECK_HPP

#include "cga/presentation.hpp"

namespace cga {

// Verification machinery for candidate matrix representations of the
// generalized Clifford algebra of a general monic form.

struct RepWitness {
    MultiPoly::Exps monomial;          // X-monomial whose coefficient matrix is nonzero
    Matrix<FieldElement> coeff;
};

struct RepVerdict {
    bool ok;
    std::optional<RepWitness> witness; // first failing coefficient on failure
};

// Expands M(X) = sum X_j A_j over the commutative polynomial ring with matrix
// coefficients and checks Phi(M(X), X_1..X_n) = 0 as a polynomial identity.
// Over an infinite field this is equivalent to the all-scalars defining
// condition; over any field it is the stronger identity the structure proofs
// use.
RepVerdict is_representation(const GeneralPresentation& gp, const MatrixRep& rep);

// Minimal-polynomial property: I, M, M^2, .., M^{d-1} are linearly
// independent over the rational function field (rank check on stacked
// coefficient rows), so no proper monic divisor of Phi annihilates M.
bool minimal_poly_check(const GeneralPresentation& gp, const MatrixRep& rep);

enum class DivisibilityVerdict { permitted, impossible };

// Dimension gate for absolutely irreducible Phi: any representation dimension
// must be divisible by d.
DivisibilityVerdict divisibility_audit(const GeneralPresentation& gp, unsigned m);

MatrixRep conjugated(const MatrixRep& rep, const Matrix<FieldElement>& Q);

// Searches for a linear factor Z - (b_1 X_1 + ... + b_n X_n) of Phi over
// every extension of degree <= max_ext_degree of a finite base field.  Since
// Phi is monic in Z, any linear factor has this shape, and for the plane
// cubic case (n = 2, d = 3) the factor field has degree at most 3, so a clean
// scan up to degree 3 certifies absolute irreducibility.
bool no_linear_factor_over_small_extensions(const GeneralPresentation& gp,
                                            unsigned max_ext_degree = 3);

} // namespace cga

#endif
