#include "cga/repcheck.hpp"

#include <numeric>

namespace cga {

GeneralPresentation make_general_presentation(const FieldPtr& F, unsigned d,
                                              std::vector<std::string> vars,
                                              std::vector<MultiPoly> f) {
    if (d < 2) throw precondition_error("degree must be at least 2");
    if (vars.empty()) throw precondition_error("at least one X variable is required");
    if (f.size() != d) throw precondition_error("expected d coefficient forms f_1..f_d");
    for (unsigned k = 1; k <= d; ++k) {
        const MultiPoly& fk = f[k - 1];
        if (fk.nvars() != vars.size())
            throw precondition_error("f_k variable count mismatch");
        if (!fk.is_zero() && !fk.is_homogeneous(k))
            throw precondition_error("f_" + std::to_string(k) + " is not homogeneous of degree " +
                                     std::to_string(k));
    }
    return GeneralPresentation{F, d, (unsigned)vars.size(), std::move(vars), std::move(f)};
}

namespace {

Matrix<MultiPoly> linear_pencil(const GeneralPresentation& gp, const MatrixRep& rep) {
    const FieldPtr& K = rep.K;
    MultiPoly zero(K, gp.vars);
    Matrix<MultiPoly> M(rep.dim, rep.dim, zero);
    for (unsigned j = 0; j < gp.n; ++j) {
        MultiPoly xj = MultiPoly::variable(K, gp.vars, j);
        for (std::size_t a = 0; a < rep.dim; ++a)
            for (std::size_t b = 0; b < rep.dim; ++b) {
                const FieldElement& c = rep.mats[j].at(a, b);
                if (c.is_zero()) continue;
                M.at(a, b) = M.at(a, b) + xj.scaled(c);
            }
    }
    return M;
}

void check_rep_shape(const GeneralPresentation& gp, const MatrixRep& rep) {
    if (rep.mats.size() != gp.n)
        throw precondition_error("expected one matrix per generator");
    if (!rep.K->extends(*gp.F) && !rep.K->same(*gp.F))
        throw precondition_error("matrix field does not extend the presentation field");
    for (const auto& m : rep.mats)
        if (m.rows() != rep.dim || m.cols() != rep.dim)
            throw precondition_error("matrix dimension mismatch");
}

} // namespace

RepVerdict is_representation(const GeneralPresentation& gp, const MatrixRep& rep) {
    check_rep_shape(gp, rep);
    const FieldPtr& K = rep.K;
    MultiPoly zero(K, gp.vars);
    MultiPoly one = MultiPoly::constant(K, gp.vars, K->one());
    Matrix<MultiPoly> M = linear_pencil(gp, rep);

    std::vector<Matrix<MultiPoly>> pw;
    pw.push_back(Matrix<MultiPoly>::identity(rep.dim, zero, one));
    for (unsigned k = 1; k <= gp.d; ++k) pw.push_back(pw.back() * M);

    Matrix<MultiPoly> P = pw[gp.d];
    for (unsigned k = 1; k <= gp.d; ++k) {
        if (gp.f[k - 1].is_zero()) continue;
        MultiPoly fk = gp.f[k - 1].embedded(K);
        P = P - pw[gp.d - k].scaled(fk);
    }
    if (P.is_zero()) return {true, std::nullopt};

    // witness: the lexicographically first monomial carrying a nonzero matrix
    std::optional<MultiPoly::Exps> first;
    for (std::size_t a = 0; a < rep.dim; ++a)
        for (std::size_t b = 0; b < rep.dim; ++b)
            for (const auto& [e, c] : P.at(a, b).terms())
                if (!first || e < *first) first = e;
    Matrix<FieldElement> wc(rep.dim, rep.dim, K->zero());
    for (std::size_t a = 0; a < rep.dim; ++a)
        for (std::size_t b = 0; b < rep.dim; ++b) wc.at(a, b) = P.at(a, b).coeff(*first);
    return {false, RepWitness{*first, wc}};
}

bool minimal_poly_check(const GeneralPresentation& gp, const MatrixRep& rep) {
    check_rep_shape(gp, rep);
    if (gp.d == 1) return true;
    if (rep.dim == 0) return false;
    const FieldPtr& K = rep.K;
    MultiPoly zero(K, gp.vars);
    MultiPoly one = MultiPoly::constant(K, gp.vars, K->one());
    Matrix<MultiPoly> M = linear_pencil(gp, rep);

    // rows = flattened I, M, ..., M^{d-1}; fraction-free elimination decides
    // the rank over the rational function field
    std::vector<std::vector<MultiPoly>> rows;
    Matrix<MultiPoly> cur = Matrix<MultiPoly>::identity(rep.dim, zero, one);
    for (unsigned k = 0; k < gp.d; ++k) {
        std::vector<MultiPoly> row;
        for (std::size_t a = 0; a < rep.dim; ++a)
            for (std::size_t b = 0; b < rep.dim; ++b) row.push_back(cur.at(a, b));
        rows.push_back(std::move(row));
        cur = cur * M;
    }
    std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            MultiPoly pv = rows[rank][col], rv = rows[r][col];
            for (std::size_t c2 = 0; c2 < cols; ++c2)
                rows[r][c2] = rows[r][c2] * pv - rows[rank][c2] * rv;
        }
        ++rank;
    }
    return rank == gp.d;
}

DivisibilityVerdict divisibility_audit(const GeneralPresentation& gp, unsigned m) {
    return m % gp.d == 0 ? DivisibilityVerdict::permitted : DivisibilityVerdict::impossible;
}

MatrixRep conjugated(const MatrixRep& rep, const Matrix<FieldElement>& Q) {
    const FieldPtr& K = rep.K;
    auto Qi = inverse(Q, K->zero(), K->one());
    MatrixRep out{rep.K, rep.dim, {}};
    for (const auto& A : rep.mats) out.mats.push_back(Q * A * Qi);
    return out;
}

bool no_linear_factor_over_small_extensions(const GeneralPresentation& gp,
                                            unsigned max_ext_degree) {
    const FieldPtr& F = gp.F;
    if (!F->is_finite())
        throw precondition_error("the linear-factor scan needs a finite base field");
    for (unsigned deg = 1; deg <= max_ext_degree; ++deg) {
        FieldPtr L = F;
        if (deg > 1) {
            bool made = false;
            mpz_class q0 = F->size();
            mpz_class combos = 1;
            for (unsigned i = 0; i < deg; ++i) combos *= q0;
            for (mpz_class c = 0; c < combos && !made; ++c) {
                std::vector<FieldElement> mp;
                mpz_class idx = c;
                for (unsigned i = 0; i < deg; ++i) {
                    mp.push_back(F->element_at(idx % q0));
                    idx /= q0;
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
        // Phi is monic in Z, so a linear factor must be Z - sum b_j X_j;
        // it divides Phi iff substituting Z = sum b_j X_j kills Phi.
        mpz_class q = L->size();
        mpz_class combos = 1;
        for (unsigned j = 0; j < gp.n; ++j) combos *= q;
        for (mpz_class c = 0; c < combos; ++c) {
            MultiPoly z(L, gp.vars);
            mpz_class idx = c;
            for (unsigned j = 0; j < gp.n; ++j) {
                FieldElement bj = L->element_at(idx % q);
                idx /= q;
                z = z + MultiPoly::variable(L, gp.vars, j).scaled(bj);
            }
            MultiPoly acc = z.pow(gp.d);
            for (unsigned k = 1; k <= gp.d; ++k) {
                if (gp.f[k - 1].is_zero()) continue;
                acc = acc - gp.f[k - 1].embedded(L) * z.pow(gp.d - k);
            }
            if (acc.is_zero()) return false;
        }
    }
    return true;
}

} // namespace cga
